#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace walker {

// A point of the coordinate chart. Coordinates are numbered 1..4 throughout
// the public interface to match the usual subscript notation x1..x4.
struct Point {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;
  double x4 = 0.0;

  double coord(int axis) const;  // axis in 1..4
};

// Raised when a textual expression cannot be parsed. offset() is the byte
// position in the input where the problem was detected.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Raised when evaluation hits a point outside an expression's domain
// (division by zero).
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {
struct ExprNode;
using NodeRef = std::shared_ptr<const ExprNode>;
}  // namespace detail

// An immutable scalar function of (x1, x2, x3, x4), stored as an expression
// tree. Copies share structure; every operation returns a new value and never
// mutates its inputs, so fields can be evaluated concurrently.
class ScalarField {
 public:
  ScalarField();                 // the zero field
  ScalarField(double constant);  // implicit: constants embed naturally

  static ScalarField constant(double value);
  static ScalarField coordinate(int axis);  // axis in 1..4

  // Evaluate at a point. Throws EvalError when a denominator vanishes at p.
  double operator()(const Point& p) const;

  // Exact partial derivative with respect to x<axis>. Purely symbolic; no
  // numerical differentiation is involved.
  ScalarField derivative(int axis) const;

  // Bitmask of coordinates that occur in the tree (bit 0 for x1, ... bit 3
  // for x4). Simplification may drop occurrences, never add them.
  unsigned free_vars() const noexcept;
  bool depends_on(int axis) const noexcept;

  // True when the tree is literally the constant 0.
  bool is_zero() const noexcept;

  // Render in the same grammar accepted by parse_field. Constants are
  // printed with enough digits to round-trip exactly.
  std::string str() const;

  friend ScalarField operator+(const ScalarField& a, const ScalarField& b);
  friend ScalarField operator-(const ScalarField& a, const ScalarField& b);
  friend ScalarField operator*(const ScalarField& a, const ScalarField& b);
  friend ScalarField operator/(const ScalarField& a, const ScalarField& b);
  friend ScalarField operator-(const ScalarField& a);
  friend ScalarField pow(const ScalarField& base, int exponent);
  friend ScalarField sin(const ScalarField& f);
  friend ScalarField cos(const ScalarField& f);
  friend ScalarField exp(const ScalarField& f);

  friend ScalarField parse_field(std::string_view text);

 private:
  explicit ScalarField(detail::NodeRef node);
  detail::NodeRef node_;
};

// Parse the textual grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' INT)?
//   base   := NUMBER | 'x1'..'x4' | ('sin'|'cos'|'exp') '(' expr ')'
//           | '(' expr ')' | '-' base
// Exponents must be non-negative integer literals.
ScalarField parse_field(std::string_view text);

}  // namespace walker
