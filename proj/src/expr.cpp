#include "walker/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <utility>

namespace walker {

double Point::coord(int axis) const {
  switch (axis) {
    case 1: return x1;
    case 2: return x2;
    case 3: return x3;
    case 4: return x4;
    default: throw std::out_of_range("coordinate axis must be 1..4");
  }
}

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::runtime_error(message + " (at offset " + std::to_string(offset) + ")"),
      offset_(offset) {}

namespace detail {

enum class Op : unsigned char {
  Constant,
  Coordinate,
  Add,
  Sub,
  Mul,
  Div,
  Neg,
  Pow,
  Sin,
  Cos,
  Exp,
};

struct ExprNode {
  Op op;
  double value = 0.0;  // Constant
  int axis = 0;        // Coordinate, 1..4
  int exponent = 0;    // Pow
  NodeRef lhs;
  NodeRef rhs;
  unsigned vars = 0;   // union of the children's free coordinates
};

namespace {

NodeRef make_const(double v) {
  auto n = std::make_shared<ExprNode>();
  n->op = Op::Constant;
  n->value = v;
  return n;
}

NodeRef make_coord(int axis) {
  if (axis < 1 || axis > 4) throw std::out_of_range("coordinate axis must be 1..4");
  auto n = std::make_shared<ExprNode>();
  n->op = Op::Coordinate;
  n->axis = axis;
  n->vars = 1u << (axis - 1);
  return n;
}

bool is_const(const NodeRef& n, double v) {
  return n->op == Op::Constant && n->value == v;
}

NodeRef binary(Op op, NodeRef a, NodeRef b) {
  auto n = std::make_shared<ExprNode>();
  n->op = op;
  n->vars = a->vars | b->vars;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

// The make_* helpers below fold constants and strip additive/multiplicative
// identities. They are best-effort tidying for derivative output; evaluation
// semantics never rely on them, except that 0/g is only folded away when g is
// a nonzero literal so that genuine division-by-zero errors are preserved.

NodeRef make_add(NodeRef a, NodeRef b) {
  if (a->op == Op::Constant && b->op == Op::Constant) return make_const(a->value + b->value);
  if (is_const(a, 0.0)) return b;
  if (is_const(b, 0.0)) return a;
  return binary(Op::Add, std::move(a), std::move(b));
}

NodeRef make_neg(NodeRef a) {
  if (a->op == Op::Constant) return make_const(-a->value);
  if (a->op == Op::Neg) return a->lhs;
  auto n = std::make_shared<ExprNode>();
  n->op = Op::Neg;
  n->vars = a->vars;
  n->lhs = std::move(a);
  return n;
}

NodeRef make_sub(NodeRef a, NodeRef b) {
  if (a->op == Op::Constant && b->op == Op::Constant) return make_const(a->value - b->value);
  if (is_const(b, 0.0)) return a;
  if (is_const(a, 0.0)) return make_neg(std::move(b));
  return binary(Op::Sub, std::move(a), std::move(b));
}

NodeRef make_mul(NodeRef a, NodeRef b) {
  if (a->op == Op::Constant && b->op == Op::Constant) return make_const(a->value * b->value);
  if (is_const(a, 0.0) || is_const(b, 0.0)) return make_const(0.0);
  if (is_const(a, 1.0)) return b;
  if (is_const(b, 1.0)) return a;
  return binary(Op::Mul, std::move(a), std::move(b));
}

NodeRef make_div(NodeRef a, NodeRef b) {
  if (b->op == Op::Constant && b->value != 0.0) {
    if (a->op == Op::Constant) return make_const(a->value / b->value);
    if (b->value == 1.0) return a;
    if (is_const(a, 0.0)) return make_const(0.0);
  }
  return binary(Op::Div, std::move(a), std::move(b));
}

NodeRef make_pow(NodeRef a, int exponent) {
  if (exponent == 0) return make_const(1.0);
  if (exponent == 1) return a;
  if (a->op == Op::Constant) return make_const(std::pow(a->value, exponent));
  auto n = std::make_shared<ExprNode>();
  n->op = Op::Pow;
  n->exponent = exponent;
  n->vars = a->vars;
  n->lhs = std::move(a);
  return n;
}

NodeRef make_call(Op op, NodeRef a) {
  if (a->op == Op::Constant) {
    switch (op) {
      case Op::Sin: return make_const(std::sin(a->value));
      case Op::Cos: return make_const(std::cos(a->value));
      case Op::Exp: return make_const(std::exp(a->value));
      default: break;
    }
  }
  auto n = std::make_shared<ExprNode>();
  n->op = op;
  n->vars = a->vars;
  n->lhs = std::move(a);
  return n;
}

double eval_node(const ExprNode& n, const Point& p) {
  switch (n.op) {
    case Op::Constant: return n.value;
    case Op::Coordinate: return p.coord(n.axis);
    case Op::Add: return eval_node(*n.lhs, p) + eval_node(*n.rhs, p);
    case Op::Sub: return eval_node(*n.lhs, p) - eval_node(*n.rhs, p);
    case Op::Mul: return eval_node(*n.lhs, p) * eval_node(*n.rhs, p);
    case Op::Div: {
      double den = eval_node(*n.rhs, p);
      if (den == 0.0) throw EvalError("division by zero while evaluating field");
      return eval_node(*n.lhs, p) / den;
    }
    case Op::Neg: return -eval_node(*n.lhs, p);
    case Op::Pow: {
      double base = eval_node(*n.lhs, p);
      double r = 1.0;
      for (int k = 0; k < n.exponent; ++k) r *= base;
      return r;
    }
    case Op::Sin: return std::sin(eval_node(*n.lhs, p));
    case Op::Cos: return std::cos(eval_node(*n.lhs, p));
    case Op::Exp: return std::exp(eval_node(*n.lhs, p));
  }
  throw std::logic_error("corrupt expression node");
}

NodeRef diff_node(const NodeRef& n, int axis) {
  switch (n->op) {
    case Op::Constant: return make_const(0.0);
    case Op::Coordinate: return make_const(n->axis == axis ? 1.0 : 0.0);
    case Op::Add: return make_add(diff_node(n->lhs, axis), diff_node(n->rhs, axis));
    case Op::Sub: return make_sub(diff_node(n->lhs, axis), diff_node(n->rhs, axis));
    case Op::Mul:
      return make_add(make_mul(diff_node(n->lhs, axis), n->rhs),
                      make_mul(n->lhs, diff_node(n->rhs, axis)));
    case Op::Div:
      // (f/g)' = (f'g - fg') / g^2
      return make_div(make_sub(make_mul(diff_node(n->lhs, axis), n->rhs),
                               make_mul(n->lhs, diff_node(n->rhs, axis))),
                      make_pow(n->rhs, 2));
    case Op::Neg: return make_neg(diff_node(n->lhs, axis));
    case Op::Pow:
      // (f^k)' = k f^(k-1) f'
      return make_mul(make_mul(make_const(double(n->exponent)), make_pow(n->lhs, n->exponent - 1)),
                      diff_node(n->lhs, axis));
    case Op::Sin: return make_mul(make_call(Op::Cos, n->lhs), diff_node(n->lhs, axis));
    case Op::Cos: return make_neg(make_mul(make_call(Op::Sin, n->lhs), diff_node(n->lhs, axis)));
    case Op::Exp: return make_mul(make_call(Op::Exp, n->lhs), diff_node(n->lhs, axis));
  }
  throw std::logic_error("corrupt expression node");
}

// Printing precedence levels; parentheses are emitted whenever a child binds
// no tighter than its context requires.
int precedence(Op op) {
  switch (op) {
    case Op::Add:
    case Op::Sub: return 1;
    case Op::Mul:
    case Op::Div: return 2;
    case Op::Neg: return 3;
    case Op::Pow: return 4;
    default: return 5;
  }
}

std::string format_double(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void print_node(const ExprNode& n, std::string& out);

void print_child(const ExprNode& child, int min_prec, std::string& out) {
  bool parens = precedence(child.op) < min_prec ||
                (child.op == Op::Constant && child.value < 0.0 && min_prec > 1);
  if (parens) out += '(';
  print_node(child, out);
  if (parens) out += ')';
}

void print_node(const ExprNode& n, std::string& out) {
  switch (n.op) {
    case Op::Constant: out += format_double(n.value); return;
    case Op::Coordinate: out += 'x'; out += char('0' + n.axis); return;
    case Op::Add:
      print_child(*n.lhs, 1, out);
      out += " + ";
      print_child(*n.rhs, 2, out);
      return;
    case Op::Sub:
      print_child(*n.lhs, 1, out);
      out += " - ";
      print_child(*n.rhs, 2, out);
      return;
    case Op::Mul:
      print_child(*n.lhs, 2, out);
      out += "*";
      print_child(*n.rhs, 3, out);
      return;
    case Op::Div:
      print_child(*n.lhs, 2, out);
      out += "/";
      print_child(*n.rhs, 3, out);
      return;
    case Op::Neg:
      out += '-';
      // The grammar applies '^' after unary minus, so a Pow child must keep
      // its parentheses: -(x1^2) re-parses as written, -x1^2 would not.
      print_child(*n.lhs, 5, out);
      return;
    case Op::Pow:
      print_child(*n.lhs, 5, out);
      out += '^';
      out += std::to_string(n.exponent);
      return;
    case Op::Sin: out += "sin("; print_node(*n.lhs, out); out += ')'; return;
    case Op::Cos: out += "cos("; print_node(*n.lhs, out); out += ')'; return;
    case Op::Exp: out += "exp("; print_node(*n.lhs, out); out += ')'; return;
  }
}

}  // namespace
}  // namespace detail

using detail::NodeRef;
using detail::Op;

ScalarField::ScalarField() : node_(detail::make_const(0.0)) {}
ScalarField::ScalarField(double constant) : node_(detail::make_const(constant)) {}
ScalarField::ScalarField(NodeRef node) : node_(std::move(node)) {}

ScalarField ScalarField::constant(double value) { return ScalarField(value); }

ScalarField ScalarField::coordinate(int axis) {
  return ScalarField(detail::make_coord(axis));
}

double ScalarField::operator()(const Point& p) const { return detail::eval_node(*node_, p); }

ScalarField ScalarField::derivative(int axis) const {
  if (axis < 1 || axis > 4) throw std::out_of_range("coordinate axis must be 1..4");
  return ScalarField(detail::diff_node(node_, axis));
}

unsigned ScalarField::free_vars() const noexcept { return node_->vars; }

bool ScalarField::depends_on(int axis) const noexcept {
  return axis >= 1 && axis <= 4 && (node_->vars >> (axis - 1)) & 1u;
}

bool ScalarField::is_zero() const noexcept {
  return node_->op == Op::Constant && node_->value == 0.0;
}

std::string ScalarField::str() const {
  std::string out;
  detail::print_node(*node_, out);
  return out;
}

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
  return ScalarField(detail::make_add(a.node_, b.node_));
}
ScalarField operator-(const ScalarField& a, const ScalarField& b) {
  return ScalarField(detail::make_sub(a.node_, b.node_));
}
ScalarField operator*(const ScalarField& a, const ScalarField& b) {
  return ScalarField(detail::make_mul(a.node_, b.node_));
}
ScalarField operator/(const ScalarField& a, const ScalarField& b) {
  return ScalarField(detail::make_div(a.node_, b.node_));
}
ScalarField operator-(const ScalarField& a) { return ScalarField(detail::make_neg(a.node_)); }
ScalarField pow(const ScalarField& base, int exponent) {
  if (exponent < 0) throw std::out_of_range("exponent must be non-negative");
  return ScalarField(detail::make_pow(base.node_, exponent));
}
ScalarField sin(const ScalarField& f) { return ScalarField(detail::make_call(Op::Sin, f.node_)); }
ScalarField cos(const ScalarField& f) { return ScalarField(detail::make_call(Op::Cos, f.node_)); }
ScalarField exp(const ScalarField& f) { return ScalarField(detail::make_call(Op::Exp, f.node_)); }

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodeRef run() {
    NodeRef e = parse_expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  NodeRef parse_expr() {
    NodeRef e = parse_term();
    for (;;) {
      if (accept('+')) e = detail::make_add(std::move(e), parse_term());
      else if (accept('-')) e = detail::make_sub(std::move(e), parse_term());
      else return e;
    }
  }

  NodeRef parse_term() {
    NodeRef e = parse_factor();
    for (;;) {
      if (accept('*')) e = detail::make_mul(std::move(e), parse_factor());
      else if (accept('/')) e = detail::make_div(std::move(e), parse_factor());
      else return e;
    }
  }

  NodeRef parse_factor() {
    NodeRef base = parse_base();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("exponent must be a non-negative integer");
      long value = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = value * 10 + (text_[pos_] - '0');
        if (value > 1000000) { pos_ = start; fail("exponent too large"); }
        ++pos_;
      }
      // "x1^2.5" must be rejected rather than read as (x1^2)*0.5-ish input.
      if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E')) {
        pos_ = start;
        fail("exponent must be a non-negative integer");
      }
      return detail::make_pow(std::move(base), static_cast<int>(value));
    }
    return base;
  }

  NodeRef parse_base() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      return detail::make_neg(parse_base());
    }
    if (c == '(') {
      ++pos_;
      NodeRef e = parse_expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_identifier();
    fail("unexpected character");
  }

  NodeRef parse_number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t mark = pos_++;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      } else {
        pos_ = mark;  // the 'e' belongs to something else; stop the literal here
      }
    }
    double value = 0.0;
    auto res = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (res.ec != std::errc() || res.ptr != text_.data() + pos_) {
      pos_ = start;
      fail("malformed number");
    }
    return detail::make_const(value);
  }

  NodeRef parse_identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])))) ++pos_;
    std::string_view name = text_.substr(start, pos_ - start);
    if (name.size() == 2 && name[0] == 'x' && name[1] >= '1' && name[1] <= '4')
      return detail::make_coord(name[1] - '0');
    Op op;
    if (name == "sin") op = Op::Sin;
    else if (name == "cos") op = Op::Cos;
    else if (name == "exp") op = Op::Exp;
    else {
      pos_ = start;
      fail("unknown identifier '" + std::string(name) + "'");
    }
    expect('(');
    NodeRef arg = parse_expr();
    expect(')');
    return detail::make_call(op, std::move(arg));
  }
};

}  // namespace

ScalarField parse_field(std::string_view text) {
  Parser parser(text);
  return ScalarField(parser.run());
}

}  // namespace walker
