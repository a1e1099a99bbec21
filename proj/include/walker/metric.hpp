#pragma once

#include <memory>

#include "walker/expr.hpp"
#include "walker/linalg.hpp"

namespace walker {

// Value, gradient and Hessian of one metric coefficient at a point.
// Indices are 0-based here: d[i] is the partial along x(i+1).
struct CoefficientJet {
  double f = 0.0;
  std::array<double, 4> d{};
  std::array<std::array<double, 4>, 4> dd{};
};

struct MetricAtPoint {
  Mat4 g;
  Mat4 ginv;
};

// The metric in canonical form: the only functional entries are
//   g(d3,d3) = a,  g(d4,d4) = b,  g(d3,d4) = c,
// with g(d1,d3) = g(d2,d4) = 1 and everything else zero. The coordinate
// planes span{d1,d2} are null and parallel. Signature is (+,+,-,-).
//
// All symbolic derivatives of a, b, c needed by the curvature tables are
// taken once at construction and shared between copies, so evaluating at
// many points never re-differentiates. Instances are immutable.
class WalkerMetric {
 public:
  WalkerMetric(ScalarField a, ScalarField b, ScalarField c);

  const ScalarField& a() const;
  const ScalarField& b() const;
  const ScalarField& c() const;

  CoefficientJet a_jet(const Point& p) const;
  CoefficientJet b_jet(const Point& p) const;
  CoefficientJet c_jet(const Point& p) const;

  // Matrix of the metric and its closed-form inverse at p. det g = 1, so the
  // inverse exists everywhere regardless of a, b, c.
  MetricAtPoint at(const Point& p) const;

  // g_p(X, Y) for coordinate-frame vectors.
  double inner(const Point& p, const Vec4& x, const Vec4& y) const;

 private:
  struct FieldJet;
  std::shared_ptr<const FieldJet> a_, b_, c_;
};

}  // namespace walker
