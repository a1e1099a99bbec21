#include "walker/metric.hpp"

namespace walker {

struct WalkerMetric::FieldJet {
  ScalarField f;
  std::array<ScalarField, 4> d;
  std::array<std::array<ScalarField, 4>, 4> dd;

  explicit FieldJet(ScalarField field) : f(std::move(field)) {
    for (int i = 0; i < 4; ++i) d[i] = f.derivative(i + 1);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) dd[i][j] = d[i].derivative(j + 1);
  }

  CoefficientJet eval(const Point& p) const {
    CoefficientJet out;
    out.f = f(p);
    for (int i = 0; i < 4; ++i) out.d[i] = d[i](p);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out.dd[i][j] = dd[i][j](p);
    return out;
  }
};

WalkerMetric::WalkerMetric(ScalarField a, ScalarField b, ScalarField c)
    : a_(std::make_shared<FieldJet>(std::move(a))),
      b_(std::make_shared<FieldJet>(std::move(b))),
      c_(std::make_shared<FieldJet>(std::move(c))) {}

const ScalarField& WalkerMetric::a() const { return a_->f; }
const ScalarField& WalkerMetric::b() const { return b_->f; }
const ScalarField& WalkerMetric::c() const { return c_->f; }

CoefficientJet WalkerMetric::a_jet(const Point& p) const { return a_->eval(p); }
CoefficientJet WalkerMetric::b_jet(const Point& p) const { return b_->eval(p); }
CoefficientJet WalkerMetric::c_jet(const Point& p) const { return c_->eval(p); }

MetricAtPoint WalkerMetric::at(const Point& p) const {
  double a = a_->f(p);
  double b = b_->f(p);
  double c = c_->f(p);
  MetricAtPoint m{};
  m.g = Mat4{{{0, 0, 1, 0},
              {0, 0, 0, 1},
              {1, 0, a, c},
              {0, 1, c, b}}};
  // Closed-form inverse; g * ginv = I identically because det g = 1.
  m.ginv = Mat4{{{-a, -c, 1, 0},
                 {-c, -b, 0, 1},
                 {1, 0, 0, 0},
                 {0, 1, 0, 0}}};
  return m;
}

double WalkerMetric::inner(const Point& p, const Vec4& x, const Vec4& y) const {
  double a = a_->f(p);
  double b = b_->f(p);
  double c = c_->f(p);
  return x[0] * y[2] + x[2] * y[0] + x[1] * y[3] + x[3] * y[1] + a * x[2] * y[2] +
         b * x[3] * y[3] + c * (x[2] * y[3] + x[3] * y[2]);
}

}  // namespace walker
