#pragma once

#include "walker/metric.hpp"

namespace walker {

// Levi-Civita connection in the coordinate frame.
// coeff(k, i, j) is the component along d(k+1) of the derivative of d(j+1)
// in the direction d(i+1); symmetric in (i, j).
struct ConnectionTable {
  double gamma[4][4][4] = {};
  double coeff(int k, int i, int j) const { return gamma[k][i][j]; }
};

// Covariant curvature tensor R(X,Y,Z,T) with the sign convention
//   R(X,Y) = D_[X,Y] - [D_X, D_Y],
// i.e. for coordinate fields R(di,dj)dk = D_dj(D_di dk) - D_di(D_dj dk).
struct RiemannTable {
  double r[4][4][4][4] = {};
  double operator()(int i, int j, int k, int l) const { return r[i][j][k][l]; }
};

// Ricci tensor (trace of U -> R(X,U)Y) and scalar curvature.
struct RicciCurvature {
  Mat4 rho = {};
  double tau = 0.0;
};

// Covariant Weyl tensor, sharing the sign convention of RiemannTable.
struct WeylTable {
  double w[4][4][4][4] = {};
  double operator()(int i, int j, int k, int l) const { return w[i][j][k][l]; }
};

// Closed-form tables evaluated from the cached coefficient jets.
ConnectionTable connection(const WalkerMetric& w, const Point& p);
RiemannTable riemann(const WalkerMetric& w, const Point& p);
RicciCurvature ricci(const WalkerMetric& w, const Point& p);
WeylTable weyl(const WalkerMetric& w, const Point& p);

// Conformal combination of an arbitrary curvature/Ricci pair (dimension 4).
// weyl(w, p) == weyl_from(riemann(w,p), ricci(w,p), w.at(p).g); feeding the
// oracle tables instead gives a fully independent Weyl tensor.
WeylTable weyl_from(const RiemannTable& riem, const RicciCurvature& ric, const Mat4& g);

// Brute-force counterparts. They never read the closed-form tables above:
// Christoffel symbols come from the Koszul formula applied to symbolic metric
// entries, and the curvature oracle differentiates those symbols symbolically
// before evaluating. Slower, but independent down to the sign conventions.
ConnectionTable connection_oracle(const WalkerMetric& w, const Point& p);
RiemannTable riemann_oracle(const WalkerMetric& w, const Point& p);
RicciCurvature ricci_oracle(const WalkerMetric& w, const Point& p);

// Trace-free Ricci components (rho - tau/4 g) in the order
// (1,3), (1,4), (2,3), (3,3), (3,4), (4,4); all six vanish exactly when the
// metric is Einstein. The component (2,4) equals the negative of (1,3).
std::array<double, 6> einstein_residuals(const WalkerMetric& w, const Point& p);

}  // namespace walker
