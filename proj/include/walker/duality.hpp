#pragma once

// Self-dual / anti-self-dual decomposition of the Weyl curvature.
//
// The two-form bundle of a 4-manifold with a (+,+,-,-) metric splits under the
// Hodge star into +1 and -1 eigenspaces, each of rank three and carrying a
// Lorentzian inner product. The Weyl operator restricts to each half; this
// module evaluates both restrictions as 3x3 matrices, decides self-duality
// (vanishing of the anti-self-dual half), and classifies the Jordan structure
// of the self-dual half.

#include <array>

#include "walker/linalg.hpp"
#include "walker/metric.hpp"

namespace walker {

// Orthonormal frame adapted to the canonical coordinates: e[0], e[1] are
// spacelike (g(e,e) = +1), e[2], e[3] timelike (g(e,e) = -1). Components are
// in the coordinate basis d1..d4.
struct Frame {
  std::array<Vec4, 4> e{};
  std::array<double, 4> eps{1.0, 1.0, -1.0, -1.0};
};

Frame frame(const WalkerMetric& w, const Point& p);

enum class DualitySign { SelfDual, AntiSelfDual };

// One half of the Weyl operator in the eigenbasis {E1, E2, E3} of the Hodge
// star, where E1 = (e1^e2 +/- e3^e4)/sqrt(2), E2 = (e1^e3 +/- e2^e4)/sqrt(2),
// E3 = (e1^e4 -/+ e2^e3)/sqrt(2). The basis is null-free but Lorentzian:
// <E1,E1> = 1, <E2,E2> = <E3,E3> = -1, so the operator matrix is the signed
// symmetric form diag(1,-1,-1) * [W(Ei,Ej)].
struct WeylOperator {
  Mat3 m{};
  DualitySign sign = DualitySign::SelfDual;
  double tau = 0.0;
};

// Closed-form route: the six component values W(Ei,Ej) expressed directly in
// the metric coefficient jets.
WeylOperator wpm_matrix(const WalkerMetric& w, const Point& p, DualitySign sign);

// Independent route: contract the full Weyl tensor with the frame wedge
// expansion of each Ei. Used to validate wpm_matrix; slower.
WeylOperator wpm_oracle(const WalkerMetric& w, const Point& p, DualitySign sign);

// The five second-derivative combinations of (a, b, c) whose simultaneous
// vanishing is equivalent to W- = 0:
//   a_22, b_11, a_12 - c_22, b_12 - c_11, a_11 + b_22 - 4 c_12.
std::array<double, 5> selfdual_residuals(const WalkerMetric& w, const Point& p);

enum class WplusJordan {
  TypeIa,     // tau != 0, diagonalizable
  TypeII,     // tau != 0, -tau/12 is a double root of the minimal polynomial
  Zero,       // tau == 0, operator vanishes
  TwoStep,    // tau == 0, nilpotent of degree two
  ThreeStep,  // tau == 0, nilpotent of degree three
};

// The spectrum of the self-dual half is always {tau/6, -tau/12, -tau/12}; its
// Jordan structure is decided by tau, w11 and w12 alone:
//   tau != 0: diagonalizable iff delta := tau^2 + 12 tau w11 + 48 w12^2 = 0.
//   tau == 0: zero iff w11 = w12 = 0; two-step nilpotent iff w11 != 0 and
//             w12 = 0; three-step nilpotent iff w12 != 0.
struct WplusDiagnostic {
  double w11 = 0.0;
  double w12 = 0.0;
  double tau = 0.0;
  double delta = 0.0;  // tau^2 + 12 tau w11 + 48 w12^2
  double scale = 0.0;  // tau^2 + |12 tau w11| + 48 w12^2, the size of delta's terms
  WplusJordan jordan = WplusJordan::Zero;
  bool indeterminate = false;  // a deciding comparison fell within x10 of its threshold
};

// Thresholds are tol * (term scale) so the decision is insensitive to the
// overall size of the curvature; vanishing tests fall back to an absolute
// floor of tol when every term is small.
WplusDiagnostic classify_wplus(const WalkerMetric& w, const Point& p, double tol);

// Hodge star on two-forms of an orthonormal coframe with signs (+,+,-,-), as
// a matrix in the wedge-pair basis (12),(13),(14),(23),(24),(34):
// star(e^12) = e^34, star(e^13) = e^24, star(e^14) = -e^23, and symmetrically.
std::array<std::array<double, 6>, 6> hodge_star_frame();

}  // namespace walker
