#include "walker/duality.hpp"

#include <cmath>

#include "walker/curvature.hpp"

namespace walker {

Frame frame(const WalkerMetric& w, const Point& p) {
  double a = w.a()(p), b = w.b()(p), c = w.c()(p);
  Frame f;
  f.e[0] = {0.5 * (1.0 - a), 0.0, 1.0, 0.0};
  f.e[1] = {-c, 0.5 * (1.0 - b), 0.0, 1.0};
  f.e[2] = {-0.5 * (1.0 + a), 0.0, 1.0, 0.0};
  f.e[3] = {-c, -0.5 * (1.0 + b), 0.0, 1.0};
  return f;
}

namespace {

struct HalfComponents {
  double w11, w12, w13, w22, w23, w33, tau;
};

// The six values W(Ei, Ej) of the chosen half in closed form. Subscripts on
// the metric coefficients are coordinate derivatives (a12 = d^2 a/dx1 dx2).
HalfComponents half_components(const WalkerMetric& w, const Point& p,
                               DualitySign sign) {
  CoefficientJet A = w.a_jet(p), B = w.b_jet(p), C = w.c_jet(p);
  double a = A.f, b = B.f, c = C.f;
  double a11 = A.dd[0][0], a12 = A.dd[0][1], a22 = A.dd[1][1];
  double b11 = B.dd[0][0], b12 = B.dd[0][1], b22 = B.dd[1][1];
  double c11 = C.dd[0][0], c12 = C.dd[0][1], c22 = C.dd[1][1];

  HalfComponents out{};
  out.tau = a11 + b22 + 2.0 * c12;

  if (sign == DualitySign::AntiSelfDual) {
    out.w11 = -(a11 + 3.0 * a22 + 3.0 * b11 + b22 - 4.0 * c12) / 12.0;
    out.w22 = -(a11 + b22 - 4.0 * c12) / 6.0;
    out.w33 = (a11 - 3.0 * a22 - 3.0 * b11 + b22 - 4.0 * c12) / 12.0;
    out.w12 = (a12 + b12 - c11 - c22) / 4.0;
    out.w13 = (a22 - b11) / 4.0;
    out.w23 = -(a12 - b12 + c11 - c22) / 4.0;
    return out;
  }

  double a1 = A.d[0], a2 = A.d[1], a3 = A.d[2], a4 = A.d[3];
  double b1 = B.d[0], b2 = B.d[1], b3 = B.d[2], b4 = B.d[3];
  double c1 = C.d[0], c2 = C.d[1], c3 = C.d[2], c4 = C.d[3];
  double a14 = A.dd[0][3], a24 = A.dd[1][3], a44 = A.dd[3][3];
  double b13 = B.dd[0][2], b23 = B.dd[1][2], b33 = B.dd[2][2];
  double c13 = C.dd[0][2], c14 = C.dd[0][3], c23 = C.dd[1][2],
         c24 = C.dd[1][3], c34 = C.dd[2][3];

  double w11 =
      (6.0 * c * a1 * b2 - 6.0 * a1 * b3 - 6.0 * b * a1 * c2 + 12.0 * a1 * c4 -
       6.0 * c * a2 * b1 + 6.0 * a2 * b4 + 6.0 * b * a2 * c1 + 6.0 * a3 * b1 -
       6.0 * a4 * b2 - 12.0 * a4 * c1 + 6.0 * a * b1 * c2 - 6.0 * a * b2 * c1 +
       12.0 * b2 * c3 - 12.0 * b3 * c2 - a11 - 12.0 * c * c * a11 -
       12.0 * b * c * a12 + 24.0 * c * a14 - 3.0 * b * b * a22 +
       12.0 * b * a24 - 12.0 * a44 - 3.0 * a * a * b11 + 12.0 * a * b13 - b22 -
       12.0 * b33 + 12.0 * a * c * c11 - 2.0 * c12 + 6.0 * a * b * c12 -
       24.0 * c * c13 - 12.0 * a * c14 - 12.0 * b * c23 + 24.0 * c34) /
      12.0;
  double w12 = (-2.0 * c * a11 - b * a12 + 2.0 * a14 + a * b12 - 2.0 * b23 +
                a * c11 - 2.0 * c * c12 - 2.0 * c13 - b * c22 + 2.0 * c24) /
               4.0;

  out.w11 = w11;
  out.w12 = w12;
  out.w22 = -out.tau / 6.0;
  out.w33 = w11 + out.tau / 6.0;
  out.w13 = w11 + out.tau / 12.0;
  out.w23 = w12;
  return out;
}

// Operator matrix from the bilinear values: T(Ej) = sum_i sign_i W(Ei,Ej) Ei
// because the basis inner products are <E1,E1> = 1, <E2,E2> = <E3,E3> = -1.
Mat3 assemble(double w11, double w12, double w13, double w22, double w23,
              double w33) {
  return {{{w11, w12, w13}, {-w12, -w22, -w23}, {-w13, -w23, -w33}}};
}

}  // namespace

WeylOperator wpm_matrix(const WalkerMetric& w, const Point& p, DualitySign sign) {
  HalfComponents k = half_components(w, p, sign);
  WeylOperator out;
  out.m = assemble(k.w11, k.w12, k.w13, k.w22, k.w23, k.w33);
  out.sign = sign;
  out.tau = k.tau;
  return out;
}

WeylOperator wpm_oracle(const WalkerMetric& w, const Point& p, DualitySign sign) {
  WeylTable wt = weyl(w, p);
  Frame f = frame(w, p);
  double s = (sign == DualitySign::SelfDual) ? 1.0 : -1.0;
  double r = 1.0 / std::sqrt(2.0);

  // Each basis two-form is a weighted pair of frame wedges; the third one
  // carries the opposite sign on its second wedge.
  struct Term {
    int i, j;
    double coeff;
  };
  std::array<std::array<Term, 2>, 3> basis = {{
      {{{0, 1, r}, {2, 3, s * r}}},
      {{{0, 2, r}, {1, 3, s * r}}},
      {{{0, 3, r}, {1, 2, -s * r}}},
  }};

  // W on frame vectors: push the coordinate components through the frame.
  auto on_frame = [&](int i, int j, int k, int l) {
    double acc = 0.0;
    for (int aa = 0; aa < 4; ++aa) {
      if (f.e[i][aa] == 0.0) continue;
      for (int bb = 0; bb < 4; ++bb) {
        if (f.e[j][bb] == 0.0) continue;
        for (int cc = 0; cc < 4; ++cc) {
          if (f.e[k][cc] == 0.0) continue;
          for (int dd = 0; dd < 4; ++dd)
            acc += f.e[i][aa] * f.e[j][bb] * f.e[k][cc] * f.e[l][dd] *
                   wt(aa, bb, cc, dd);
        }
      }
    }
    return acc;
  };

  Mat3 bilinear{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double acc = 0.0;
      for (const Term& t : basis[i])
        for (const Term& u : basis[j])
          acc += t.coeff * u.coeff * on_frame(t.i, t.j, u.i, u.j);
      bilinear[i][j] = acc;
    }

  WeylOperator out;
  const double row_sign[3] = {1.0, -1.0, -1.0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.m[i][j] = row_sign[i] * bilinear[i][j];
  out.sign = sign;
  out.tau = ricci(w, p).tau;
  return out;
}

std::array<double, 5> selfdual_residuals(const WalkerMetric& w, const Point& p) {
  CoefficientJet A = w.a_jet(p), B = w.b_jet(p), C = w.c_jet(p);
  return {A.dd[1][1], B.dd[0][0], A.dd[0][1] - C.dd[1][1],
          B.dd[0][1] - C.dd[0][0],
          A.dd[0][0] + B.dd[1][1] - 4.0 * C.dd[0][1]};
}

WplusDiagnostic classify_wplus(const WalkerMetric& w, const Point& p, double tol) {
  HalfComponents k = half_components(w, p, DualitySign::SelfDual);

  WplusDiagnostic d;
  d.w11 = k.w11;
  d.w12 = k.w12;
  d.tau = k.tau;
  d.delta = k.tau * k.tau + 12.0 * k.tau * k.w11 + 48.0 * k.w12 * k.w12;
  d.scale = k.tau * k.tau + std::fabs(12.0 * k.tau * k.w11) + 48.0 * k.w12 * k.w12;

  // A positive quantity measured against a cut is fragile when it falls
  // within a factor of 10 of it.
  auto fragile = [](double value, double cut) {
    return value > cut / 10.0 && value < cut * 10.0;
  };

  // All vanishing decisions share one scale; the constant 1 is an absolute
  // floor for curvature-free metrics.
  double size = 1.0 + std::fabs(k.tau) + std::fabs(k.w11) + std::fabs(k.w12);
  double cut = tol * size;
  if (fragile(std::fabs(k.tau), cut)) d.indeterminate = true;

  if (std::fabs(k.tau) > cut) {
    double delta_cut = tol * d.scale;
    if (fragile(std::fabs(d.delta), delta_cut)) d.indeterminate = true;
    d.jordan = (std::fabs(d.delta) <= delta_cut) ? WplusJordan::TypeIa
                                                 : WplusJordan::TypeII;
    return d;
  }

  if (fragile(std::fabs(k.w12), cut)) d.indeterminate = true;
  if (std::fabs(k.w12) > cut) {
    d.jordan = WplusJordan::ThreeStep;
    return d;
  }
  if (fragile(std::fabs(k.w11), cut)) d.indeterminate = true;
  d.jordan = (std::fabs(k.w11) > cut) ? WplusJordan::TwoStep : WplusJordan::Zero;
  return d;
}

std::array<std::array<double, 6>, 6> hodge_star_frame() {
  // Wedge-pair order (12),(13),(14),(23),(24),(34); column P holds the
  // coefficients of star(e^P). Derivable from
  //   e^i ^ e^j ^ star(e^k ^ e^l) = (d^i_k d^j_l - d^i_l d^j_k) eps_i eps_j vol
  // with eps = (+1,+1,-1,-1); frozen here after that derivation.
  std::array<std::array<double, 6>, 6> s{};
  s[0][5] = s[5][0] = 1.0;   // star(e^12) = e^34 and back
  s[1][4] = s[4][1] = 1.0;   // star(e^13) = e^24 and back
  s[2][3] = s[3][2] = -1.0;  // star(e^14) = -e^23 and back
  return s;
}

}  // namespace walker
