#include "walker/curvature.hpp"

namespace walker {

namespace {

// Shorthand bundle for the closed-form tables: every first and second
// partial of the three coefficients at the evaluation point, named with the
// usual subscript convention (a14 = d^2 a / dx1 dx4, and so on).
struct Locals {
  double a, b, c;
  double a1, a2, a3, a4, b1, b2, b3, b4, c1, c2, c3, c4;
  double a11, a12, a13, a14, a22, a23, a24, a33, a34, a44;
  double b11, b12, b13, b14, b22, b23, b24, b33, b34, b44;
  double c11, c12, c13, c14, c22, c23, c24, c33, c34, c44;

  Locals(const WalkerMetric& w, const Point& p) {
    CoefficientJet ja = w.a_jet(p), jb = w.b_jet(p), jc = w.c_jet(p);
    a = ja.f; b = jb.f; c = jc.f;
    a1 = ja.d[0]; a2 = ja.d[1]; a3 = ja.d[2]; a4 = ja.d[3];
    b1 = jb.d[0]; b2 = jb.d[1]; b3 = jb.d[2]; b4 = jb.d[3];
    c1 = jc.d[0]; c2 = jc.d[1]; c3 = jc.d[2]; c4 = jc.d[3];
    a11 = ja.dd[0][0]; a12 = ja.dd[0][1]; a13 = ja.dd[0][2]; a14 = ja.dd[0][3];
    a22 = ja.dd[1][1]; a23 = ja.dd[1][2]; a24 = ja.dd[1][3];
    a33 = ja.dd[2][2]; a34 = ja.dd[2][3]; a44 = ja.dd[3][3];
    b11 = jb.dd[0][0]; b12 = jb.dd[0][1]; b13 = jb.dd[0][2]; b14 = jb.dd[0][3];
    b22 = jb.dd[1][1]; b23 = jb.dd[1][2]; b24 = jb.dd[1][3];
    b33 = jb.dd[2][2]; b34 = jb.dd[2][3]; b44 = jb.dd[3][3];
    c11 = jc.dd[0][0]; c12 = jc.dd[0][1]; c13 = jc.dd[0][2]; c14 = jc.dd[0][3];
    c22 = jc.dd[1][1]; c23 = jc.dd[1][2]; c24 = jc.dd[1][3];
    c33 = jc.dd[2][2]; c34 = jc.dd[2][3]; c44 = jc.dd[3][3];
  }
};

// Writes one independent curvature component together with its images under
// the pair antisymmetries and the pair exchange.
void set_curvature(double (&r)[4][4][4][4], int i, int j, int k, int l, double v) {
  r[i][j][k][l] = v;
  r[j][i][k][l] = -v;
  r[i][j][l][k] = -v;
  r[j][i][l][k] = v;
  r[k][l][i][j] = v;
  r[l][k][i][j] = -v;
  r[k][l][j][i] = -v;
  r[l][k][j][i] = v;
}

}  // namespace

ConnectionTable connection(const WalkerMetric& w, const Point& p) {
  Locals m(w, p);
  ConnectionTable t;
  auto set_pair = [&t](int i, int j, int k, double v) {
    t.gamma[k][i][j] = v;
    t.gamma[k][j][i] = v;
  };
  // Derivatives of d3 and d4 along the null directions d1, d2.
  set_pair(0, 2, 0, m.a1 / 2);
  set_pair(0, 2, 1, m.c1 / 2);
  set_pair(0, 3, 0, m.c1 / 2);
  set_pair(0, 3, 1, m.b1 / 2);
  set_pair(1, 2, 0, m.a2 / 2);
  set_pair(1, 2, 1, m.c2 / 2);
  set_pair(1, 3, 0, m.c2 / 2);
  set_pair(1, 3, 1, m.b2 / 2);
  // Derivatives among d3, d4 themselves.
  set_pair(2, 2, 0, (m.a * m.a1 + m.c * m.a2 + m.a3) / 2);
  set_pair(2, 2, 1, (m.c * m.a1 + m.b * m.a2 - m.a4 + 2 * m.c3) / 2);
  set_pair(2, 2, 2, -m.a1 / 2);
  set_pair(2, 2, 3, -m.a2 / 2);
  set_pair(2, 3, 0, (m.a4 + m.a * m.c1 + m.c * m.c2) / 2);
  set_pair(2, 3, 1, (m.b3 + m.c * m.c1 + m.b * m.c2) / 2);
  set_pair(2, 3, 2, -m.c1 / 2);
  set_pair(2, 3, 3, -m.c2 / 2);
  set_pair(3, 3, 0, (m.a * m.b1 + m.c * m.b2 - m.b3 + 2 * m.c4) / 2);
  set_pair(3, 3, 1, (m.c * m.b1 + m.b * m.b2 + m.b4) / 2);
  set_pair(3, 3, 2, -m.b1 / 2);
  set_pair(3, 3, 3, -m.b2 / 2);
  return t;
}

RiemannTable riemann(const WalkerMetric& w, const Point& p) {
  Locals m(w, p);
  RiemannTable t;
  set_curvature(t.r, 0, 2, 0, 2, -m.a11 / 2);
  set_curvature(t.r, 0, 2, 0, 3, -m.c11 / 2);
  set_curvature(t.r, 0, 2, 1, 2, -m.a12 / 2);
  set_curvature(t.r, 0, 2, 1, 3, -m.c12 / 2);
  set_curvature(t.r, 0, 2, 2, 3,
                (-m.a2 * m.b1 + m.c1 * m.c2 + 2 * m.a14 - 2 * m.c13) / 4);
  set_curvature(t.r, 0, 3, 0, 3, -m.b11 / 2);
  set_curvature(t.r, 0, 3, 1, 2, -m.c12 / 2);
  set_curvature(t.r, 0, 3, 1, 3, -m.b12 / 2);
  set_curvature(t.r, 0, 3, 2, 3,
                (-m.c1 * m.c1 + m.a1 * m.b1 - m.b1 * m.c2 + m.b2 * m.c1 - 2 * m.b13 +
                 2 * m.c14) / 4);
  set_curvature(t.r, 1, 2, 1, 2, -m.a22 / 2);
  set_curvature(t.r, 1, 2, 1, 3, -m.c22 / 2);
  set_curvature(t.r, 1, 2, 2, 3,
                (m.c2 * m.c2 - m.a2 * m.b2 - m.a1 * m.c2 + m.a2 * m.c1 + 2 * m.a24 -
                 2 * m.c23) / 4);
  set_curvature(t.r, 1, 3, 1, 3, -m.b22 / 2);
  set_curvature(t.r, 1, 3, 2, 3,
                (m.a2 * m.b1 - m.c1 * m.c2 - 2 * m.b23 + 2 * m.c24) / 4);
  set_curvature(t.r, 2, 3, 2, 3,
                (-m.a * m.c1 * m.c1 - m.b * m.c2 * m.c2 + m.a * m.a1 * m.b1 +
                 m.c * m.a1 * m.b2 - m.a1 * m.b3 + 2 * m.a1 * m.c4 + m.c * m.a2 * m.b1 +
                 m.b * m.a2 * m.b2 + m.a2 * m.b4 + m.a3 * m.b1 - m.a4 * m.b2 -
                 2 * m.a4 * m.c1 + 2 * m.b2 * m.c3 - 2 * m.b3 * m.c2 -
                 2 * m.c * m.c1 * m.c2 - 2 * m.a44 - 2 * m.b33 + 4 * m.c34) / 4);
  return t;
}

RicciCurvature ricci(const WalkerMetric& w, const Point& p) {
  Locals m(w, p);
  RicciCurvature out;
  auto set_sym = [&out](int i, int j, double v) {
    out.rho[i][j] = v;
    out.rho[j][i] = v;
  };
  set_sym(0, 2, (m.a11 + m.c12) / 2);
  set_sym(0, 3, (m.b12 + m.c11) / 2);
  set_sym(1, 2, (m.a12 + m.c22) / 2);
  set_sym(1, 3, (m.b22 + m.c12) / 2);
  set_sym(2, 2, (-m.c2 * m.c2 + m.a1 * m.c2 + m.a2 * m.b2 - m.a2 * m.c1 + m.a * m.a11 +
                 2 * m.c * m.a12 + m.b * m.a22 + 2 * m.c23 - 2 * m.a24) / 2);
  set_sym(2, 3, (-m.a2 * m.b1 + m.c1 * m.c2 + m.a14 + m.b23 + m.a * m.c11 +
                 2 * m.c * m.c12 - m.c13 + m.b * m.c22 - m.c24) / 2);
  set_sym(3, 3, (-m.c1 * m.c1 + m.a1 * m.b1 - m.b1 * m.c2 + m.b2 * m.c1 + m.a * m.b11 +
                 2 * m.c * m.b12 - 2 * m.b13 + m.b * m.b22 + 2 * m.c14) / 2);
  out.tau = m.a11 + m.b22 + 2 * m.c12;
  return out;
}

WeylTable weyl_from(const RiemannTable& riem, const RicciCurvature& ric, const Mat4& g) {
  WeylTable t;
  const Mat4& rho = ric.rho;
  double tau = ric.tau;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          t.w[i][j][k][l] =
              riem.r[i][j][k][l] +
              tau / 6.0 * (g[i][k] * g[j][l] - g[j][k] * g[i][l]) -
              0.5 * (rho[i][k] * g[j][l] - rho[j][k] * g[i][l] + rho[j][l] * g[i][k] -
                     rho[i][l] * g[j][k]);
        }
  return t;
}

WeylTable weyl(const WalkerMetric& w, const Point& p) {
  return weyl_from(riemann(w, p), ricci(w, p), w.at(p).g);
}

namespace {

// Symbolic metric, inverse, and Christoffel symbols. Everything here is an
// expression in a, b, c and their derivatives; nothing is copied from the
// closed-form tables above.
struct SymbolicChristoffels {
  ScalarField gamma[4][4][4];  // gamma[k][i][j]

  explicit SymbolicChristoffels(const WalkerMetric& w) {
    const ScalarField& a = w.a();
    const ScalarField& b = w.b();
    const ScalarField& c = w.c();
    ScalarField zero = ScalarField::constant(0.0);
    ScalarField one = ScalarField::constant(1.0);

    ScalarField g[4][4] = {{zero, zero, one, zero},
                           {zero, zero, zero, one},
                           {one, zero, a, c},
                           {zero, one, c, b}};
    ScalarField ginv[4][4] = {{-a, -c, one, zero},
                              {-c, -b, zero, one},
                              {one, zero, zero, zero},
                              {zero, one, zero, zero}};

    ScalarField dg[4][4][4];  // dg[u][i][j] = d g_ij / dx(u+1)
    for (int u = 0; u < 4; ++u)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) dg[u][i][j] = g[i][j].derivative(u + 1);

    for (int k = 0; k < 4; ++k)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          ScalarField sum = zero;
          for (int l = 0; l < 4; ++l)
            sum = sum + ginv[k][l] * (dg[i][j][l] + dg[j][i][l] - dg[l][i][j]);
          gamma[k][i][j] = ScalarField::constant(0.5) * sum;
        }
  }
};

}  // namespace

ConnectionTable connection_oracle(const WalkerMetric& w, const Point& p) {
  SymbolicChristoffels sym(w);
  ConnectionTable t;
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) t.gamma[k][i][j] = sym.gamma[k][i][j](p);
  return t;
}

RiemannTable riemann_oracle(const WalkerMetric& w, const Point& p) {
  SymbolicChristoffels sym(w);

  double gm[4][4][4];   // Christoffels at p
  double dgm[4][4][4][4];  // dgm[u][k][i][j] = d gamma[k][i][j] / dx(u+1) at p
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        gm[k][i][j] = sym.gamma[k][i][j](p);
        for (int u = 0; u < 4; ++u)
          dgm[u][k][i][j] = sym.gamma[k][i][j].derivative(u + 1)(p);
      }

  Mat4 g = w.at(p).g;
  RiemannTable t;
  // R(di,dj)dk = D_dj(D_di dk) - D_di(D_dj dk); lower the free index with g.
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          double sum = 0;
          for (int m = 0; m < 4; ++m) {
            double rm = dgm[j][m][i][k] - dgm[i][m][j][k];
            for (int n = 0; n < 4; ++n)
              rm += gm[n][i][k] * gm[m][j][n] - gm[n][j][k] * gm[m][i][n];
            sum += g[m][l] * rm;
          }
          t.r[i][j][k][l] = sum;
        }
  return t;
}

RicciCurvature ricci_oracle(const WalkerMetric& w, const Point& p) {
  RiemannTable riem = riemann_oracle(w, p);
  Mat4 ginv = w.at(p).ginv;
  RicciCurvature out;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      double sum = 0;
      for (int j = 0; j < 4; ++j)
        for (int l = 0; l < 4; ++l) sum += ginv[j][l] * riem.r[i][j][k][l];
      out.rho[i][k] = sum;
    }
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) out.tau += ginv[i][k] * out.rho[i][k];
  return out;
}

std::array<double, 6> einstein_residuals(const WalkerMetric& w, const Point& p) {
  Locals m(w, p);
  std::array<double, 6> r{};
  r[0] = (m.a11 - m.b22) / 4;
  r[1] = (m.b12 + m.c11) / 2;
  r[2] = (m.a12 + m.c22) / 2;
  r[3] = (2 * m.a1 * m.c2 + 2 * m.a2 * m.b2 - 2 * m.a2 * m.c1 - 2 * m.c2 * m.c2 +
          m.a * m.a11 + 4 * m.c * m.a12 + 2 * m.b * m.a22 - 4 * m.a24 - m.a * m.b22 -
          2 * m.a * m.c12 + 4 * m.c23) / 4;
  r[4] = (-2 * m.a2 * m.b1 + 2 * m.c1 * m.c2 - m.c * m.a11 + 2 * m.a14 - m.c * m.b22 +
          2 * m.b23 + 2 * m.a * m.c11 + 2 * m.c * m.c12 - 2 * m.c13 + 2 * m.b * m.c22 -
          2 * m.c24) / 4;
  r[5] = (2 * m.a1 * m.b1 - 2 * m.b1 * m.c2 + 2 * m.b2 * m.c1 - 2 * m.c1 * m.c1 -
          m.b * m.a11 + 2 * m.a * m.b11 + 4 * m.c * m.b12 - 4 * m.b13 + m.b * m.b22 -
          2 * m.b * m.c12 + 4 * m.c14) / 4;
  return r;
}

}  // namespace walker
