#include "walker/eig3.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace walker {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// A couple of Newton steps to polish a simple root. Skipped when the
// derivative is small relative to its natural scale -- that is the repeated
// root neighborhood, where Newton stalls and the closed-form branches are
// responsible instead.
double polish_simple(double t, double p, double q) {
  for (int it = 0; it < 2; ++it) {
    double df = 3.0 * t * t + p;
    if (std::fabs(df) < 1e-3 * (3.0 * t * t + std::fabs(p)) || df == 0.0) break;
    double f = (t * t + p) * t + q;
    t -= f / df;
  }
  return t;
}

}  // namespace

// Classical depressed-cubic solution: substitute x = t - b/3, giving
// t^3 + p t + q, then split on the discriminant (trigonometric form for three
// real roots, Cardano for one). See e.g.
// https://mathworld.wolfram.com/CubicFormula.html
//
// The delicate part is a discriminant near zero. Resolving a double root
// through the generic branches turns a coefficient error delta into a root
// error O(sqrt(delta)); snapping to the closed-form double root -3q/(2p)
// keeps it O(delta). The snap bands come from first-order propagation of the
// caller's coefficient uncertainties (or bare roundoff when none are given).
CubicRoots solve_cubic(double b, double c, double d, double berr, double cerr,
                       double derr) {
  if (berr < 0.0) berr = 4.0 * kEps * std::fabs(b);
  if (cerr < 0.0) cerr = 4.0 * kEps * std::fabs(c);
  if (derr < 0.0) derr = 4.0 * kEps * std::fabs(d);

  double shift = -b / 3.0;
  double p = c - b * b / 3.0;
  double q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;

  double p_scale = std::fabs(c) + b * b / 3.0;
  double q_scale = 2.0 * std::fabs(b * b * b) / 27.0 + std::fabs(b * c) / 3.0 + std::fabs(d);
  double p_err = cerr + (2.0 * std::fabs(b) / 3.0) * berr + 4.0 * kEps * p_scale;
  double q_err = derr + (2.0 * b * b / 9.0 + std::fabs(c) / 3.0) * berr +
                 (std::fabs(b) / 3.0) * cerr + 4.0 * kEps * q_scale;

  double qq = p / 3.0;   // Q in the classical notation
  double rr = -q / 2.0;  // R
  double q3 = qq * qq * qq;
  double r2 = rr * rr;
  double disc = q3 + r2;  // < 0: three distinct real roots; > 0: one real
  double dscale = std::max(std::fabs(q3), r2);
  double disc_err = qq * qq * p_err + std::fabs(rr) * q_err + 4.0 * kEps * dscale;

  CubicRoots out;

  if (dscale <= 1e-300 ||
      (std::fabs(p) <= 8.0 * p_err && std::fabs(q) <= 8.0 * q_err)) {
    // p and q both indistinguishable from zero: triple root.
    out.roots = {shift, shift, shift};
    return out;
  }

  if (std::fabs(disc) <= 8.0 * disc_err && p < 0.0) {
    // Double root at -3q/(2p); the depressed roots sum to zero, so the simple
    // root sits at twice the opposite value.
    double td = -1.5 * q / p;
    double ts = polish_simple(-2.0 * td, p, q);
    out.roots = {std::min(td, ts) + shift, td + shift, std::max(td, ts) + shift};
    return out;
  }

  if (disc < 0.0) {
    // Three distinct real roots.
    double theta = std::acos(std::clamp(rr / std::sqrt(-q3), -1.0, 1.0));
    double amp = 2.0 * std::sqrt(-qq);
    double t0 = polish_simple(amp * std::cos(theta / 3.0), p, q);
    double t1 = polish_simple(amp * std::cos((theta - 2.0 * M_PI) / 3.0), p, q);
    double t2 = polish_simple(amp * std::cos((theta + 2.0 * M_PI) / 3.0), p, q);
    out.roots = {t0 + shift, t1 + shift, t2 + shift};
    std::sort(out.roots.begin(), out.roots.end());
    return out;
  }

  // One real root plus a complex pair (Cardano).
  double sq = std::sqrt(disc);
  double u = std::cbrt(rr + sq);
  double v = std::cbrt(rr - sq);
  out.n_real = 1;
  out.roots[0] = polish_simple(u + v, p, q) + shift;
  out.complex_re = -0.5 * (u + v) + shift;
  out.complex_im = std::fabs(u - v) * std::sqrt(3.0) / 2.0;
  return out;
}

Eigen3 eigenvalues_3x3(const Mat3& m, double entry_err) {
  double tr = m[0][0] + m[1][1] + m[2][2];
  double minors = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] -
                  m[0][2] * m[2][0] + m[1][1] * m[2][2] - m[1][2] * m[2][1];
  double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);

  // Coefficient uncertainties from the actual products, so that cancellation
  // between large entries (small eigenvalues of a badly scaled matrix) is
  // reflected in the repeated-root detection bands.
  double tr_abs = std::fabs(m[0][0]) + std::fabs(m[1][1]) + std::fabs(m[2][2]);
  double minors_abs = std::fabs(m[0][0] * m[1][1]) + std::fabs(m[0][1] * m[1][0]) +
                      std::fabs(m[0][0] * m[2][2]) + std::fabs(m[0][2] * m[2][0]) +
                      std::fabs(m[1][1] * m[2][2]) + std::fabs(m[1][2] * m[2][1]);
  double det_abs = std::fabs(m[0][0] * m[1][1] * m[2][2]) +
                   std::fabs(m[0][0] * m[1][2] * m[2][1]) +
                   std::fabs(m[0][1] * m[1][0] * m[2][2]) +
                   std::fabs(m[0][1] * m[1][2] * m[2][0]) +
                   std::fabs(m[0][2] * m[1][0] * m[2][1]) +
                   std::fabs(m[0][2] * m[1][1] * m[2][0]);

  double berr = 2.0 * kEps * tr_abs;
  double cerr = 4.0 * kEps * minors_abs;
  double derr = 6.0 * kEps * det_abs;
  if (entry_err > 0.0) {
    // First-order propagation of a uniform per-entry error: the trace touches
    // 3 entries, each 2-entry product moves by <= 2 mmax entry_err, each
    // 3-entry product by <= 3 mmax^2 entry_err.
    double mmax = 0.0;
    for (const auto& row : m)
      for (double v : row) mmax = std::max(mmax, std::fabs(v));
    berr += 3.0 * entry_err;
    cerr += 12.0 * mmax * entry_err;
    derr += 18.0 * mmax * mmax * entry_err;
  }
  CubicRoots roots = solve_cubic(-tr, minors, -det, berr, cerr, derr);
  Eigen3 out;
  if (roots.n_real == 3) {
    out.lambda = roots.roots;
  } else {
    out.complex_pair = true;
    out.lambda = {roots.roots[0], 0.0, 0.0};
    out.complex_re = roots.complex_re;
    out.complex_im = roots.complex_im;
  }
  return out;
}

std::array<double, 3> singular_values_3x3(const Mat3& m) {
  // One-sided Jacobi (Hestenes): rotate column pairs until mutually
  // orthogonal; the singular values are the final column norms.
  Mat3 a = m;
  auto col_dot = [&a](int p, int q) {
    return a[0][p] * a[0][q] + a[1][p] * a[1][q] + a[2][p] * a[2][q];
  };
  for (int sweep = 0; sweep < 30; ++sweep) {
    bool rotated = false;
    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        double app = col_dot(p, p);
        double aqq = col_dot(q, q);
        double apq = col_dot(p, q);
        if (std::fabs(apq) <= 1e-30 + 1e-16 * std::sqrt(app * aqq)) continue;
        rotated = true;
        double zeta = (aqq - app) / (2.0 * apq);
        double t = std::copysign(1.0, zeta) /
                   (std::fabs(zeta) + std::sqrt(1.0 + zeta * zeta));
        double cs = 1.0 / std::sqrt(1.0 + t * t);
        double sn = cs * t;
        for (int r = 0; r < 3; ++r) {
          double vp = a[r][p], vq = a[r][q];
          a[r][p] = cs * vp - sn * vq;
          a[r][q] = sn * vp + cs * vq;
        }
      }
    }
    if (!rotated) break;
  }
  std::array<double, 3> sigma{};
  for (int j = 0; j < 3; ++j) sigma[j] = std::sqrt(col_dot(j, j));
  std::sort(sigma.begin(), sigma.end(), std::greater<double>());
  return sigma;
}

RankResult rank_3x3(const Mat3& m, double tol, double scale_floor) {
  RankResult out;
  out.sigma = singular_values_3x3(m);
  double cut = tol * std::max(out.sigma[0], scale_floor);
  for (double s : out.sigma) {
    if (s > cut) ++out.rank;
    if (cut > 0.0 && s > cut / 10.0 && s < cut * 10.0)
      out.indeterminate = true;
  }
  return out;
}

}  // namespace walker
