#pragma once

// Closed-form spectral helpers for 3x3 real matrices.
//
// The matrices we feed in here (restricted Jacobi operators, the self-dual
// Weyl operator) routinely have repeated eigenvalues, and repeated roots of a
// characteristic polynomial are the worst case for naive root finders: a
// coefficient perturbation of size delta moves a double root by O(sqrt(delta)).
// solve_cubic therefore detects a near-vanishing discriminant -- using an
// explicit coefficient-uncertainty model when the caller provides one -- and
// places the repeated root at its closed-form location, which keeps the error
// linear in the coefficient error.

#include <array>

#include "walker/linalg.hpp"

namespace walker {

struct CubicRoots {
  int n_real = 3;                 // 3, or 1 when a complex pair is present
  std::array<double, 3> roots{};  // ascending when n_real == 3; roots[0] only otherwise
  double complex_re = 0.0;        // the pair is complex_re +/- i*complex_im
  double complex_im = 0.0;
};

// Roots of x^3 + b x^2 + c x + d.
//
// berr/cerr/derr are absolute one-sigma-ish uncertainties of the coefficients;
// pass negatives (the default) to assume coefficients exact up to roundoff.
// Repeated roots are snapped to their closed-form location whenever the
// discriminant is indistinguishable from zero at that noise level.
CubicRoots solve_cubic(double b, double c, double d, double berr = -1.0,
                       double cerr = -1.0, double derr = -1.0);

struct Eigen3 {
  bool complex_pair = false;
  std::array<double, 3> lambda{};  // ascending when all real; lambda[0] only otherwise
  double complex_re = 0.0;
  double complex_im = 0.0;
};

// Eigenvalues via the characteristic cubic, with coefficient uncertainties
// estimated from the actual entry products (so badly scaled matrices -- large
// entries, small eigenvalues -- still resolve repeated eigenvalues cleanly).
// When the entries themselves carry errors beyond their own roundoff (e.g.
// they were produced by a cancellation-prone computation), pass that absolute
// per-entry uncertainty as entry_err so the repeated-root bands widen to
// match; otherwise plain roundoff is assumed.
Eigen3 eigenvalues_3x3(const Mat3& m, double entry_err = -1.0);

// Singular values, descending, by one-sided Jacobi orthogonalization. Small
// singular values come out with far better relative accuracy than a
// sqrt-of-eigenvalue-of-A^T-A route, which is what rank decisions need.
std::array<double, 3> singular_values_3x3(const Mat3& m);

struct RankResult {
  int rank = 0;
  bool indeterminate = false;      // some sigma within x10 of the threshold
  std::array<double, 3> sigma{};
};

// Numerical rank: count sigma > tol * max(sigma_max, scale_floor). Flags the
// result indeterminate when any singular value falls inside [threshold/10,
// threshold*10], i.e. when the decision would flip under a modest tolerance
// change. Pass a scale_floor when m was produced by arithmetic on a larger
// scale (a shift or a product), so that a numerically-zero matrix is not
// ranked against its own rounding noise.
RankResult rank_3x3(const Mat3& m, double tol, double scale_floor = 0.0);

}  // namespace walker
