#pragma once

// Jacobi operators J_X = R(., X)X, their Jordan normal forms, and sampling
// of the unit sphere bundles to probe the Osserman property (constancy of
// Jacobi eigenvalues over unit spacelike/timelike directions).

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "walker/linalg.hpp"
#include "walker/metric.hpp"

namespace walker {

struct NullDirectionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SamplingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The operator for one non-null direction. X is stored normalized to
// |g(X,X)| = 1; epsX is the sign of g(X,X). m4 acts on coordinate components
// (column j holds J applied to d(j+1)); X spans its kernel. m3 is the
// restriction to the g-orthogonal complement of X in a basis built by
// g-orthonormalizing projected coordinate vectors (the complement metric is
// Lorentzian, so basis vectors carry signs sigma_i = g(u_i, u_i)).
struct JacobiOperator {
  Vec4 X{};
  double epsX = 1.0;
  Mat4 m4{};
  Mat3 m3{};
};

// Throws NullDirectionError unless |g(X,X)| > 1e-8 |X|^2 (Euclidean).
JacobiOperator jacobi_operator(const WalkerMetric& w, const Point& p, const Vec4& X);

// All four eigenvalues: the exact kernel zero plus the spectrum of m3.
// normalized = raw * epsX, which makes spacelike and timelike samples
// directly comparable. Layout: ascending when everything is real; when m3
// has a complex pair the entries are {0, real} ascending (times epsX),
// then re * epsX, then |im|.
struct JacobiSpectrum {
  bool complex_pair = false;
  std::array<double, 4> raw{};
  std::array<double, 4> normalized{};
};

JacobiSpectrum jacobi_spectrum(const JacobiOperator& j);

// Jordan taxonomy for self-adjoint operators on a Lorentzian 3-space:
// Ia diagonalizable, Ib complex conjugate pair, II double root of the
// minimal polynomial, III triple root.
enum class JordanType { Ia, Ib, II, III };

struct JordanReport {
  JordanType type = JordanType::Ia;
  // distinct eigenvalue clusters, ascending, with algebraic multiplicities
  std::vector<std::pair<double, int>> eigenvalues;
  double complex_re = 0.0;  // the pair when type == Ib
  double complex_im = 0.0;
  // 0, 2 or 3 when every eigenvalue clusters at zero; -1 otherwise
  int nilpotency_degree = -1;
  bool normalized = false;  // eigenvalues multiplied by epsX
  bool indeterminate = false;
};

// Eigenvalues are clustered within tol * (1 + max |eigenvalue|); multiple
// roots are separated into Ia/II/III by singular-value ranks of (m - lambda I)
// and its square. Decisions within a factor 10 of a threshold set the
// indeterminate flag instead of silently committing. entry_err, when given,
// is the absolute uncertainty carried by each entry of m (beyond roundoff)
// and widens the repeated-root detection accordingly.
JordanReport jordan_classify(const Mat3& m, double tol, double entry_err = -1.0);

// Convenience: classify the restricted operator and report the epsX-
// normalized eigenvalues.
JordanReport jordan_classify(const JacobiOperator& j, double tol);

struct Region {
  Vec4 lo{-1.0, -1.0, -1.0, -1.0};
  Vec4 hi{1.0, 1.0, 1.0, 1.0};
};

struct OssermanPointRecord {
  Point p{};
  // per-bundle reference multisets: the first sampled direction's normalized
  // spectrum
  std::array<double, 4> spacelike_ref{};
  std::array<double, 4> timelike_ref{};
  double max_spread = 0.0;      // worst in-bundle deviation from the reference
  JordanType type = JordanType::Ia;  // first sample's type
  bool types_constant = true;   // every direction at this point agreed
  bool comparable = true;       // spectra shared one shape (no stray complex pairs)
  int indeterminate = 0;        // samples whose classification was fragile
};

struct OssermanReport {
  int points_sampled = 0;
  int directions_per_point = 0;
  std::uint64_t seed = 0;
  std::vector<OssermanPointRecord> points;
  // global reference multisets (first point's)
  std::array<double, 4> spacelike_spectrum{};
  std::array<double, 4> timelike_spectrum{};
  double max_spread = 0.0;  // worst per-point in-bundle deviation seen
  bool is_pointwise_osserman = false;  // spectra direction-independent at each point
  bool is_jordan_osserman = false;     // additionally one Jordan type across all samples
  int indeterminate_count = 0;
};

// Samples n_points uniform points in the region and, at each, n_dirs unit
// spacelike plus n_dirs unit timelike directions (rejection sampling).
// Deterministic for a fixed seed; the seed is echoed in the report.
// Throws std::invalid_argument for a degenerate region or counts < 1 and
// SamplingError if a bundle cannot be hit after bounded retries.
OssermanReport osserman_scan(const WalkerMetric& w, const Region& region,
                             int n_points, int n_dirs, double tol,
                             std::uint64_t seed);

}  // namespace walker
