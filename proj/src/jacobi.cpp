#include "walker/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "walker/curvature.hpp"
#include "walker/eig3.hpp"

namespace walker {
namespace {

double inner_g(const Mat4& g, const Vec4& x, const Vec4& y) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s += g[i][j] * x[i] * y[j];
  return s;
}

// Pivoted Gram-Schmidt in the metric g. The pool may consist entirely of
// null or near-null vectors even when it spans a nondegenerate subspace (two
// independent null directions span a Lorentzian plane), so when no strong
// pivot exists the pool is extended with pairwise sums and differences, which
// restore |g(v,v)| from the cross terms. Weak pivots would be normalized up
// by 1/sqrt|g(v,v)| and poison the restricted matrix with cancellation noise,
// hence the quality gate.
bool gram_schmidt(const Mat4& g, std::vector<Vec4> pool, double gate,
                  std::array<Vec4, 3>& u, std::array<double, 3>& sigma) {
  bool extended = false;
  int got = 0;
  while (got < 3) {
    for (auto& v : pool)
      for (int k = 0; k < got; ++k) {
        const double c = sigma[k] * inner_g(g, v, u[k]);
        for (int t = 0; t < 4; ++t) v[t] -= c * u[k][t];
      }
    int best = -1;
    double best_ratio = 0.0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      double e2 = 0.0;
      for (double c : pool[i]) e2 += c * c;
      if (e2 <= 1e-24) continue;
      const double r = std::fabs(inner_g(g, pool[i], pool[i])) / e2;
      if (r > best_ratio) {
        best_ratio = r;
        best = static_cast<int>(i);
      }
    }
    if (best < 0 || best_ratio < gate) {
      if (extended || pool.size() < 2) return false;
      const std::size_t n = pool.size();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          Vec4 s{}, d{};
          for (int t = 0; t < 4; ++t) {
            s[t] = pool[i][t] + pool[j][t];
            d[t] = pool[i][t] - pool[j][t];
          }
          pool.push_back(s);
          pool.push_back(d);
        }
      extended = true;
      continue;
    }
    Vec4 v = pool[best];
    pool.erase(pool.begin() + best);
    const double gv = inner_g(g, v, v);
    const double inv = 1.0 / std::sqrt(std::fabs(gv));
    for (int t = 0; t < 4; ++t) v[t] *= inv;
    u[got] = v;
    sigma[got] = gv > 0 ? 1.0 : -1.0;
    ++got;
  }
  return true;
}

Mat3 restrict_to_complement(const Mat4& g, const Mat4& m4, const Vec4& X,
                            double epsX) {
  // Candidate pool: the adapted orthonormal frame (|g(e,e)| = 1 analytically,
  // so its projections make well-conditioned pivots) plus the coordinate
  // axes as a safety net. Projected onto the complement of X, the pool spans
  // it with five vectors to spare; pivoting keeps the best-conditioned three.
  const double a = g[2][2], b = g[3][3], c = g[2][3];
  std::vector<Vec4> pool{{(1.0 - a) / 2.0, 0.0, 1.0, 0.0},
                         {-c, (1.0 - b) / 2.0, 0.0, 1.0},
                         {-(1.0 + a) / 2.0, 0.0, 1.0, 0.0},
                         {-c, -(1.0 + b) / 2.0, 0.0, 1.0}};
  for (int i = 0; i < 4; ++i) {
    Vec4 v{};
    v[i] = 1.0;
    pool.push_back(v);
  }
  for (Vec4& v : pool) {
    const double coef = epsX * inner_g(g, v, X);
    for (int t = 0; t < 4; ++t) v[t] -= coef * X[t];
  }
  for (double gate : {1e-2, 1e-8}) {
    std::array<Vec4, 3> u;
    std::array<double, 3> sigma;
    if (!gram_schmidt(g, pool, gate, u, sigma)) continue;
    Mat3 r{};
    for (int j = 0; j < 3; ++j) {
      const Vec4 Ju = matvec(m4, u[j]);
      for (int i = 0; i < 3; ++i) r[i][j] = sigma[i] * inner_g(g, Ju, u[i]);
    }
    return r;
  }
  throw SamplingError(
      "jacobi_operator: could not build a basis of the orthogonal complement");
}

double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * unit_interval(rng);
}

// Absolute uncertainty of the m3 entries. The restriction basis loses
// accuracy near the null cone: |g(X,X)| = 1 after normalization, so the
// Euclidean norm-squared of X measures the cone proximity, and the
// Gram-Schmidt cancellations amplify roundoff by about that factor. The
// constant covers the accumulation across the projections and products.
double restricted_entry_err(const JacobiOperator& j) {
  double kappa2 = 0.0;
  for (double v : j.X) kappa2 += v * v;
  double mmax = 0.0;
  for (const auto& row : j.m3)
    for (double v : row) mmax = std::max(mmax, std::fabs(v));
  return 32.0 * std::numeric_limits<double>::epsilon() * kappa2 * mmax;
}

}  // namespace

JacobiOperator jacobi_operator(const WalkerMetric& w, const Point& p,
                               const Vec4& X) {
  const MetricAtPoint m = w.at(p);
  double exx = 0.0;
  for (double xi : X) exx += xi * xi;
  const double gxx = inner_g(m.g, X, X);
  if (!(std::fabs(gxx) > 1e-8 * exx))
    throw NullDirectionError(
        "jacobi_operator: direction is null or too close to the null cone");

  JacobiOperator out;
  out.epsX = gxx > 0 ? 1.0 : -1.0;
  const double inv = 1.0 / std::sqrt(std::fabs(gxx));
  for (int i = 0; i < 4; ++i) out.X[i] = X[i] * inv;

  // A_jk = R(X, d_j, X, d_k): the bilinear form of the operator, oriented so
  // that its g-trace equals rho(X, X)
  const RiemannTable R = riemann(w, p);
  Mat4 A = zero4();
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) {
      double s = 0.0;
      for (int a = 0; a < 4; ++a) {
        if (out.X[a] == 0.0) continue;
        for (int b = 0; b < 4; ++b) {
          if (out.X[b] == 0.0) continue;
          s += out.X[a] * out.X[b] * R(a, j, b, k);
        }
      }
      A[j][k] = s;
    }
  for (int l = 0; l < 4; ++l)
    for (int j = 0; j < 4; ++j) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += m.ginv[l][k] * A[j][k];
      out.m4[l][j] = s;
    }
  out.m3 = restrict_to_complement(m.g, out.m4, out.X, out.epsX);
  return out;
}

JacobiSpectrum jacobi_spectrum(const JacobiOperator& j) {
  const Eigen3 e = eigenvalues_3x3(j.m3, restricted_entry_err(j));
  JacobiSpectrum s;
  s.complex_pair = e.complex_pair;
  if (!e.complex_pair) {
    s.raw = {0.0, e.lambda[0], e.lambda[1], e.lambda[2]};
    std::sort(s.raw.begin(), s.raw.end());
    for (int k = 0; k < 4; ++k) s.normalized[k] = j.epsX * s.raw[k];
    std::sort(s.normalized.begin(), s.normalized.end());
  } else {
    s.raw = {std::min(0.0, e.lambda[0]), std::max(0.0, e.lambda[0]),
             e.complex_re, e.complex_im};
    const double nr = j.epsX * e.lambda[0];
    s.normalized = {std::min(0.0, nr), std::max(0.0, nr),
                    j.epsX * e.complex_re, std::fabs(e.complex_im)};
  }
  return s;
}

JordanReport jordan_classify(const Mat3& m, double tol, double entry_err) {
  if (!(tol > 0)) throw std::invalid_argument("jordan_classify: tol must be positive");
  JordanReport r;
  const Eigen3 e = eigenvalues_3x3(m, entry_err);
  double lmax = 0.0;
  for (double v : e.lambda) lmax = std::max(lmax, std::fabs(v));
  if (e.complex_pair)
    lmax = std::max(std::fabs(e.lambda[0]),
                    std::hypot(e.complex_re, e.complex_im));
  const double cut = tol * (1.0 + lmax);

  if (e.complex_pair) {
    r.type = JordanType::Ib;
    r.eigenvalues = {{e.lambda[0], 1}};
    r.complex_re = e.complex_re;
    r.complex_im = e.complex_im;
    if (std::fabs(e.complex_im) < 10.0 * cut) r.indeterminate = true;
    return r;
  }

  const double g01 = e.lambda[1] - e.lambda[0];
  const double g12 = e.lambda[2] - e.lambda[1];
  auto fragile_gap = [&](double g) { return g > cut / 10.0 && g < cut * 10.0; };
  if (fragile_gap(g01) || fragile_gap(g12)) r.indeterminate = true;
  const bool m01 = g01 <= cut;
  const bool m12 = g12 <= cut;

  if (!m01 && !m12) {
    r.type = JordanType::Ia;
    for (double v : e.lambda) r.eigenvalues.push_back({v, 1});
    return r;
  }

  if (m01 && m12) {
    const double lt = (e.lambda[0] + e.lambda[1] + e.lambda[2]) / 3.0;
    r.eigenvalues = {{lt, 3}};
    Mat3 s = m;
    for (int i = 0; i < 3; ++i) s[i][i] -= lt;
    // the shift is uncertain at the eigenvalue scale, so singular values of
    // the shifted matrix (and its square) below that scale mean zero
    const RankResult r1 = rank_3x3(s, tol, 1.0 + lmax);
    const RankResult r2 = rank_3x3(matmul(s, s), tol,
                                   r1.sigma[0] * (r1.sigma[0] + 1.0 + lmax));
    r.indeterminate = r.indeterminate || r1.indeterminate || r2.indeterminate;
    int rank1 = r1.rank;
    if (rank1 == 3) {  // inconsistent with a triple eigenvalue
      r.indeterminate = true;
      rank1 = 2;
    }
    if (rank1 == 0)
      r.type = JordanType::Ia;
    else if (rank1 == 1)
      r.type = JordanType::II;
    else
      r.type = JordanType::III;
    const int want2 = r.type == JordanType::III ? 1 : 0;
    if (r2.rank != want2) r.indeterminate = true;
    if (std::fabs(lt) <= cut)
      r.nilpotency_degree =
          r.type == JordanType::Ia ? 0 : (r.type == JordanType::II ? 2 : 3);
    return r;
  }

  const double ld = m01 ? (e.lambda[0] + e.lambda[1]) / 2.0
                        : (e.lambda[1] + e.lambda[2]) / 2.0;
  const double ls = m01 ? e.lambda[2] : e.lambda[0];
  if (m01)
    r.eigenvalues = {{ld, 2}, {ls, 1}};
  else
    r.eigenvalues = {{ls, 1}, {ld, 2}};
  Mat3 s = m;
  for (int i = 0; i < 3; ++i) s[i][i] -= ld;
  const RankResult r1 = rank_3x3(s, tol, 1.0 + lmax);
  r.indeterminate = r.indeterminate || r1.indeterminate;
  if (r1.rank <= 1) {
    r.type = JordanType::Ia;
    if (r1.rank == 0) r.indeterminate = true;  // contradicts the simple eigenvalue
  } else {
    r.type = JordanType::II;
    if (r1.rank == 3) r.indeterminate = true;  // contradicts the double eigenvalue
  }
  return r;
}

JordanReport jordan_classify(const JacobiOperator& j, double tol) {
  JordanReport r = jordan_classify(j.epsX < 0 ? scaled(j.m3, -1.0) : j.m3, tol,
                                   restricted_entry_err(j));
  r.normalized = true;
  return r;
}

OssermanReport osserman_scan(const WalkerMetric& w, const Region& region,
                             int n_points, int n_dirs, double tol,
                             std::uint64_t seed) {
  if (n_points < 1 || n_dirs < 1)
    throw std::invalid_argument("osserman_scan: counts must be positive");
  for (int a = 0; a < 4; ++a)
    if (!(region.hi[a] >= region.lo[a]))
      throw std::invalid_argument("osserman_scan: empty region");
  if (!(tol > 0)) throw std::invalid_argument("osserman_scan: tol must be positive");

  OssermanReport rep;
  rep.points_sampled = n_points;
  rep.directions_per_point = n_dirs;
  rep.seed = seed;
  std::mt19937_64 rng(seed);

  bool all_pointwise = true;
  bool one_type = true;
  JordanType global_type{};
  bool have_global_type = false;

  for (int pi = 0; pi < n_points; ++pi) {
    OssermanPointRecord rec;
    rec.p.x1 = uniform_in(rng, region.lo[0], region.hi[0]);
    rec.p.x2 = uniform_in(rng, region.lo[1], region.hi[1]);
    rec.p.x3 = uniform_in(rng, region.lo[2], region.hi[2]);
    rec.p.x4 = uniform_in(rng, region.lo[3], region.hi[3]);
    const MetricAtPoint mp = w.at(rec.p);
    double ref_scale = 1.0;
    bool bundle_complex[2] = {false, false};
    for (int bundle = 0; bundle < 2; ++bundle) {
      const double want = bundle == 0 ? 1.0 : -1.0;
      auto& ref = bundle == 0 ? rec.spacelike_ref : rec.timelike_ref;
      for (int di = 0; di < n_dirs; ++di) {
        Vec4 X{};
        bool found = false;
        for (int attempt = 0; attempt < 20000 && !found; ++attempt) {
          double exx = 0.0;
          for (int a = 0; a < 4; ++a) {
            X[a] = uniform_in(rng, -1.0, 1.0);
            exx += X[a] * X[a];
          }
          const double gxx = inner_g(mp.g, X, X);
          // Keep a healthy margin from the null cone: the restricted
          // operator's entries lose ~|X|^2/|g(X,X)| digits, and repeated
          // eigenvalues lose half of what the entries lose. 1e-4 still
          // accepts the bulk of the ball when the signature allows it.
          found = want * gxx > 1e-4 * exx && exx > 1e-12;
        }
        if (!found)
          throw SamplingError(std::string("osserman_scan: no unit ") +
                              (bundle == 0 ? "spacelike" : "timelike") +
                              " direction found at a sample point");
        const JacobiOperator J = jacobi_operator(w, rec.p, X);
        const JacobiSpectrum sp = jacobi_spectrum(J);
        const JordanReport jr = jordan_classify(J, tol);
        if (jr.indeterminate) ++rec.indeterminate;
        if (di == 0) {
          ref = sp.normalized;
          bundle_complex[bundle] = sp.complex_pair;
          for (double v : ref) ref_scale = std::max(ref_scale, 1.0 + std::fabs(v));
          if (bundle == 0) rec.type = jr.type;
        }
        if (sp.complex_pair != bundle_complex[bundle])
          rec.comparable = false;
        else
          for (int k = 0; k < 4; ++k)
            rec.max_spread =
                std::max(rec.max_spread, std::fabs(sp.normalized[k] - ref[k]));
        if (jr.type != rec.type) rec.types_constant = false;
        if (!have_global_type) {
          global_type = jr.type;
          have_global_type = true;
        } else if (jr.type != global_type) {
          one_type = false;
        }
      }
    }
    // normalized spectra are bundle-independent for a pointwise-constant
    // operator family, so the two references must agree as well
    if (bundle_complex[0] != bundle_complex[1])
      rec.comparable = false;
    else
      for (int k = 0; k < 4; ++k)
        rec.max_spread = std::max(
            rec.max_spread,
            std::fabs(rec.spacelike_ref[k] - rec.timelike_ref[k]));
    rep.indeterminate_count += rec.indeterminate;
    rep.max_spread = std::max(rep.max_spread, rec.max_spread);
    const bool pw = rec.comparable && rec.max_spread <= tol * ref_scale;
    all_pointwise = all_pointwise && pw;
    one_type = one_type && rec.types_constant;
    if (pi == 0) {
      rep.spacelike_spectrum = rec.spacelike_ref;
      rep.timelike_spectrum = rec.timelike_ref;
    }
    rep.points.push_back(rec);
  }
  rep.is_pointwise_osserman = all_pointwise;
  rep.is_jordan_osserman = all_pointwise && one_type;
  return rep;
}

}  // namespace walker
