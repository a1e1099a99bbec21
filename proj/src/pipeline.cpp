#include "walker/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <random>

#include "json.hpp"
#include "walker/curvature.hpp"

namespace walker {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* jordan_name(JordanType t) {
  switch (t) {
    case JordanType::Ia: return "Ia";
    case JordanType::Ib: return "Ib";
    case JordanType::II: return "II";
    case JordanType::III: return "III";
  }
  return "?";
}

const char* wplus_name(WplusJordan t) {
  switch (t) {
    case WplusJordan::TypeIa: return "Ia";
    case WplusJordan::TypeII: return "II";
    case WplusJordan::Zero: return "Zero";
    case WplusJordan::TwoStep: return "TwoStep";
    case WplusJordan::ThreeStep: return "ThreeStep";
  }
  return "?";
}

std::string hash_string(std::uint64_t h) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a:%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (double(rng() >> 11) * 0x1.0p-53);
}

Point sample_point(std::mt19937_64& rng, const Region& r) {
  Point p;
  p.x1 = uniform_in(rng, r.lo[0], r.hi[0]);
  p.x2 = uniform_in(rng, r.lo[1], r.hi[1]);
  p.x3 = uniform_in(rng, r.lo[2], r.hi[2]);
  p.x4 = uniform_in(rng, r.lo[3], r.hi[3]);
  return p;
}

// unit-scale non-null direction; sign > 0 spacelike, < 0 timelike, 0 either
Vec4 sample_direction(std::mt19937_64& rng, const WalkerMetric& w,
                      const Point& p, int sign) {
  for (int attempt = 0; attempt < 20000; ++attempt) {
    Vec4 x{};
    for (auto& v : x) v = uniform_in(rng, -1.0, 1.0);
    double exx = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
    if (exx < 1e-12) continue;
    double gxx = w.inner(p, x, x);
    if (std::fabs(gxx) < 1e-3 * exx) continue;
    if (sign != 0 && gxx * sign <= 0.0) continue;
    return x;
  }
  throw SamplingError("could not sample a non-null direction");
}

double max_abs(const Mat3& m) {
  double out = 0.0;
  for (const auto& row : m)
    for (double v : row) out = std::fmax(out, std::fabs(v));
  return out;
}

double max_abs(const Mat4& m) {
  double out = 0.0;
  for (const auto& row : m)
    for (double v : row) out = std::fmax(out, std::fabs(v));
  return out;
}

// size of the jet data feeding the curvature tables, for relative bounds
double jet_scale(const WalkerMetric& w, const Point& p) {
  double s = 0.0;
  for (const CoefficientJet& j : {w.a_jet(p), w.b_jet(p), w.c_jet(p)}) {
    s = std::fmax(s, std::fabs(j.f));
    for (double v : j.d) s = std::fmax(s, std::fabs(v));
    for (const auto& row : j.dd)
      for (double v : row) s = std::fmax(s, std::fabs(v));
  }
  return s;
}

std::array<double, 4> family_spectrum(double tau) {
  std::array<double, 4> want{0.0, tau / 6.0, tau / 24.0, tau / 24.0};
  std::sort(want.begin(), want.end());
  return want;
}

}  // namespace

ClassificationReport classify_run(const MetricConfig& cfg) {
  WalkerMetric w = build_metric(cfg);
  OssermanReport scan = osserman_scan(w, cfg.region, cfg.n_points, cfg.n_dirs,
                                      cfg.eig_tol, cfg.seed);

  ClassificationReport out;
  out.kind = cfg.kind;
  out.residual_tol = cfg.tol;
  out.config_hash = cfg.source_hash;
  out.seed = cfg.seed;
  out.is_pointwise_osserman = scan.is_pointwise_osserman;
  out.is_jordan_osserman = scan.is_jordan_osserman;
  out.indeterminate_count = scan.indeterminate_count;

  for (const OssermanPointRecord& rec : scan.points) {
    PointRecord pr;
    pr.p = rec.p;
    RicciCurvature rc = ricci(w, rec.p);
    pr.tau = rc.tau;
    pr.selfdual_residuals = selfdual_residuals(w, rec.p);
    pr.einstein_residuals = einstein_residuals(w, rec.p);
    pr.wplus = classify_wplus(w, rec.p, cfg.eig_tol);
    pr.jordan = rec.type;
    pr.spectrum = rec.spacelike_ref;
    pr.max_spread = rec.max_spread;
    pr.comparable = rec.comparable;
    pr.indeterminate = rec.indeterminate + (pr.wplus.indeterminate ? 1 : 0);
    if (pr.wplus.indeterminate) ++out.indeterminate_count;

    for (double r : pr.selfdual_residuals)
      out.max_selfdual_residual = std::fmax(out.max_selfdual_residual, std::fabs(r));
    for (double r : pr.einstein_residuals)
      out.max_einstein_residual = std::fmax(out.max_einstein_residual, std::fabs(r));
    out.points.push_back(pr);
  }
  out.is_selfdual = out.max_selfdual_residual <= cfg.tol;
  out.is_einstein = out.max_einstein_residual <= cfg.tol;
  return out;
}

std::string report_json(const ClassificationReport& r) {
  ordered_json j;
  j["summary"] = {
      {"kind", r.kind},
      {"is_selfdual", r.is_selfdual},
      {"is_einstein", r.is_einstein},
      {"is_pointwise_osserman", r.is_pointwise_osserman},
      {"is_jordan_osserman", r.is_jordan_osserman},
      {"indeterminate_count", r.indeterminate_count},
      {"max_selfdual_residual", r.max_selfdual_residual},
      {"max_einstein_residual", r.max_einstein_residual},
      {"residual_tol", r.residual_tol},
  };
  j["points"] = ordered_json::array();
  for (const PointRecord& pr : r.points) {
    ordered_json pj;
    pj["point"] = {pr.p.x1, pr.p.x2, pr.p.x3, pr.p.x4};
    pj["tau"] = pr.tau;
    pj["selfdual_residuals"] = pr.selfdual_residuals;
    pj["einstein_residuals"] = pr.einstein_residuals;
    pj["wplus"] = {{"jordan", wplus_name(pr.wplus.jordan)},
                   {"w11", pr.wplus.w11},
                   {"w12", pr.wplus.w12},
                   {"delta", pr.wplus.delta},
                   {"indeterminate", pr.wplus.indeterminate}};
    pj["jordan_type"] = jordan_name(pr.jordan);
    pj["normalized_spectrum"] = pr.spectrum;
    pj["max_spread"] = pr.max_spread;
    pj["comparable"] = pr.comparable;
    pj["indeterminate"] = pr.indeterminate;
    j["points"].push_back(pj);
  }
  j["provenance"] = {
      {"config_hash", hash_string(r.config_hash)},
      {"seed", r.seed},
      {"tool_version", std::string(kToolVersion)},
  };
  return j.dump(2) + "\n";
}

void report_text(std::ostream& os, const ClassificationReport& r) {
  os << "kind: " << r.kind << "   points: " << r.points.size()
     << "   seed: " << r.seed << "   " << hash_string(r.config_hash) << "\n";
  os << "summary\n";
  os << "  self-dual:          " << (r.is_selfdual ? "yes" : "no")
     << "  (max residual " << r.max_selfdual_residual << ", tol "
     << r.residual_tol << ")\n";
  os << "  einstein:           " << (r.is_einstein ? "yes" : "no")
     << "  (max residual " << r.max_einstein_residual << ")\n";
  os << "  pointwise osserman: " << (r.is_pointwise_osserman ? "yes" : "no")
     << "\n";
  os << "  jordan osserman:    " << (r.is_jordan_osserman ? "yes" : "no")
     << "\n";
  os << "  indeterminate:      " << r.indeterminate_count << "\n";
  os << "points (tau | W+ class | jacobi type | normalized spectrum)\n";
  for (const PointRecord& pr : r.points) {
    os << "  (" << std::setw(7) << std::setprecision(3) << std::fixed << pr.p.x1
       << "," << std::setw(7) << pr.p.x2 << "," << std::setw(7) << pr.p.x3
       << "," << std::setw(7) << pr.p.x4 << ")";
    os.unsetf(std::ios::fixed);
    os << "  tau " << std::setprecision(6) << pr.tau << "  W+ "
       << wplus_name(pr.wplus.jordan) << "  jacobi " << jordan_name(pr.jordan)
       << "  [";
    for (int i = 0; i < 4; ++i) os << (i ? ", " : "") << pr.spectrum[i];
    os << "]";
    if (pr.indeterminate) os << "  indeterminate:" << pr.indeterminate;
    os << "\n";
  }
}

int report_exit_code(const ClassificationReport& r) {
  return r.indeterminate_count > 0 ? 2 : 0;
}

std::vector<TableAudit> audit_run(const MetricConfig& cfg, bool inject_error) {
  WalkerMetric w = build_metric(cfg);
  std::mt19937_64 rng(cfg.seed);

  TableAudit conn{"connection", 0, 0}, riem{"riemann", 0, 0},
      ricc{"ricci", 0, 0}, weyl4{"weyl", 0, 0}, wplus{"weyl-selfdual", 0, 0},
      wminus{"weyl-antiselfdual", 0, 0};

  auto feed = [](TableAudit& t, double closed, double oracle) {
    double d = std::fabs(closed - oracle);
    t.max_abs = std::fmax(t.max_abs, d);
    t.max_rel = std::fmax(t.max_rel, d / (1.0 + std::fabs(oracle)));
  };

  for (int n = 0; n < cfg.n_points; ++n) {
    Point p = sample_point(rng, cfg.region);

    ConnectionTable c = connection(w, p), co = connection_oracle(w, p);
    for (int k = 0; k < 4; ++k)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) feed(conn, c.coeff(k, i, j), co.coeff(k, i, j));

    RiemannTable r = riemann(w, p), ro = riemann_oracle(w, p);
    if (inject_error) r.r[0][2][0][2] += 1e-3;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k)
          for (int l = 0; l < 4; ++l) feed(riem, r(i, j, k, l), ro(i, j, k, l));

    RicciCurvature rc = ricci(w, p), rco = ricci_oracle(w, p);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) feed(ricc, rc.rho[i][j], rco.rho[i][j]);
    feed(ricc, rc.tau, rco.tau);

    WeylTable wt = weyl(w, p);
    WeylTable wo = weyl_from(ro, rco, w.at(p).g);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k)
          for (int l = 0; l < 4; ++l) feed(weyl4, wt(i, j, k, l), wo(i, j, k, l));

    for (auto sign : {DualitySign::SelfDual, DualitySign::AntiSelfDual}) {
      WeylOperator m = wpm_matrix(w, p, sign);
      WeylOperator o = wpm_oracle(w, p, sign);
      TableAudit& t = sign == DualitySign::SelfDual ? wplus : wminus;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) feed(t, m.m[i][j], o.m[i][j]);
    }
  }
  return {conn, riem, ricc, weyl4, wplus, wminus};
}

bool audit_pass(const std::vector<TableAudit>& rows, double tol) {
  for (const TableAudit& t : rows)
    if (!(t.max_rel <= tol)) return false;
  return true;
}

void audit_text(std::ostream& os, const std::vector<TableAudit>& rows, double tol) {
  os << "table                 max |closed-oracle|   max scaled    within "
     << std::setprecision(3) << std::scientific << tol << "\n";
  for (const TableAudit& t : rows) {
    os << "  " << std::left << std::setw(20) << t.table << std::right << "  "
       << std::setw(12) << std::setprecision(4) << std::scientific << t.max_abs
       << "        " << std::setw(12) << t.max_rel << "  "
       << (t.max_rel <= tol ? "yes" : "NO") << "\n";
  }
  os.unsetf(std::ios::scientific);
}

namespace {

struct VerifyContext {
  const MetricConfig& cfg;
  WalkerMetric w;
  std::mt19937_64 rng;
  std::vector<Point> pts;

  explicit VerifyContext(const MetricConfig& c)
      : cfg(c), w(build_metric(c)), rng(c.seed) {
    for (int i = 0; i < c.n_points; ++i) pts.push_back(sample_point(rng, c.region));
  }
};

InvariantCheck bounded_check(const std::string& name, double worst, double bound) {
  InvariantCheck out;
  out.name = name;
  out.worst = worst;
  out.pass = worst <= bound;
  char buf[64];
  std::snprintf(buf, sizeof buf, "max %.3e vs bound %.3e", worst, bound);
  out.detail = buf;
  return out;
}

InvariantCheck check_selfdual_residuals(VerifyContext& vc, double margin = 1.0) {
  double worst = 0.0, bound = 0.0;
  for (const Point& p : vc.pts) {
    for (double r : selfdual_residuals(vc.w, p)) worst = std::fmax(worst, std::fabs(r));
    WeylOperator wm = wpm_matrix(vc.w, p, DualitySign::AntiSelfDual);
    worst = std::fmax(worst, max_abs(wm.m));
    bound = std::fmax(bound, vc.cfg.tol * margin * (1.0 + jet_scale(vc.w, p)));
  }
  return bounded_check("anti-self-dual half vanishes", worst, bound);
}

InvariantCheck check_ricci_flat(VerifyContext& vc) {
  double worst = 0.0, bound = 0.0;
  for (const Point& p : vc.pts) {
    RicciCurvature rc = ricci(vc.w, p);
    worst = std::fmax(worst, max_abs(rc.rho));
    worst = std::fmax(worst, std::fabs(rc.tau));
    bound = std::fmax(bound, vc.cfg.tol * (1.0 + jet_scale(vc.w, p)));
  }
  return bounded_check("ricci tensor vanishes", worst, bound);
}

InvariantCheck check_einstein(VerifyContext& vc, double tau) {
  double worst = 0.0, bound = 0.0;
  for (const Point& p : vc.pts) {
    RicciCurvature rc = ricci(vc.w, p);
    worst = std::fmax(worst, std::fabs(rc.tau - tau));
    for (double r : einstein_residuals(vc.w, p)) worst = std::fmax(worst, std::fabs(r));
    bound = std::fmax(bound,
                      vc.cfg.tol * (1.0 + std::fabs(tau) + jet_scale(vc.w, p)));
  }
  return bounded_check("einstein with the configured scalar curvature", worst,
                       bound);
}

InvariantCheck check_family_spectrum(VerifyContext& vc, double tau) {
  std::array<double, 4> want = family_spectrum(tau);
  double worst = 0.0;
  double ratio_worst = 0.0;
  for (const Point& p : vc.pts) {
    for (int sign : {+1, -1}) {
      Vec4 x = sample_direction(vc.rng, vc.w, p, sign);
      JacobiSpectrum sp = jacobi_spectrum(jacobi_operator(vc.w, p, x));
      if (sp.complex_pair) {
        worst = std::fmax(worst, HUGE_VAL);
        continue;
      }
      for (int i = 0; i < 4; ++i)
        worst = std::fmax(worst, std::fabs(sp.normalized[i] - want[i]));
      double big = 0.0, small = HUGE_VAL;
      for (double v : sp.normalized) {
        if (std::fabs(v) < 1e-6 * (1.0 + std::fabs(tau))) continue;
        big = std::fmax(big, std::fabs(v));
        small = std::fmin(small, std::fabs(v));
      }
      if (tau != 0.0) ratio_worst = std::fmax(ratio_worst, std::fabs(big / small - 4.0));
    }
  }
  double bound = vc.cfg.eig_tol * (1.0 + std::fabs(tau));
  InvariantCheck sp = bounded_check("jacobi spectrum is {0, tau/6, tau/24, tau/24}",
                                    worst, bound);
  if (tau != 0.0 && ratio_worst > vc.cfg.eig_tol * 10.0) sp.pass = false;
  return sp;
}

InvariantCheck check_jordan_vs_wplus(VerifyContext& vc) {
  int mismatches = 0, indeterminate = 0;
  for (const Point& p : vc.pts) {
    WplusDiagnostic cls = classify_wplus(vc.w, p, vc.cfg.eig_tol);
    Vec4 x = sample_direction(vc.rng, vc.w, p, 0);
    JacobiOperator j = jacobi_operator(vc.w, p, x);
    JordanReport jr = jordan_classify(j, vc.cfg.eig_tol);
    if (cls.indeterminate || jr.indeterminate) {
      ++indeterminate;
      continue;
    }
    bool ok = true;
    switch (cls.jordan) {
      case WplusJordan::TypeIa: ok = jr.type == JordanType::Ia; break;
      case WplusJordan::TypeII: ok = jr.type == JordanType::II; break;
      case WplusJordan::Zero:
        ok = max_abs(j.m4) <= vc.cfg.tol * (1.0 + jet_scale(vc.w, p));
        break;
      case WplusJordan::TwoStep:
        ok = jr.type == JordanType::II && jr.nilpotency_degree == 2;
        break;
      case WplusJordan::ThreeStep:
        ok = jr.type == JordanType::III && jr.nilpotency_degree == 3;
        break;
    }
    if (!ok) ++mismatches;
  }
  InvariantCheck out;
  out.name = "jacobi jordan type tracks the closed-form diagnostic";
  out.pass = mismatches == 0;
  out.indeterminate = indeterminate > 0;
  out.worst = mismatches;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%d mismatches, %d indeterminate", mismatches,
                indeterminate);
  out.detail = buf;
  return out;
}

std::vector<InvariantCheck> verify_selfdual(VerifyContext& vc) {
  return {check_selfdual_residuals(vc)};
}

std::vector<InvariantCheck> verify_typeii(VerifyContext& vc) {
  double tau = *vc.cfg.tau;
  return {check_einstein(vc, tau), check_selfdual_residuals(vc),
          check_family_spectrum(vc, tau), check_jordan_vs_wplus(vc)};
}

std::vector<InvariantCheck> verify_ricciflat(VerifyContext& vc) {
  auto c = ricciflat_coefficients(vc.cfg);
  RicciFlatFamily fam = make_ricciflat_selfdual(c[0], c[1], c[2], c[3], c[4],
                                                c[5], c[6], c[7], c[8]);
  double worst = 0.0;
  for (const Point& p : vc.pts)
    for (const ScalarField& r : fam.residuals)
      worst = std::fmax(worst, std::fabs(r(p)));
  InvariantCheck res = bounded_check("constraint residuals vanish", worst,
                                     vc.cfg.tol);

  std::vector<InvariantCheck> out{res, check_ricci_flat(vc),
                                  check_selfdual_residuals(vc),
                                  check_jordan_vs_wplus(vc)};
  return out;
}

std::vector<InvariantCheck> verify_strict(VerifyContext& vc) {
  auto c = strict_coefficients(vc.cfg);
  StrictFamily fam = make_strict(c[0], c[1], c[2]);

  double jet_worst = 0.0;
  int mismatches = 0, indeterminate = 0;
  for (const Point& p : vc.pts) {
    CoefficientJet aj = fam.metric.a_jet(p), bj = fam.metric.b_jet(p),
                   cj = fam.metric.c_jet(p);
    double want = 2.0 * cj.dd[2][3] - aj.dd[3][3] - bj.dd[2][2];
    jet_worst = std::fmax(jet_worst, std::fabs(fam.indicator(p) - want));

    double ind = fam.indicator(p);
    double scale = 1.0 + jet_scale(fam.metric, p);
    Vec4 x = sample_direction(vc.rng, vc.w, p, 0);
    JacobiOperator j = jacobi_operator(vc.w, p, x);
    if (std::fabs(ind) <= vc.cfg.tol * scale) {
      if (max_abs(j.m4) > vc.cfg.tol * scale) ++mismatches;
    } else if (std::fabs(ind) > 1e-6 * scale) {
      JordanReport jr = jordan_classify(j, vc.cfg.eig_tol);
      bool two_step = jr.type == JordanType::II && jr.nilpotency_degree == 2 &&
                      max_abs(j.m4) > vc.cfg.tol;
      if (!two_step) ++mismatches;
    } else {
      ++indeterminate;  // indicator in the ambiguous band
    }
  }

  InvariantCheck dichotomy;
  dichotomy.name = "jacobi operators vanish or are two-step nilpotent";
  dichotomy.pass = mismatches == 0;
  dichotomy.indeterminate = indeterminate > 0;
  dichotomy.worst = mismatches;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%d mismatches, %d indeterminate", mismatches,
                indeterminate);
  dichotomy.detail = buf;

  return {check_ricci_flat(vc), check_selfdual_residuals(vc),
          bounded_check("indicator equals 2c_34 - a_44 - b_33", jet_worst,
                        1e-12),
          dichotomy};
}

std::vector<InvariantCheck> verify_parakahler(VerifyContext& vc) {
  ParaKahlerFamily fam = make_parakahler(*vc.cfg.alpha);
  double alpha = fam.alpha;

  double sq_worst = 0.0, iso_worst = 0.0;
  for (const Point& p : vc.pts) {
    Mat4 j = fam.J(p);
    Mat4 jj = matmul(j, j);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        sq_worst = std::fmax(sq_worst, std::fabs(jj[r][c] - (r == c ? 1.0 : 0.0)));
    for (int rep = 0; rep < 4; ++rep) {
      Vec4 x{}, y{};
      for (auto& v : x) v = uniform_in(vc.rng, -1.0, 1.0);
      for (auto& v : y) v = uniform_in(vc.rng, -1.0, 1.0);
      double lhs = fam.metric.inner(p, matvec(j, x), matvec(j, y));
      double rhs = -fam.metric.inner(p, x, y);
      iso_worst = std::fmax(iso_worst,
                            std::fabs(lhs - rhs) / (1.0 + std::fabs(rhs)));
    }
  }

  std::vector<InvariantCheck> out{
      bounded_check("paracomplex structure squares to the identity", sq_worst,
                    1e-12),
      bounded_check("structure reverses the inner product", iso_worst, 1e-12),
      check_einstein(vc, 6.0 * alpha), check_selfdual_residuals(vc)};
  if (alpha != 0.0) {
    out.push_back(check_family_spectrum(vc, 6.0 * alpha));
    out.push_back(check_jordan_vs_wplus(vc));
  }
  return out;
}

std::vector<InvariantCheck> verify_antiselfdual(VerifyContext& vc) {
  double wplus_worst = 0.0, wminus_floor = HUGE_VAL;
  double nilp_worst = 0.0;
  for (const Point& p : vc.pts) {
    wplus_worst = std::fmax(
        wplus_worst, max_abs(wpm_matrix(vc.w, p, DualitySign::SelfDual).m));
    wminus_floor = std::fmin(
        wminus_floor, max_abs(wpm_matrix(vc.w, p, DualitySign::AntiSelfDual).m));
    Vec4 x = sample_direction(vc.rng, vc.w, p, 0);
    JacobiOperator j = jacobi_operator(vc.w, p, x);
    double n3 = max_abs(j.m3);
    nilp_worst = std::fmax(nilp_worst, max_abs(matmul(j.m3, j.m3)) /
                                           ((1.0 + n3) * (1.0 + n3)));
  }

  InvariantCheck nonzero;
  nonzero.name = "anti-self-dual half is nonzero";
  nonzero.pass = wminus_floor > 1e-6;
  nonzero.worst = wminus_floor;
  char buf[64];
  std::snprintf(buf, sizeof buf, "min pointwise max %.3e", wminus_floor);
  nonzero.detail = buf;

  return {check_ricci_flat(vc),
          bounded_check("self-dual Weyl half vanishes", wplus_worst, vc.cfg.tol),
          nonzero,
          bounded_check("jacobi operators square to zero", nilp_worst,
                        vc.cfg.tol)};
}

}  // namespace

std::vector<InvariantCheck> verify_family_run(const MetricConfig& cfg) {
  VerifyContext vc(cfg);
  if (cfg.kind == "selfdual") return verify_selfdual(vc);
  if (cfg.kind == "typeII") return verify_typeii(vc);
  if (cfg.kind == "ricciflat-selfdual") return verify_ricciflat(vc);
  if (cfg.kind == "strict") return verify_strict(vc);
  if (cfg.kind == "parakahler") return verify_parakahler(vc);
  if (cfg.kind == "antiselfdual-example") return verify_antiselfdual(vc);
  throw ConfigError("kind '" + cfg.kind + "' is not a metric family");
}

void verify_text(std::ostream& os, const std::vector<InvariantCheck>& checks) {
  for (const InvariantCheck& c : checks) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    if (c.indeterminate) os << "  [indeterminate samples]";
    os << "\n";
  }
}

int verify_exit_code(const std::vector<InvariantCheck>& checks) {
  bool indet = false;
  for (const InvariantCheck& c : checks) {
    if (!c.pass) return 1;
    indet = indet || c.indeterminate;
  }
  return indet ? 2 : 0;
}

void families_text(std::ostream& os) {
  os << "raw                   user-supplied expr.a/b/c; no family invariants, "
        "classify and audit only\n"
     << "selfdual              the full solution family of the anti-self-dual "
        "vanishing system; 15 coefficient functions of (x3, x4)\n"
     << "typeII                einstein self-dual metrics with scalar "
        "curvature tau != 0; jacobi spectrum {0, tau/6, tau/24, tau/24}\n"
     << "ricciflat-selfdual    scalar-flat branch, linear in (x1, x2); "
        "candidate coefficients are checked against three constraint "
        "residuals\n"
     << "strict                coefficients free of (x1, x2); ricci-flat and "
        "self-dual, jacobi operators vanish or are two-step nilpotent\n"
     << "parakahler            (alpha x1^2, alpha x2^2, alpha x1 x2) with a "
        "paracomplex structure; diagonalizable jacobi operators\n"
     << "antiselfdual-example  a = b = c = x1^2 + x2^2 - 2 x1 x2; the "
        "self-dual Weyl half vanishes, the anti-self-dual half does not\n";
}

}  // namespace walker
