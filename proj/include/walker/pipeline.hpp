#pragma once

// The work behind the command-line verbs: classification reports (text +
// stable JSON), closed-form-vs-oracle audits, and per-family invariant
// verification. Everything here is deterministic for a fixed config + seed;
// reports carry no timestamps.

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "walker/config.hpp"
#include "walker/duality.hpp"
#include "walker/jacobi.hpp"

namespace walker {

struct PointRecord {
  Point p{};
  double tau = 0.0;
  std::array<double, 5> selfdual_residuals{};
  std::array<double, 6> einstein_residuals{};
  WplusDiagnostic wplus{};
  JordanType jordan = JordanType::Ia;  // first sampled direction's type
  std::array<double, 4> spectrum{};    // normalized, spacelike reference
  double max_spread = 0.0;
  bool comparable = true;
  int indeterminate = 0;  // fragile direction classifications at this point
};

struct ClassificationReport {
  std::string kind;
  std::vector<PointRecord> points;
  bool is_selfdual = false;
  bool is_einstein = false;
  bool is_pointwise_osserman = false;
  bool is_jordan_osserman = false;
  int indeterminate_count = 0;
  double max_selfdual_residual = 0.0;
  double max_einstein_residual = 0.0;
  double residual_tol = 0.0;
  std::uint64_t config_hash = 0;
  std::uint64_t seed = 0;
};

ClassificationReport classify_run(const MetricConfig& cfg);

// Stable rendering: object key order fixed, shortest round-trip doubles,
// trailing newline. Identical config + seed give byte-identical output.
std::string report_json(const ClassificationReport& r);
void report_text(std::ostream& os, const ClassificationReport& r);
// 0 clean, 2 when any classification was indeterminate
int report_exit_code(const ClassificationReport& r);

struct TableAudit {
  std::string table;
  double max_abs = 0.0;  // worst |closed - oracle|
  double max_rel = 0.0;  // worst |closed - oracle| / (1 + |oracle|)
};

// Compares every closed-form curvature table against its brute-force oracle
// at seeded sample points. inject_error deliberately corrupts one curvature
// entry first, as a self-test that the audit can fail.
std::vector<TableAudit> audit_run(const MetricConfig& cfg, bool inject_error = false);
bool audit_pass(const std::vector<TableAudit>& rows, double tol);
void audit_text(std::ostream& os, const std::vector<TableAudit>& rows, double tol);

struct InvariantCheck {
  std::string name;
  bool pass = false;
  bool indeterminate = false;
  double worst = 0.0;  // the extreme value the check compared against its bound
  std::string detail;
};

// The family-specific invariant bundle for cfg.kind (every kind except raw).
std::vector<InvariantCheck> verify_family_run(const MetricConfig& cfg);
void verify_text(std::ostream& os, const std::vector<InvariantCheck>& checks);
// 0 all pass, 2 all pass but some indeterminate, 1 otherwise
int verify_exit_code(const std::vector<InvariantCheck>& checks);

// One line per kind, for `families list`.
void families_text(std::ostream& os);

}  // namespace walker
