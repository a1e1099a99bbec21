#pragma once

// Flat key/value metric descriptions for the command-line tools: which
// constructor to use, expression strings for coefficients, sampling region
// and counts, tolerances and the RNG seed.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "walker/families.hpp"
#include "walker/jacobi.hpp"
#include "walker/metric.hpp"

namespace walker {

inline constexpr std::string_view kToolVersion = "0.1.0";

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parsed form of a config file. `exprs` holds the expression strings keyed by
// bare name: "a", "b", "c" from expr.*, coefficient names from coeff.*.
struct MetricConfig {
  std::string kind;
  std::map<std::string, std::string> exprs;
  std::optional<double> tau;
  std::optional<double> alpha;
  Region region;
  int n_points = 10;
  int n_dirs = 40;
  double tol = 1e-9;       // residual comparisons
  double eig_tol = 1e-8;   // eigenvalue matching / classification thresholds
  std::uint64_t seed = 0;
  std::uint64_t source_hash = 0;  // FNV-1a of the raw config text
};

std::uint64_t fnv1a64(std::string_view bytes);

// Accepted keys: kind, expr.{a,b,c}, coeff.{calA..calF,P,Q,S,T,U,V,xi,eta,gam},
// tau, alpha, region.{min,max}.{x1..x4}, samples.{points,dirs}, tol,
// tol.eigen, seed. Lines are `key = value`; '#' starts a comment; expression
// values may be double-quoted. Throws ConfigError (with a line number) on
// syntax errors, unknown or duplicate keys, keys foreign to the kind, missing
// required keys, non-parsing expressions or an empty region axis.
MetricConfig parse_config(const std::string& text);

// parse_config over the contents of `path`.
MetricConfig load_config(const std::string& path);

// The metric the config describes (dispatches on kind).
WalkerMetric build_metric(const MetricConfig& cfg);

// Coefficient bundles for the family kinds, for callers that need the family
// byproducts (residual fields, indicator, paracomplex structure) and not just
// the metric. Each throws ConfigError when cfg.kind does not match.
SelfDualCoefficients selfdual_coefficients(const MetricConfig& cfg);
TypeIICoefficients typeii_coefficients(const MetricConfig& cfg);
// order: P, Q, S, T, U, V, xi, eta, gam
std::array<ScalarField, 9> ricciflat_coefficients(const MetricConfig& cfg);
// order: a, b, c
std::array<ScalarField, 3> strict_coefficients(const MetricConfig& cfg);

}  // namespace walker
