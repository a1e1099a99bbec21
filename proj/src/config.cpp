#include "walker/config.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace walker {

namespace {

constexpr const char* kKinds[] = {"raw",
                                  "selfdual",
                                  "typeII",
                                  "ricciflat-selfdual",
                                  "strict",
                                  "parakahler",
                                  "antiselfdual-example"};

constexpr const char* kCoeffNames[] = {"calA", "calB", "calC", "calD", "calE",
                                       "calF", "P",    "Q",    "S",    "T",
                                       "U",    "V",    "xi",   "eta",  "gam"};

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ConfigError("config line " + std::to_string(line) + ": " + msg);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view v, int line, const char* what) {
  const char* first = v.data();
  const char* last = v.data() + v.size();
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{} || ptr != last)
    fail(line, std::string("expected a number for ") + what + ", got '" +
                   std::string(v) + "'");
  return out;
}

long long parse_integer(std::string_view v, int line, const char* what) {
  const char* first = v.data();
  const char* last = v.data() + v.size();
  long long out = 0;
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{} || ptr != last)
    fail(line, std::string("expected an integer for ") + what + ", got '" +
                   std::string(v) + "'");
  return out;
}

bool known_coefficient(std::string_view name) {
  for (const char* c : kCoeffNames)
    if (name == c) return true;
  return false;
}

// which config keys make sense for which kind
bool kind_accepts_expr(std::string_view kind) {
  return kind == "raw" || kind == "strict";
}

bool kind_accepts_coeff(std::string_view kind, std::string_view name) {
  if (kind == "selfdual") return true;
  if (kind == "typeII" || kind == "ricciflat-selfdual") {
    return name == "P" || name == "Q" || name == "S" || name == "T" ||
           name == "U" || name == "V" ||
           (kind == "ricciflat-selfdual" &&
            (name == "xi" || name == "eta" || name == "gam"));
  }
  return false;
}

ScalarField field_or_zero(const MetricConfig& cfg, const std::string& name) {
  auto it = cfg.exprs.find(name);
  if (it == cfg.exprs.end()) return ScalarField();
  return parse_field(it->second);
}

void expect_kind(const MetricConfig& cfg, std::string_view kind) {
  if (cfg.kind != kind)
    throw ConfigError("config kind is '" + cfg.kind + "', expected '" +
                      std::string(kind) + "'");
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

MetricConfig parse_config(const std::string& text) {
  MetricConfig cfg;
  cfg.source_hash = fnv1a64(text);

  std::map<std::string, std::pair<std::string, int>> entries;  // key -> (value, line)
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    // comments start outside quotes
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') quoted = !quoted;
      if (line[i] == '#' && !quoted) {
        line = line.substr(0, i);
        break;
      }
    }
    line = trim(line);
    if (line.empty()) continue;

    size_t eq = line.find('=');
    if (eq == std::string_view::npos) fail(line_no, "expected 'key = value'");
    std::string key(trim(line.substr(0, eq)));
    std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) fail(line_no, "empty key");
    for (char ch : key)
      if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '.' && ch != '_')
        fail(line_no, "malformed key '" + key + "'");
    if (!value.empty() && value.front() == '"') {
      if (value.size() < 2 || value.back() != '"')
        fail(line_no, "unterminated quote");
      value = value.substr(1, value.size() - 2);
      if (value.find('"') != std::string_view::npos)
        fail(line_no, "embedded quote in value");
    }
    if (value.empty()) fail(line_no, "empty value for '" + key + "'");
    if (!entries.emplace(key, std::make_pair(std::string(value), line_no)).second)
      fail(line_no, "duplicate key '" + key + "'");
  }

  auto kind_it = entries.find("kind");
  if (kind_it == entries.end()) throw ConfigError("config: missing 'kind'");
  cfg.kind = kind_it->second.first;
  bool kind_ok = false;
  for (const char* k : kKinds) kind_ok = kind_ok || cfg.kind == k;
  if (!kind_ok)
    fail(kind_it->second.second, "unknown kind '" + cfg.kind + "'");
  entries.erase(kind_it);

  for (const auto& [key, vl] : entries) {
    const auto& [value, line] = vl;
    if (key.rfind("expr.", 0) == 0) {
      std::string name = key.substr(5);
      if (name != "a" && name != "b" && name != "c")
        fail(line, "unknown key '" + key + "'");
      if (!kind_accepts_expr(cfg.kind))
        fail(line, "'" + key + "' does not apply to kind '" + cfg.kind + "'");
      try {
        (void)parse_field(value);
      } catch (const ParseError& e) {
        fail(line, key + ": " + e.what());
      }
      cfg.exprs[name] = value;
    } else if (key.rfind("coeff.", 0) == 0) {
      std::string name = key.substr(6);
      if (!known_coefficient(name)) fail(line, "unknown key '" + key + "'");
      if (!kind_accepts_coeff(cfg.kind, name))
        fail(line, "'" + key + "' does not apply to kind '" + cfg.kind + "'");
      try {
        (void)parse_field(value);
      } catch (const ParseError& e) {
        fail(line, key + ": " + e.what());
      }
      cfg.exprs[name] = value;
    } else if (key == "tau") {
      if (cfg.kind != "typeII")
        fail(line, "'tau' only applies to kind 'typeII'");
      cfg.tau = parse_number(value, line, "tau");
    } else if (key == "alpha") {
      if (cfg.kind != "parakahler")
        fail(line, "'alpha' only applies to kind 'parakahler'");
      cfg.alpha = parse_number(value, line, "alpha");
    } else if (key.rfind("region.", 0) == 0) {
      std::string rest = key.substr(7);
      bool is_min = rest.rfind("min.", 0) == 0;
      bool is_max = rest.rfind("max.", 0) == 0;
      if (!is_min && !is_max) fail(line, "unknown key '" + key + "'");
      std::string axis = rest.substr(4);
      if (axis.size() != 2 || axis[0] != 'x' || axis[1] < '1' || axis[1] > '4')
        fail(line, "unknown key '" + key + "'");
      int idx = axis[1] - '1';
      double v = parse_number(value, line, key.c_str());
      (is_min ? cfg.region.lo : cfg.region.hi)[idx] = v;
    } else if (key == "samples.points") {
      long long v = parse_integer(value, line, key.c_str());
      if (v < 1) fail(line, "samples.points must be >= 1");
      cfg.n_points = static_cast<int>(v);
    } else if (key == "samples.dirs") {
      long long v = parse_integer(value, line, key.c_str());
      if (v < 1) fail(line, "samples.dirs must be >= 1");
      cfg.n_dirs = static_cast<int>(v);
    } else if (key == "tol") {
      cfg.tol = parse_number(value, line, "tol");
      if (cfg.tol <= 0.0) fail(line, "tol must be positive");
    } else if (key == "tol.eigen") {
      cfg.eig_tol = parse_number(value, line, "tol.eigen");
      if (cfg.eig_tol <= 0.0) fail(line, "tol.eigen must be positive");
    } else if (key == "seed") {
      long long v = parse_integer(value, line, "seed");
      if (v < 0) fail(line, "seed must be non-negative");
      cfg.seed = static_cast<std::uint64_t>(v);
    } else {
      fail(line, "unknown key '" + key + "'");
    }
  }

  for (int i = 0; i < 4; ++i) {
    if (!(cfg.region.lo[i] < cfg.region.hi[i]))
      throw ConfigError("config: region.min.x" + std::to_string(i + 1) +
                        " must be below region.max.x" + std::to_string(i + 1));
  }

  if (cfg.kind == "raw") {
    for (const char* name : {"a", "b", "c"})
      if (!cfg.exprs.count(name))
        throw ConfigError(std::string("config: kind 'raw' requires expr.") + name);
  }
  if (cfg.kind == "typeII" && !cfg.tau)
    throw ConfigError("config: kind 'typeII' requires tau");
  if (cfg.kind == "parakahler" && !cfg.alpha)
    throw ConfigError("config: kind 'parakahler' requires alpha");

  // constructor-level validation (x1/x2 dependence, tau != 0) now, so that
  // loading a config surfaces every usage error
  try {
    (void)build_metric(cfg);
  } catch (const CoefficientError& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return cfg;
}

MetricConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

WalkerMetric build_metric(const MetricConfig& cfg) {
  if (cfg.kind == "raw") {
    return WalkerMetric(field_or_zero(cfg, "a"), field_or_zero(cfg, "b"),
                        field_or_zero(cfg, "c"));
  }
  if (cfg.kind == "selfdual") return make_selfdual(selfdual_coefficients(cfg));
  if (cfg.kind == "typeII") return make_typeII(typeii_coefficients(cfg));
  if (cfg.kind == "ricciflat-selfdual") {
    auto c = ricciflat_coefficients(cfg);
    return make_ricciflat_selfdual(c[0], c[1], c[2], c[3], c[4], c[5], c[6],
                                   c[7], c[8])
        .metric;
  }
  if (cfg.kind == "strict") {
    auto c = strict_coefficients(cfg);
    return make_strict(c[0], c[1], c[2]).metric;
  }
  if (cfg.kind == "parakahler") return make_parakahler(*cfg.alpha).metric;
  if (cfg.kind == "antiselfdual-example") return make_antiselfdual_example();
  throw ConfigError("unknown kind '" + cfg.kind + "'");
}

SelfDualCoefficients selfdual_coefficients(const MetricConfig& cfg) {
  expect_kind(cfg, "selfdual");
  SelfDualCoefficients c;
  c.calA = field_or_zero(cfg, "calA");
  c.calB = field_or_zero(cfg, "calB");
  c.calC = field_or_zero(cfg, "calC");
  c.calD = field_or_zero(cfg, "calD");
  c.calE = field_or_zero(cfg, "calE");
  c.calF = field_or_zero(cfg, "calF");
  c.P = field_or_zero(cfg, "P");
  c.Q = field_or_zero(cfg, "Q");
  c.S = field_or_zero(cfg, "S");
  c.T = field_or_zero(cfg, "T");
  c.U = field_or_zero(cfg, "U");
  c.V = field_or_zero(cfg, "V");
  c.xi = field_or_zero(cfg, "xi");
  c.eta = field_or_zero(cfg, "eta");
  c.gam = field_or_zero(cfg, "gam");
  return c;
}

TypeIICoefficients typeii_coefficients(const MetricConfig& cfg) {
  expect_kind(cfg, "typeII");
  TypeIICoefficients c;
  c.tau = cfg.tau.value_or(0.0);
  c.P = field_or_zero(cfg, "P");
  c.Q = field_or_zero(cfg, "Q");
  c.S = field_or_zero(cfg, "S");
  c.T = field_or_zero(cfg, "T");
  c.U = field_or_zero(cfg, "U");
  c.V = field_or_zero(cfg, "V");
  return c;
}

std::array<ScalarField, 9> ricciflat_coefficients(const MetricConfig& cfg) {
  expect_kind(cfg, "ricciflat-selfdual");
  return {field_or_zero(cfg, "P"),  field_or_zero(cfg, "Q"),
          field_or_zero(cfg, "S"),  field_or_zero(cfg, "T"),
          field_or_zero(cfg, "U"),  field_or_zero(cfg, "V"),
          field_or_zero(cfg, "xi"), field_or_zero(cfg, "eta"),
          field_or_zero(cfg, "gam")};
}

std::array<ScalarField, 3> strict_coefficients(const MetricConfig& cfg) {
  expect_kind(cfg, "strict");
  return {field_or_zero(cfg, "a"), field_or_zero(cfg, "b"),
          field_or_zero(cfg, "c")};
}

}  // namespace walker
