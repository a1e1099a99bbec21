#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "walker/config.hpp"
#include "walker/pipeline.hpp"

using namespace walker;

int main(int argc, char** argv) {
  CLI::App app{"walker: classify and verify four-dimensional Walker metrics"};
  app.require_subcommand(1);

  std::string config_path, json_path, families_action;
  long long seed_override = -1;
  bool inject = false;

  CLI::App* classify = app.add_subcommand(
      "classify",
      "sample a region; report residuals, Weyl classes and Jacobi types");
  classify->add_option("config", config_path, "config file")->required();
  classify->add_option("--json", json_path, "also write the JSON report here");
  classify->add_option("--seed", seed_override, "override the config seed");

  CLI::App* audit = app.add_subcommand(
      "audit", "compare closed-form curvature tables with brute-force oracles");
  audit->add_option("config", config_path, "config file")->required();
  // self-test hook: corrupt one closed-form entry so the audit must fail
  audit->add_flag("--inject-table-error", inject)->group("");

  CLI::App* verify = app.add_subcommand(
      "verify-family", "check the invariant bundle of a family config");
  verify->add_option("config", config_path, "config file")->required();

  CLI::App* families =
      app.add_subcommand("families", "information about the built-in families");
  families->add_option("action", families_action, "only: list")
      ->required()
      ->check(CLI::IsMember({"list"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed()) {
      MetricConfig cfg = load_config(config_path);
      if (seed_override >= 0) cfg.seed = static_cast<std::uint64_t>(seed_override);
      ClassificationReport rep = classify_run(cfg);
      report_text(std::cout, rep);
      if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) throw ConfigError("cannot write '" + json_path + "'");
        out << report_json(rep);
      }
      return report_exit_code(rep);
    }
    if (audit->parsed()) {
      MetricConfig cfg = load_config(config_path);
      auto rows = audit_run(cfg, inject);
      audit_text(std::cout, rows, cfg.tol);
      return audit_pass(rows, cfg.tol) ? 0 : 1;
    }
    if (verify->parsed()) {
      MetricConfig cfg = load_config(config_path);
      auto checks = verify_family_run(cfg);
      verify_text(std::cout, checks);
      return verify_exit_code(checks);
    }
    families_text(std::cout);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
