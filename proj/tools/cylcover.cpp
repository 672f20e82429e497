// Command-line front end: theory, verify, sweep and condition subcommands.
#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "cylcover/config.hpp"
#include "cylcover/errors.hpp"
#include "cylcover/experiments.hpp"
#include "cylcover/theory.hpp"

namespace {

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw cylcover::IOFailure("cannot open " + out_path + " for writing");
  out << text;
  if (!out) throw cylcover::IOFailure("failed writing " + out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poisson cylinder coverage toolkit"};
  app.require_subcommand(1);

  std::size_t threads = 1;
  std::string out_path;
  std::optional<std::uint64_t> seed;
  std::string config_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--threads", threads, "Worker threads (affects speed only)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--out", out_path, "Output path (stdout when omitted)");
    sub->add_option("--seed", seed, "Master seed (overrides the config file)");
  };

  // theory
  std::size_t theory_d = 2;
  double theory_tol = 1e-8;
  CLI::App* theory = app.add_subcommand("theory", "Constants c*, inf phi_d and its argmin");
  theory->add_option("--dim,-d", theory_d, "Dimension d >= 2");
  theory->add_option("--tol", theory_tol, "Tolerance on inf phi_d");
  add_common(theory);

  // verify
  cylcover::VerifyOptions vopt;
  CLI::App* verify = app.add_subcommand("verify", "Monte Carlo cross-checks of the formulas");
  verify->add_option("--config", config_path, "Config file (d, replications, master_seed)");
  verify->add_option("--dim,-d", vopt.d, "Dimension d >= 2");
  verify->add_option("--rho", vopt.rho, "Intensity");
  verify->add_option("--c", vopt.c, "Radius constant: r = (c log rho / rho)^{1/(d-1)}");
  verify->add_option("--reps", vopt.reps, "Replications");
  verify->add_option("--crossing-directions", vopt.crossing_directions,
                     "Directions per crossing case");
  verify->add_option("--volume-points", vopt.volume_points, "MC points per volume replication");
  add_common(verify);

  // sweep
  CLI::App* sweep = app.add_subcommand("sweep", "Certified coverage radius over an intensity list");
  sweep->add_option("--config", config_path, "Config file")->required();
  add_common(sweep);

  // condition
  std::size_t cond_d = 2;
  std::string cond_law = "uniform";
  std::size_t cond_samples = 1'000'000;
  CLI::App* condition =
      app.add_subcommand("condition", "Directional-law mass of every orthant cone");
  condition->add_option("--dim,-d", cond_d, "Dimension d >= 2");
  condition->add_option("--law", cond_law, "uniform | cone:+1,-1 | fixed:0,1");
  condition->add_option("--samples", cond_samples, "Samples per cone");
  add_common(condition);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*theory) {
      emit(cylcover::to_json(cylcover::compute_theory(theory_d, theory_tol)), out_path);
      return 0;
    }
    if (*verify) {
      if (!config_path.empty()) {
        const cylcover::ExperimentConfig cfg = cylcover::load_config(config_path);
        vopt.d = cfg.d;
        vopt.reps = cfg.replications;
        vopt.seed = cfg.master_seed;
      }
      if (seed) vopt.seed = *seed;
      const cylcover::VerifyReport report = cylcover::run_verify(vopt, threads);
      emit(cylcover::to_json(report), out_path);
      for (const auto& c : report.checks) {
        std::fprintf(stderr, "%s %s\n", c.passed ? "PASS" : "FAIL", c.name.c_str());
      }
      return report.passed() ? 0 : 1;
    }
    if (*sweep) {
      cylcover::ExperimentConfig cfg = cylcover::load_config(config_path);
      if (seed) cfg.master_seed = *seed;
      if (!out_path.empty()) cfg.output_path = out_path;
      if (cfg.output_path.empty()) throw cylcover::ConfigError("no output_path and no --out");
      const auto records = cylcover::run_sweep(cfg, threads);
      const auto paths = cylcover::write_sweep(cfg.output_path, records);
      std::fprintf(stderr, "wrote %s, %s, %s\n", paths.csv.c_str(), paths.summary.c_str(),
                   paths.timing.c_str());
      return 0;
    }
    if (*condition) {
      const cylcover::DirectionalLaw law = cylcover::parse_law(cond_law, cond_d);
      const auto report = cylcover::run_condition(cond_d, law, cond_samples, seed.value_or(0));
      emit(cylcover::to_json(report), out_path);
      return 0;
    }
  } catch (const cylcover::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return 0;
}
