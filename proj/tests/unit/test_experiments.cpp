#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cylcover/config.hpp"
#include "cylcover/errors.hpp"
#include "cylcover/experiments.hpp"

using namespace cylcover;

namespace {

const char* kSmallSweep =
    "# small sweep\n"
    "d = 2\n"
    "model = lines-ball\n"
    "law = uniform\n"
    "rho_list = 20, 40\n"
    "replications = 5\n"
    "tol = 1e-5\n"
    "master_seed = 17\n";

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("config parsing") {
  const ExperimentConfig c = parse_config(kSmallSweep);
  CHECK(c.d == 2);
  CHECK(c.model == ModelKind::kLinesBall);
  CHECK(c.rho_list == std::vector<double>{20.0, 40.0});
  CHECK(c.replications == 5);
  CHECK(c.tol == 1e-5);
  CHECK(c.master_seed == 17);
  CHECK(std::holds_alternative<UniformHemisphere>(c.directional_law()));

  const ExperimentConfig b = parse_config(
      "d=2\nmodel=brownian\nrho_list=100\nreplications=1\ntol=1e-4\nmaster_seed=0\nn_steps=256\n");
  CHECK(b.model == ModelKind::kBrownian);
  CHECK(b.brownian_steps() == 256);
}

TEST_CASE("config errors") {
  const std::string base = "d=2\nmodel=lines-ball\nreplications=2\ntol=1e-4\nmaster_seed=1\n";
  CHECK_NOTHROW(parse_config(base + "rho_list=10,100\n"));
  CHECK_THROWS_AS(parse_config(base + "rho_list=100,10\n"), ConfigError);
  CHECK_THROWS_AS(parse_config(base + "rho_list=10,10\n"), ConfigError);
  CHECK_THROWS_AS(parse_config(base + "rho_list=0\n"), ConfigError);
  CHECK_THROWS_AS(parse_config(base + "rho_list=-5\n"), ConfigError);
  CHECK_THROWS_AS(parse_config(base + "rho_list=10,abc\n"), ConfigError);
  CHECK_THROWS_AS(parse_config(base + "rho_list=10\nrhos=3\n"), ConfigError);
  CHECK_THROWS_AS(parse_config(base + "rho_list=10\nd=3\n"), ConfigError);
  CHECK_THROWS_AS(parse_config(base + "rho_list=10\nn_steps=8\n"), ConfigError);
  CHECK_THROWS_AS(parse_config(base + "rho_list=10\nlaw=sideways\n"), ConfigError);
  CHECK_THROWS_AS(parse_config(base + "rho_list=10\nlaw=cone:+1,-1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config(base + "rho_list=10\njust text\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("d=2\nmodel=lines-ball\nrho_list=10\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("d=2\nmodel=brownian\nrho_list=10\nreplications=1\ntol=1e-3\nmaster_seed=1\nlaw=uniform\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config("d=2\nmodel=pipes\nrho_list=10\nreplications=1\ntol=1e-3\nmaster_seed=1\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config("d=2\nmodel=lines-ball\nrho_list=10\nreplications=0\ntol=1e-3\nmaster_seed=1\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config("d=2\nmodel=lines-ball\nrho_list=10\nreplications=1\ntol=0\nmaster_seed=1\n"),
                  ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/dir/none.cfg"), IOFailure);
}

TEST_CASE("law descriptors") {
  const DirectionalLaw cone = parse_law("cone:+1,-1", 3);
  REQUIRE(std::holds_alternative<ConeRestricted>(cone));
  CHECK(std::get<ConeRestricted>(cone).cone[1] == -1);
  CHECK(format_law(cone) == "cone:+1,-1");
  const DirectionalLaw fixed = parse_law("fixed:0,0,2", 3);
  REQUIRE(std::holds_alternative<FixedDirection>(fixed));
  CHECK(std::get<FixedDirection>(fixed).dir[2] == doctest::Approx(1.0));
  CHECK(format_law(parse_law("uniform", 2)) == "uniform");
  CHECK_THROWS_AS(parse_law("cone:+2", 2), ConfigError);
  CHECK_THROWS_AS(parse_law("fixed:0,0", 3), ConfigError);
  CHECK_THROWS_AS(parse_law("fixed:0,0,0", 3), ConfigError);
}

TEST_CASE("quantiles and normalization") {
  const std::vector<double> v{1.0, 2.0, 3.0, 4.0};
  CHECK(quantile(v, 0.5) == 2.5);
  CHECK(quantile(v, 0.0) == 1.0);
  CHECK(quantile(v, 1.0) == 4.0);
  CHECK(quantile(v, 0.25) == doctest::Approx(1.75));
  CHECK(quantile({7.0}, 0.9) == 7.0);
  CHECK(normalize_radius(0.01, 1000.0, 2) == doctest::Approx(0.01 * 1000.0 / std::log(1000.0)));
  CHECK(normalize_radius(0.01, 1000.0, 3) == doctest::Approx(0.01 * std::sqrt(1000.0 / std::log(1000.0))));
}

TEST_CASE("sweep rows, CSV and summary round trip") {
  const ExperimentConfig c = parse_config(kSmallSweep);
  const std::vector<SweepRecord> rows = run_sweep(c, 1);
  REQUIRE(rows.size() == 10);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].rho == c.rho_list[i / 5]);
    CHECK(rows[i].replication_index == i % 5);
    CHECK(rows[i].radius_lower <= rows[i].radius_upper);
    CHECK(rows[i].radius_upper - rows[i].radius_lower <= c.tol);
    CHECK(rows[i].normalized > 0.0);
    const double mid = 0.5 * (rows[i].radius_lower + rows[i].radius_upper);
    CHECK(rows[i].normalized == doctest::Approx(normalize_radius(mid, rows[i].rho, 2)).epsilon(1e-15));
  }

  const std::string csv = format_sweep_csv(rows);
  CHECK(csv.rfind("rho,replication_index,radius_lower,radius_upper,normalized,ray_or_path_count\n", 0) == 0);
  CHECK(csv.find('\r') == std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 11);
  const std::vector<SweepRecord> back = parse_sweep_csv(csv);
  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(back[i].rho == rows[i].rho);
    CHECK(back[i].radius_lower == rows[i].radius_lower);
    CHECK(back[i].radius_upper == rows[i].radius_upper);
    CHECK(back[i].normalized == rows[i].normalized);
    CHECK(back[i].ray_or_path_count == rows[i].ray_or_path_count);
  }
  CHECK(format_sweep_csv(back) == csv);

  // Medians recomputed from the CSV match the summary.
  const auto summary = summarize(back);
  REQUIRE(summary.size() == 2);
  const auto json = nlohmann::json::parse(format_summary_json(summary));
  CHECK(json.size() == 2);
  for (const SweepSummaryEntry& e : summary) {
    std::vector<double> norm;
    for (const SweepRecord& r : back)
      if (r.rho == e.rho) norm.push_back(r.normalized);
    std::sort(norm.begin(), norm.end());
    CHECK(e.count == 5);
    CHECK(e.median == norm[2]);
    CHECK(e.min == norm.front());
    CHECK(e.max == norm.back());
    CHECK(e.q10 <= e.q25);
    CHECK(e.q25 <= e.median);
    CHECK(e.median <= e.q75);
    CHECK(e.q75 <= e.q90);
  }
  bool found = false;
  for (const auto& [key, value] : json.items()) {
    if (std::stod(key) == 40.0) {
      found = true;
      CHECK(value.at("median").get<double>() == summary[1].median);
    }
  }
  CHECK(found);
}

TEST_CASE("sweep output is independent of the thread count") {
  const ExperimentConfig c = parse_config(kSmallSweep);
  const std::string one = format_sweep_csv(run_sweep(c, 1));
  CHECK(format_sweep_csv(run_sweep(c, 3)) == one);
  CHECK(format_sweep_csv(run_sweep(c, 8)) == one);
}

TEST_CASE("disk sweep dominates ball sweep row by row") {
  ExperimentConfig ball = parse_config(kSmallSweep);
  ExperimentConfig disk = ball;
  disk.model = ModelKind::kLinesDisk;
  const auto a = run_sweep(ball, 1);
  const auto b = run_sweep(disk, 1);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].ray_or_path_count == b[i].ray_or_path_count);
    CHECK(b[i].radius_upper + 2.0 * ball.tol >= a[i].radius_upper);
  }
}

TEST_CASE("brownian sweep") {
  const ExperimentConfig c = parse_config(
      "d=2\nmodel=brownian\nrho_list=20\nreplications=2\ntol=1e-4\nmaster_seed=3\nn_steps=64\n");
  const auto rows = run_sweep(c, 2);
  REQUIRE(rows.size() == 2);
  for (const SweepRecord& r : rows) {
    CHECK(r.radius_lower <= r.radius_upper);
    CHECK(std::isfinite(r.normalized));
    CHECK(r.normalized > 0.0);
  }
}

TEST_CASE("sweep files") {
  const auto dir = std::filesystem::temp_directory_path() / "cylcover_test_sweep";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const ExperimentConfig c = parse_config(kSmallSweep);
  const auto rows = run_sweep(c, 1);
  const SweepOutputs out = write_sweep(dir / "r.csv", rows);
  CHECK(read_file(out.csv) == format_sweep_csv(rows));
  CHECK(nlohmann::json::parse(read_file(out.summary)).size() == 2);
  CHECK(read_file(out.timing).rfind("rho,replication_index,wall_time_seconds\n", 0) == 0);
  std::ofstream(dir / "blocker") << "x";
  CHECK_THROWS_AS(write_sweep(dir / "blocker" / "x.csv", rows), IOFailure);
  std::filesystem::remove_all(dir);
}

TEST_CASE("theory report") {
  const TheoryReport r2 = compute_theory(2, 1e-8);
  CHECK(r2.kappa_d_minus_1 == 2.0);
  CHECK(r2.kappa_d == doctest::Approx(std::numbers::pi));
  CHECK(r2.c_star == doctest::Approx(3.56442795638273822355).epsilon(1e-8));
  CHECK(r2.c_star_limit == r2.c_star);
  const auto j = nlohmann::json::parse(to_json(r2));
  CHECK(j.at("c_star").get<double>() == r2.c_star);
  const TheoryReport r3 = compute_theory(3, 1e-6);
  CHECK(r3.c_star_limit == doctest::Approx(std::sqrt(r3.c_star)).epsilon(1e-14));
}

TEST_CASE("condition report") {
  const ConditionReport u2 = run_condition(2, UniformHemisphere{}, 200000, 1);
  REQUIRE(u2.rows.size() == 2);
  for (const ConditionRow& row : u2.rows) {
    CHECK(std::abs(row.probability.estimate - std::atan(0.5) / std::numbers::pi) <
          3.0 * row.probability.std_error + 1e-3);
  }
  CHECK_FALSE(u2.violation);
  const ConditionReport fixed = run_condition(3, FixedDirection{Direction{0.0, 0.0, 1.0}}, 1000, 1);
  REQUIRE(fixed.rows.size() == 4);
  for (const ConditionRow& row : fixed.rows) CHECK(row.probability.estimate == 1.0);
  CHECK_FALSE(fixed.violation);
  const ConditionReport cone = run_condition(2, ConeRestricted{OrthantCone{1}}, 1000, 1);
  CHECK(cone.violation);
  CHECK(cone.minimum == 0.0);
  const ConditionReport u3 = run_condition(3, UniformHemisphere{}, 200000, 2);
  for (const ConditionRow& a : u3.rows)
    for (const ConditionRow& b : u3.rows) {
      const double s = std::hypot(a.probability.std_error, b.probability.std_error);
      CHECK(std::abs(a.probability.estimate - b.probability.estimate) <= 3.0 * s + 1e-12);
    }
  CHECK(nlohmann::json::parse(to_json(u3)).contains("cones"));
}

TEST_CASE("verify checks at small scale") {
  const CheckResult cross = check_crossing_probability(2, 5, 100000, 4);
  CHECK(cross.passed);
  const CheckResult vol0 = check_uncovered_volume(2, 100.0, 0.0, 3, 1000, 1, 1e-8, 1);
  CHECK(vol0.passed);
  VerifyOptions bad;
  bad.rho = 0.0;
  CHECK_THROWS_AS(run_verify(bad, 1), ConfigError);
  bad.rho = 100.0;
  bad.c = -1.0;
  CHECK_THROWS_AS(run_verify(bad, 1), ConfigError);
  bad.c = 1.0;
  bad.reps = 0;
  CHECK_THROWS_AS(run_verify(bad, 1), ConfigError);
}
