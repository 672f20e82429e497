#ifndef CYLCOVER_EXPERIMENTS_HPP_
#define CYLCOVER_EXPERIMENTS_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cylcover/config.hpp"
#include "cylcover/coverage.hpp"
#include "cylcover/geometry.hpp"
#include "cylcover/processes.hpp"

namespace cylcover {

// ---------------------------------------------------------------------------
// Sweeps

struct SweepRecord {
  double rho = 0.0;
  std::size_t replication_index = 0;
  double radius_lower = 0.0;
  double radius_upper = 0.0;
  // Bracket midpoint times (rho / log rho)^{1/(d-1)}.
  double normalized = 0.0;
  std::size_t ray_or_path_count = 0;
  double wall_time_seconds = 0.0;
};

struct SweepSummaryEntry {
  double rho = 0.0;
  std::size_t count = 0;
  double median = 0.0;
  double q10 = 0.0;
  double q25 = 0.0;
  double q75 = 0.0;
  double q90 = 0.0;
  double min = 0.0;
  double max = 0.0;
};

double normalize_radius(double radius, double rho, std::size_t d);

// Linear-interpolation quantile (R type 7) of an ascending sequence.
double quantile(const std::vector<double>& sorted, double q);

SweepRecord run_replication(const ExperimentConfig& config, double rho,
                            std::size_t replication_index);

// All (rho, replication) pairs, returned in (rho, replication) order. The
// thread count changes only the wall time.
std::vector<SweepRecord> run_sweep(const ExperimentConfig& config, std::size_t threads);

// Deterministic results table: rho, replication_index, radius_lower,
// radius_upper, normalized, ray_or_path_count (17 significant digits, LF).
std::string format_sweep_csv(const std::vector<SweepRecord>& records);
// rho, replication_index, wall_time_seconds.
std::string format_timing_csv(const std::vector<SweepRecord>& records);
std::vector<SweepRecord> parse_sweep_csv(std::string_view text);

std::vector<SweepSummaryEntry> summarize(const std::vector<SweepRecord>& records);
// JSON object keyed by rho.
std::string format_summary_json(const std::vector<SweepSummaryEntry>& summary);

struct SweepOutputs {
  std::filesystem::path csv;
  std::filesystem::path summary;
  std::filesystem::path timing;
};
SweepOutputs sweep_output_paths(const std::filesystem::path& csv_path);
// Writes the results CSV, the JSON summary and the timing sidecar.
SweepOutputs write_sweep(const std::filesystem::path& csv_path,
                         const std::vector<SweepRecord>& records);

// ---------------------------------------------------------------------------
// Constants

struct TheoryReport {
  std::size_t d = 2;
  double kappa_d_minus_1 = 0.0;
  double kappa_d = 0.0;
  double inf_phi = 0.0;
  PointD argmin;
  double corner_value = 0.0;
  bool corner_confirmed = false;
  double c_star = 0.0;
  double c_star_limit = 0.0;
};

TheoryReport compute_theory(std::size_t d, double tol);
std::string to_json(const TheoryReport& report);

// ---------------------------------------------------------------------------
// Formula cross-checks

struct VerifyOptions {
  std::size_t d = 2;
  double rho = 1e4;
  double c = 1.0;
  std::size_t reps = 200;
  std::uint64_t seed = 0;
  std::size_t crossing_cases = 20;
  std::size_t crossing_directions = 1'000'000;
  // The dispersion test needs at least this many replications to resolve a
  // +-10% band on variance/mean.
  std::size_t min_count_reps = 1000;
  std::size_t volume_points = 20'000;
  double quadrature_tol = 1e-9;
};

inline constexpr double kCoverCountMeanTolerance = 0.05;
inline constexpr double kCoverCountDispersionTolerance = 0.10;
inline constexpr double kUncoveredVolumeTolerance = 0.10;
inline constexpr double kSigmaBand = 3.0;

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  std::vector<std::pair<std::string, double>> stats;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool passed() const;
};

// Crossing probability: MC hit frequency of uniformly directed rays through
// random base points against the bracket (and the exact value in d = 2).
CheckResult check_crossing_probability(std::size_t d, std::size_t cases,
                                       std::size_t directions, std::uint64_t seed);
// Cover count at the cube centre: mean against the leading-order formula and
// variance/mean against 1.
CheckResult check_cover_count(std::size_t d, double rho, double r, std::size_t reps,
                              std::uint64_t seed, double quadrature_tol, std::size_t threads);
// Mean MC uncovered volume of [0,1]^{d-1} x [1/2, 1] against quadrature.
CheckResult check_uncovered_volume(std::size_t d, double rho, double c, std::size_t reps,
                                   std::size_t points, std::uint64_t seed,
                                   double quadrature_tol, std::size_t threads);

VerifyReport run_verify(const VerifyOptions& options, std::size_t threads);
std::string to_json(const VerifyReport& report);

// ---------------------------------------------------------------------------
// Directional condition

struct ConditionRow {
  OrthantCone cone;
  ProbabilityEstimate probability;
};

struct ConditionReport {
  std::size_t d = 2;
  std::string law;
  std::vector<ConditionRow> rows;
  double minimum = 0.0;
  // Some cone estimate is not bounded away from zero (estimate - 3 sigma <= 0).
  bool violation = false;
};

ConditionReport run_condition(std::size_t d, const DirectionalLaw& law, std::size_t n_samples,
                              std::uint64_t seed);
std::string to_json(const ConditionReport& report);

// Runs fn(i) for i in [0, n) on up to `threads` workers.
template <class Fn>
void parallel_for(std::size_t n, std::size_t threads, Fn&& fn);

}  // namespace cylcover

#include "cylcover/detail/parallel.hpp"

#endif  // CYLCOVER_EXPERIMENTS_HPP_
