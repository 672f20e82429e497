#include "cylcover/experiments.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "cylcover/errors.hpp"
#include "cylcover/theory.hpp"

namespace cylcover {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string fmt17(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_field(std::string_view s) {
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  return std::stod(std::string(s));
}

ordered_json number_or_null(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// Sweeps

double normalize_radius(double radius, double rho, std::size_t d) {
  return radius * std::pow(rho / std::log(rho), 1.0 / static_cast<double>(d - 1));
}

double quantile(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return std::numeric_limits<double>::quiet_NaN();
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  if (frac == 0.0 || sorted[lo] == sorted[hi]) return sorted[lo];
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

SweepRecord run_replication(const ExperimentConfig& config, double rho,
                            std::size_t replication_index) {
  const auto start = std::chrono::steady_clock::now();
  const SeedSpec seed{config.master_seed, replication_index};
  CertifiedRadius radius;
  std::size_t count = 0;
  switch (config.model) {
    case ModelKind::kLinesBall:
    case ModelKind::kLinesDisk: {
      const LineModelSample sample =
          sample_line_model(config.d, rho, config.directional_law(), seed);
      count = sample.rays.size();
      const DilationKind kind = config.model == ModelKind::kLinesBall ? DilationKind::kFullBall
                                                                      : DilationKind::kBaseDisk;
      radius = coverage_radius(sample, kind, config.tol);
      break;
    }
    case ModelKind::kBrownian: {
      const BrownianModelSample sample =
          sample_brownian_model(config.d, rho, config.brownian_steps(), seed);
      count = sample.paths.size();
      radius = coverage_radius(sample, DilationKind::kBaseDisk, config.tol);
      break;
    }
  }
  SweepRecord rec;
  rec.rho = rho;
  rec.replication_index = replication_index;
  rec.radius_lower = radius.lower;
  rec.radius_upper = radius.upper;
  rec.normalized = normalize_radius(radius.midpoint(), rho, config.d);
  rec.ray_or_path_count = count;
  rec.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

std::vector<SweepRecord> run_sweep(const ExperimentConfig& config, std::size_t threads) {
  validate(config);
  const std::size_t reps = config.replications;
  std::vector<SweepRecord> records(config.rho_list.size() * reps);
  parallel_for(records.size(), threads, [&](std::size_t job) {
    records[job] = run_replication(config, config.rho_list[job / reps], job % reps);
  });
  return records;
}

std::string format_sweep_csv(const std::vector<SweepRecord>& records) {
  std::string out = "rho,replication_index,radius_lower,radius_upper,normalized,ray_or_path_count\n";
  for (const SweepRecord& r : records) {
    out += fmt17(r.rho) + ',' + std::to_string(r.replication_index) + ',' +
           fmt17(r.radius_lower) + ',' + fmt17(r.radius_upper) + ',' + fmt17(r.normalized) +
           ',' + std::to_string(r.ray_or_path_count) + '\n';
  }
  return out;
}

std::string format_timing_csv(const std::vector<SweepRecord>& records) {
  std::string out = "rho,replication_index,wall_time_seconds\n";
  for (const SweepRecord& r : records) {
    out += fmt17(r.rho) + ',' + std::to_string(r.replication_index) + ',' +
           fmt17(r.wall_time_seconds) + '\n';
  }
  return out;
}

std::vector<SweepRecord> parse_sweep_csv(std::string_view text) {
  std::vector<SweepRecord> out;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) return out;  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    if (f.size() != 6) throw IOFailure("malformed sweep CSV row: " + line);
    SweepRecord r;
    r.rho = parse_field(f[0]);
    r.replication_index = std::stoull(f[1]);
    r.radius_lower = parse_field(f[2]);
    r.radius_upper = parse_field(f[3]);
    r.normalized = parse_field(f[4]);
    r.ray_or_path_count = std::stoull(f[5]);
    out.push_back(r);
  }
  return out;
}

std::vector<SweepSummaryEntry> summarize(const std::vector<SweepRecord>& records) {
  std::vector<double> rhos;
  for (const SweepRecord& r : records) {
    if (std::find(rhos.begin(), rhos.end(), r.rho) == rhos.end()) rhos.push_back(r.rho);
  }
  std::sort(rhos.begin(), rhos.end());
  std::vector<SweepSummaryEntry> out;
  for (double rho : rhos) {
    std::vector<double> v;
    for (const SweepRecord& r : records) {
      if (r.rho == rho) v.push_back(r.normalized);
    }
    std::sort(v.begin(), v.end());
    SweepSummaryEntry e;
    e.rho = rho;
    e.count = v.size();
    e.median = quantile(v, 0.5);
    e.q10 = quantile(v, 0.10);
    e.q25 = quantile(v, 0.25);
    e.q75 = quantile(v, 0.75);
    e.q90 = quantile(v, 0.90);
    e.min = v.front();
    e.max = v.back();
    out.push_back(e);
  }
  return out;
}

std::string format_summary_json(const std::vector<SweepSummaryEntry>& summary) {
  ordered_json j = ordered_json::object();
  for (const SweepSummaryEntry& e : summary) {
    j[fmt17(e.rho)] = {{"count", e.count},
                       {"median", number_or_null(e.median)},
                       {"q10", number_or_null(e.q10)},
                       {"q25", number_or_null(e.q25)},
                       {"q75", number_or_null(e.q75)},
                       {"q90", number_or_null(e.q90)},
                       {"min", number_or_null(e.min)},
                       {"max", number_or_null(e.max)}};
  }
  return j.dump(2) + "\n";
}

SweepOutputs sweep_output_paths(const std::filesystem::path& csv_path) {
  SweepOutputs p;
  p.csv = csv_path;
  p.summary = csv_path;
  p.summary.replace_extension(".summary.json");
  p.timing = csv_path;
  p.timing.replace_extension(".timing.csv");
  return p;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IOFailure("cannot open " + path.string() + " for writing");
  out << content;
  if (!out) throw IOFailure("failed writing " + path.string());
}

}  // namespace

SweepOutputs write_sweep(const std::filesystem::path& csv_path,
                         const std::vector<SweepRecord>& records) {
  const SweepOutputs p = sweep_output_paths(csv_path);
  write_file(p.csv, format_sweep_csv(records));
  write_file(p.summary, format_summary_json(summarize(records)));
  write_file(p.timing, format_timing_csv(records));
  return p;
}

// ---------------------------------------------------------------------------
// Constants

TheoryReport compute_theory(std::size_t d, double tol) {
  if (d < 2) throw ConfigError("d must be >= 2");
  if (!(tol > 0.0)) throw ConfigError("tol must be positive");
  const InfPhiResult inf = inf_phi(d, tol);
  TheoryReport r;
  r.d = d;
  r.kappa_d_minus_1 = unit_ball_volume(static_cast<int>(d) - 1);
  r.kappa_d = unit_ball_volume(static_cast<int>(d));
  r.inf_phi = inf.value;
  r.argmin = inf.argmin;
  r.corner_value = inf.corner_value;
  r.corner_confirmed = inf.corner_confirmed;
  r.c_star = c_star_prefactor(d) / inf.value;
  r.c_star_limit = std::pow(r.c_star, 1.0 / static_cast<double>(d - 1));
  return r;
}

std::string to_json(const TheoryReport& r) {
  ordered_json j;
  j["d"] = r.d;
  j["kappa_d_minus_1"] = r.kappa_d_minus_1;
  j["kappa_d"] = r.kappa_d;
  j["inf_phi"] = r.inf_phi;
  j["argmin"] = std::vector<double>(r.argmin.coords().begin(), r.argmin.coords().end());
  j["corner_value"] = r.corner_value;
  j["corner_confirmed"] = r.corner_confirmed;
  j["c_star"] = r.c_star;
  j["c_star_limit"] = r.c_star_limit;
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Formula cross-checks

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

CheckResult check_crossing_probability(std::size_t d, std::size_t cases,
                                       std::size_t directions, std::uint64_t seed) {
  CheckResult res;
  res.name = "crossing_probability";
  StreamRng geo(SeedSpec{seed, 0}, Substream::kMonteCarlo);
  double worst_bracket_z = 0.0;
  double worst_exact_z = 0.0;
  std::size_t failures = 0;
  const double n = static_cast<double>(directions);
  for (std::size_t c = 0; c < cases; ++c) {
    std::vector<double> y(d - 1);
    std::vector<double> x(d);
    for (double& v : y) v = geo.uniform();
    for (std::size_t a = 0; a + 1 < d; ++a) x[a] = geo.uniform();
    x[d - 1] = 0.05 + 0.95 * geo.uniform();
    double dist2 = x[d - 1] * x[d - 1];
    for (std::size_t a = 0; a + 1 < d; ++a) dist2 += (x[a] - y[a]) * (x[a] - y[a]);
    const double dist = std::sqrt(dist2);
    const double r = (0.05 + 0.95 * geo.uniform()) * std::min(0.5 * dist, 0.95 * x[d - 1]);

    StreamRng dir_rng(SeedSpec{seed, c + 1}, Substream::kDirections);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < directions; ++i) {
      const Direction s = sample_direction(d, UniformHemisphere{}, dir_rng);
      if (point_ray_distance(x, y, s.coords()) <= r) ++hits;
    }
    const double p_hat = static_cast<double>(hits) / n;
    const CrossingProbability cp = crossing_probability(dist, r, d);
    const double p_ref = cp.exact_2d.value_or(0.5 * (cp.lower + cp.upper));
    const double sigma = std::sqrt(p_ref * (1.0 - p_ref) / n);
    const double below = (cp.lower - p_hat) / sigma;
    const double above = (p_hat - cp.upper) / sigma;
    const double z = std::max({below, above, 0.0});
    worst_bracket_z = std::max(worst_bracket_z, z);
    bool ok = z <= kSigmaBand;
    if (cp.exact_2d) {
      const double ze = std::abs(p_hat - *cp.exact_2d) / sigma;
      worst_exact_z = std::max(worst_exact_z, ze);
      ok = ok && ze <= kSigmaBand;
    }
    if (!ok) ++failures;
  }
  res.passed = failures == 0;
  res.stats = {{"cases", static_cast<double>(cases)},
               {"directions", n},
               {"failures", static_cast<double>(failures)},
               {"worst_bracket_sigma", worst_bracket_z}};
  if (d == 2) res.stats.emplace_back("worst_exact_sigma", worst_exact_z);
  res.detail = std::to_string(cases - failures) + "/" + std::to_string(cases) +
               " cases within the bracket +- 3 sigma";
  return res;
}

CheckResult check_cover_count(std::size_t d, double rho, double r, std::size_t reps,
                              std::uint64_t seed, double quadrature_tol, std::size_t threads) {
  CheckResult res;
  res.name = "cover_count";
  const PointD x(std::vector<double>(d, 0.5));
  std::vector<double> counts(reps);
  parallel_for(reps, threads, [&](std::size_t i) {
    const LineModelSample s = sample_line_model(d, rho, UniformHemisphere{}, SeedSpec{seed, i});
    counts[i] = static_cast<double>(cover_count(s, {DilationKind::kFullBall, r}, x));
  });
  const double n = static_cast<double>(reps);
  const double mean = std::accumulate(counts.begin(), counts.end(), 0.0) / n;
  double ss = 0.0;
  for (double c : counts) ss += (c - mean) * (c - mean);
  const double var = reps > 1 ? ss / (n - 1.0) : 0.0;
  const double expected = expected_cover_count(x, rho, r, quadrature_tol);
  if (expected == 0.0) {
    res.passed = mean == 0.0;
    res.stats = {{"reps", n}, {"mean", mean}, {"expected", expected}};
    res.detail = "zero radius: every count must vanish";
    return res;
  }
  const double rel = mean / expected - 1.0;
  const double dispersion = mean > 0.0 ? var / mean : 0.0;
  res.passed = std::abs(rel) <= kCoverCountMeanTolerance &&
               std::abs(dispersion - 1.0) <= kCoverCountDispersionTolerance;
  res.stats = {{"reps", n},         {"mean", mean},
               {"expected", expected}, {"relative_error", rel},
               {"variance", var},   {"variance_over_mean", dispersion}};
  res.detail = "mean within 5% of the formula, variance/mean within [0.9, 1.1]";
  return res;
}

CheckResult check_uncovered_volume(std::size_t d, double rho, double c, std::size_t reps,
                                   std::size_t points, std::uint64_t seed,
                                   double quadrature_tol, std::size_t threads) {
  CheckResult res;
  res.name = "uncovered_volume";
  Box region = Box::unit(d);
  region.lo[d - 1] = 0.5;
  const double r = radius_at_intensity(c, rho, d);
  std::vector<double> est(reps);
  parallel_for(reps, threads, [&](std::size_t i) {
    const LineModelSample s = sample_line_model(d, rho, UniformHemisphere{}, SeedSpec{seed, i});
    est[i] = uncovered_volume_estimate(s, {DilationKind::kFullBall, r}, region, points,
                                       SeedSpec{seed, i})
                 .estimate;
  });
  const double n = static_cast<double>(reps);
  const double mean = std::accumulate(est.begin(), est.end(), 0.0) / n;
  double ss = 0.0;
  for (double e : est) ss += (e - mean) * (e - mean);
  const double se = reps > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0;
  const double expected = expected_uncovered_volume(region, c, rho, d, quadrature_tol);
  double rel = 0.0;
  if (c == 0.0) {
    res.passed = mean == expected;
    rel = mean / expected - 1.0;
    res.detail = "c = 0: MC mean must equal vol(D) exactly";
  } else {
    rel = mean / expected - 1.0;
    res.passed = std::abs(rel) <= kUncoveredVolumeTolerance;
    res.detail = "MC mean within 10% of the quadrature";
  }
  res.stats = {{"reps", n},         {"points_per_rep", static_cast<double>(points)},
               {"radius", r},       {"mean", mean},
               {"std_error", se},   {"expected", expected},
               {"relative_error", rel}};
  return res;
}

VerifyReport run_verify(const VerifyOptions& o, std::size_t threads) {
  if (o.d < 2) throw ConfigError("d must be >= 2");
  if (!(o.rho > 1.0) || !std::isfinite(o.rho)) throw ConfigError("rho must be finite and > 1");
  if (o.c < 0.0 || !std::isfinite(o.c)) throw ConfigError("c must be nonnegative");
  if (o.reps < 1) throw ConfigError("reps must be >= 1");
  VerifyReport report;
  report.checks.push_back(
      check_crossing_probability(o.d, o.crossing_cases, o.crossing_directions, o.seed));
  const double r = radius_at_intensity(o.c, o.rho, o.d);
  report.checks.push_back(check_cover_count(o.d, o.rho, r, std::max(o.reps, o.min_count_reps),
                                            o.seed, o.quadrature_tol, threads));
  report.checks.push_back(check_uncovered_volume(o.d, o.rho, o.c, o.reps, o.volume_points,
                                                 o.seed, o.quadrature_tol, threads));
  return report;
}

std::string to_json(const VerifyReport& report) {
  ordered_json j;
  j["passed"] = report.passed();
  j["checks"] = ordered_json::array();
  for (const CheckResult& c : report.checks) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    cj["detail"] = c.detail;
    ordered_json stats = ordered_json::object();
    for (const auto& [k, v] : c.stats) stats[k] = number_or_null(v);
    cj["stats"] = stats;
    j["checks"].push_back(cj);
  }
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Directional condition

ConditionReport run_condition(std::size_t d, const DirectionalLaw& law, std::size_t n_samples,
                              std::uint64_t seed) {
  if (d < 2) throw ConfigError("d must be >= 2");
  if (n_samples < 1) throw ConfigError("n_samples must be >= 1");
  ConditionReport report;
  report.d = d;
  report.law = format_law(law);
  report.minimum = std::numeric_limits<double>::infinity();
  const std::vector<OrthantCone> cones = OrthantCone::all(d);
  for (std::size_t i = 0; i < cones.size(); ++i) {
    ConditionRow row{cones[i], condition_probability(d, law, cones[i], n_samples, SeedSpec{seed, i})};
    report.minimum = std::min(report.minimum, row.probability.estimate);
    if (row.probability.estimate - kSigmaBand * row.probability.std_error <= 0.0) {
      report.violation = true;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string to_json(const ConditionReport& report) {
  ordered_json j;
  j["d"] = report.d;
  j["law"] = report.law;
  j["cones"] = ordered_json::array();
  for (const ConditionRow& row : report.rows) {
    j["cones"].push_back({{"z", std::vector<int>(row.cone.signs().begin(), row.cone.signs().end())},
                          {"estimate", row.probability.estimate},
                          {"std_error", row.probability.std_error}});
  }
  j["minimum"] = report.minimum;
  j["violation"] = report.violation;
  return j.dump(2) + "\n";
}

}  // namespace cylcover
