#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "cylcover/errors.hpp"
#include "cylcover/geometry.hpp"
#include "cylcover/processes.hpp"

using namespace cylcover;

namespace {

// P(sup_{[0,1]} |W| <= a) by the alternating image series.
double two_sided_stay_probability(double a) {
  double sum = 0.0;
  for (int k = 0; k < 50; ++k) {
    const double m = 2.0 * k + 1.0;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    sum += sign / m * std::exp(-m * m * std::numbers::pi * std::numbers::pi / (8.0 * a * a));
  }
  return 4.0 / std::numbers::pi * sum;
}

}  // namespace

TEST_CASE("base point counts are Poisson") {
  const double rho = 200.0;
  const int reps = 2000;
  double sum = 0.0;
  double sum2 = 0.0;
  for (int i = 0; i < reps; ++i) {
    const double n = static_cast<double>(sample_base_points(2, rho, SeedSpec{3, static_cast<std::uint64_t>(i)}).size());
    sum += n;
    sum2 += n * n;
  }
  const double mean = sum / reps;
  const double var = sum2 / reps - mean * mean;
  // sd of the mean is sqrt(rho / reps) ~ 0.32
  CHECK(std::abs(mean - rho) < 1.5);
  CHECK(var / rho > 0.85);
  CHECK(var / rho < 1.15);
}

TEST_CASE("base points lie in the unit base") {
  for (const BasePoint& b : sample_base_points(3, 500.0, SeedSpec{1, 0})) {
    REQUIRE(b.dim() == 2);
    for (double c : b.coords()) {
      CHECK(c >= 0.0);
      CHECK(c < 1.0);
    }
  }
}

TEST_CASE("samples are deterministic in the seed") {
  const LineModelSample a = sample_line_model(3, 100.0, UniformHemisphere{}, SeedSpec{5, 2});
  const LineModelSample b = sample_line_model(3, 100.0, UniformHemisphere{}, SeedSpec{5, 2});
  const LineModelSample c = sample_line_model(3, 100.0, UniformHemisphere{}, SeedSpec{5, 3});
  REQUIRE(a.rays.size() == b.rays.size());
  for (std::size_t i = 0; i < a.rays.size(); ++i) {
    for (std::size_t k = 0; k < 3; ++k) CHECK(a.rays[i].dir[k] == b.rays[i].dir[k]);
    for (std::size_t k = 0; k < 2; ++k) CHECK(a.rays[i].base[k] == b.rays[i].base[k]);
  }
  bool differs = a.rays.size() != c.rays.size();
  if (!differs) differs = a.rays[0].dir[0] != c.rays[0].dir[0];
  CHECK(differs);
}

TEST_CASE("base points do not depend on the directional law") {
  const LineModelSample a = sample_line_model(2, 50.0, UniformHemisphere{}, SeedSpec{9, 1});
  const LineModelSample b =
      sample_line_model(2, 50.0, FixedDirection{Direction{0.0, 1.0}}, SeedSpec{9, 1});
  REQUIRE(a.rays.size() == b.rays.size());
  for (std::size_t i = 0; i < a.rays.size(); ++i) CHECK(a.rays[i].base[0] == b.rays[i].base[0]);
}

TEST_CASE("uniform directions are unit, upward and isotropic") {
  StreamRng rng(SeedSpec{2, 0}, Substream::kDirections);
  const int n = 200000;
  double mean_vertical = 0.0;
  double mean_first = 0.0;
  for (int i = 0; i < n; ++i) {
    const Direction s = sample_direction(3, UniformHemisphere{}, rng);
    double norm2 = 0.0;
    for (double c : s.coords()) norm2 += c * c;
    REQUIRE(std::abs(norm2 - 1.0) < 1e-12);
    REQUIRE(s.vertical() >= 0.0);
    mean_vertical += s.vertical();
    mean_first += s[0];
  }
  mean_vertical /= n;
  mean_first /= n;
  // On the upper half of S^2 the height is uniform on [0, 1].
  CHECK(std::abs(mean_vertical - 0.5) < 0.005);
  CHECK(std::abs(mean_first) < 0.005);
}

TEST_CASE("cone probabilities under the uniform law") {
  // d = 2: the angle from vertical is uniform on [-pi/2, pi/2] and the cone
  // spans atan(1/2) on one side.
  const double p2 = std::atan(0.5) / std::numbers::pi;
  for (const OrthantCone& cone : OrthantCone::all(2)) {
    const ProbabilityEstimate e = condition_probability(2, UniformHemisphere{}, cone, 400000, SeedSpec{4, 0});
    CHECK(std::abs(e.estimate - p2) < 4.0 * e.std_error);
  }
  // d = 3: the height is uniform, so the cap above 2/sqrt(5) has mass
  // 1 - 2/sqrt(5), shared by four quadrants.
  const double p3 = (1.0 - 2.0 / std::sqrt(5.0)) / 4.0;
  for (const OrthantCone& cone : OrthantCone::all(3)) {
    const ProbabilityEstimate e = condition_probability(3, UniformHemisphere{}, cone, 400000, SeedSpec{4, 1});
    CHECK(std::abs(e.estimate - p3) < 4.0 * e.std_error);
  }
}

TEST_CASE("cone-restricted law stays in its cone") {
  const OrthantCone cone{+1, -1};
  StreamRng rng(SeedSpec{1, 1}, Substream::kDirections);
  for (int i = 0; i < 10000; ++i) {
    REQUIRE(in_cone(sample_direction(3, ConeRestricted{cone}, rng), cone));
  }
  const ProbabilityEstimate other =
      condition_probability(3, ConeRestricted{cone}, OrthantCone{-1, -1}, 10000, SeedSpec{1, 2});
  CHECK(other.estimate == 0.0);
}

TEST_CASE("fixed direction is returned as is") {
  const Direction s{0.6, 0.8};
  const LineModelSample m = sample_line_model(2, 30.0, FixedDirection{s}, SeedSpec{0, 0});
  for (const LineRay& r : m.rays) {
    CHECK(r.dir[0] == doctest::Approx(0.6));
    CHECK(r.dir[1] == doctest::Approx(0.8));
  }
}

TEST_CASE("brownian increments have variance 1/n") {
  const std::size_t steps = 64;
  const BrownianModelSample m = sample_brownian_model(3, 300.0, steps, SeedSpec{8, 0});
  double sum2 = 0.0;
  std::size_t count = 0;
  for (const BrownianPath& p : m.paths) {
    REQUIRE(p.n_steps() == steps);
    REQUIRE(p.horizontal_dim() == 2);
    for (double v : p.increments) {
      sum2 += v * v;
      ++count;
    }
  }
  const double var = sum2 / static_cast<double>(count);
  // count ~ 38400, relative sd of the variance ~ sqrt(2/count) ~ 0.7%
  CHECK(var * steps == doctest::Approx(1.0).epsilon(0.04));
}

TEST_CASE("brownian path interpolation") {
  const BrownianPath p{BasePoint{0.5}, {0.1, -0.3, 0.2, 0.4}};
  CHECK(p.position(0.0)[0] == doctest::Approx(0.5));
  CHECK(p.position(0.25)[0] == doctest::Approx(0.6));
  CHECK(p.position(0.375)[0] == doctest::Approx(0.45));
  CHECK(p.position(1.0)[0] == doctest::Approx(0.9));
  const std::vector<double> k = p.knots();
  REQUIRE(k.size() == 5);
  CHECK(k[2] == doctest::Approx(0.3));
  CHECK(k[4] == doctest::Approx(0.9));
}

TEST_CASE("brownian grid supremum against the image series") {
  const double oracle = two_sided_stay_probability(0.5);
  CHECK(oracle == doctest::Approx(0.00915699028976075575).epsilon(1e-12));
  const BrownianModelSample m = sample_brownian_model(2, 20000.0, 1024, SeedSpec{12, 0});
  std::size_t inside = 0;
  for (const BrownianPath& p : m.paths) {
    double w = 0.0;
    bool ok = true;
    for (double v : p.increments) {
      w += v;
      if (std::abs(w) > 0.5) {
        ok = false;
        break;
      }
    }
    inside += ok ? 1 : 0;
  }
  const double freq = static_cast<double>(inside) / static_cast<double>(m.paths.size());
  // The grid maximum misses excursions between knots, so the frequency is
  // biased upwards; the bias is well under 0.02 at 1024 steps.
  CHECK(freq >= oracle - 0.003);
  CHECK(std::abs(freq - oracle) < 0.02);
}

TEST_CASE("process argument validation") {
  CHECK_THROWS_AS(sample_base_points(2, 0.0, SeedSpec{}), InvalidIntensity);
  CHECK_THROWS_AS(sample_base_points(2, -1.0, SeedSpec{}), InvalidIntensity);
  CHECK_THROWS_AS(sample_base_points(2, NAN, SeedSpec{}), InvalidIntensity);
  CHECK_THROWS_AS(sample_brownian_model(2, 10.0, 0, SeedSpec{}), InvalidSteps);
  CHECK_THROWS_AS(sample_line_model(1, 10.0, UniformHemisphere{}, SeedSpec{}), std::invalid_argument);
  CHECK_THROWS(condition_probability(3, UniformHemisphere{}, OrthantCone{1}, 10, SeedSpec{}));
  CHECK_THROWS(condition_probability(2, UniformHemisphere{}, OrthantCone{1}, 0, SeedSpec{}));
}
