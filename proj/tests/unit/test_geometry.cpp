#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "cylcover/errors.hpp"
#include "cylcover/geometry.hpp"

using namespace cylcover;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

LineRay ray2(double base, double s0, double s1) { return LineRay{BasePoint{base}, Direction{s0, s1}}; }

// Brute-force distance to a ray by dense sampling of alpha; an upper bound
// that converges to the true distance.
double sampled_ray_distance(const PointD& x, const LineRay& ray) {
  double best = 1e300;
  const std::size_t d = ray.dim();
  for (int k = 0; k <= 200000; ++k) {
    const double alpha = 4.0 * k / 200000.0;
    double s = 0.0;
    for (std::size_t a = 0; a < d; ++a) {
      const double p = (a + 1 < d ? ray.base[a] : 0.0) + alpha * ray.dir[a];
      s += (x[a] - p) * (x[a] - p);
    }
    best = std::min(best, std::sqrt(s));
  }
  return best;
}

}  // namespace

TEST_CASE("point_ray_distance examples") {
  CHECK(point_ray_distance(PointD{0.0, 0.0}, ray2(0.5, 0.0, 1.0)) == doctest::Approx(0.5));
  CHECK(point_ray_distance(PointD{0.5, 0.7}, ray2(0.5, 0.0, 1.0)) == doctest::Approx(0.0));
  CHECK(point_ray_distance(PointD{0.0, 1.0}, ray2(0.0, kInvSqrt2, kInvSqrt2)) ==
        doctest::Approx(kInvSqrt2).epsilon(1e-14));
}

TEST_CASE("point_ray_distance agrees with sampled minimization") {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::normal_distribution<double> n(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double theta = std::acos(0.0) * u(gen);
    const LineRay ray{BasePoint{u(gen), u(gen)},
                      Direction{n(gen), n(gen), std::abs(n(gen)) + 0.1 + 0.0 * theta}};
    const PointD x{u(gen), u(gen), u(gen)};
    const double exact = point_ray_distance(x, ray);
    const double sampled = sampled_ray_distance(x, ray);
    CHECK(exact <= sampled + 1e-12);
    CHECK(sampled - exact < 1e-4);
  }
}

TEST_CASE("point_ray_distance is 1-Lipschitz and dominates the line distance") {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(-0.5, 1.5);
  std::normal_distribution<double> n(0.0, 1.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t d = 2 + trial % 3;
    std::vector<double> base(d - 1);
    std::vector<double> dir(d);
    std::vector<double> x(d);
    std::vector<double> y(d);
    for (auto& b : base) b = std::uniform_real_distribution<double>(0.0, 1.0)(gen);
    for (auto& s : dir) s = n(gen);
    dir[d - 1] = std::abs(dir[d - 1]);
    for (std::size_t a = 0; a < d; ++a) {
      x[a] = u(gen);
      y[a] = u(gen);
    }
    const LineRay ray{BasePoint(base), Direction(dir)};
    const PointD px(x);
    const PointD py(y);
    double dxy = 0.0;
    for (std::size_t a = 0; a < d; ++a) dxy += (x[a] - y[a]) * (x[a] - y[a]);
    dxy = std::sqrt(dxy);
    const double fx = point_ray_distance(px, ray);
    const double fy = point_ray_distance(py, ray);
    CHECK(std::abs(fx - fy) <= dxy + 1e-12);

    const double line = point_line_distance(px, ray);
    CHECK(fx >= line - 1e-12);
    double alpha = x[d - 1] * ray.dir[d - 1];
    for (std::size_t a = 0; a + 1 < d; ++a) alpha += (x[a] - base[a]) * ray.dir[a];
    if (alpha >= 0.0) CHECK(fx == doctest::Approx(line).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("ray_hits_ball examples") {
  CHECK(ray_hits_ball(ray2(0.5, 0.0, 1.0), PointD{0.6, 0.5}, 0.1));
  CHECK_FALSE(ray_hits_ball(ray2(0.5, 0.0, 1.0), PointD{0.7, 0.5}, 0.1));
  CHECK_FALSE(ray_hits_ball(ray2(0.0, kInvSqrt2, kInvSqrt2), PointD{0.0, 1.0}, 0.7));
  CHECK_THROWS(ray_hits_ball(ray2(0.5, 0.0, 1.0), PointD{0.6, 0.5}, -0.1));
}

TEST_CASE("horizontal_position examples") {
  for (double t : {0.0, 0.3, 1.0}) {
    const auto p = horizontal_position(ray2(0.3, 0.0, 1.0), t);
    REQUIRE(p.size() == 1);
    CHECK(p[0] == doctest::Approx(0.3));
  }
  CHECK(horizontal_position(ray2(0.0, kInvSqrt2, kInvSqrt2), 0.5)[0] == doctest::Approx(0.5));
  const LineRay r3{BasePoint{0.0, 0.0}, Direction{0.6, 0.0, 0.8}};
  const auto p3 = horizontal_position(r3, 0.4);
  CHECK(p3[0] == doctest::Approx(0.3));
  CHECK(p3[1] == doctest::Approx(0.0));
  CHECK_THROWS_AS(horizontal_position(ray2(0.5, 1.0, 0.0), 0.5), ZeroVerticalComponent);
}

TEST_CASE("horizontal_position at height zero is the base") {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::normal_distribution<double> n(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const LineRay ray{BasePoint{u(gen), u(gen)}, Direction{n(gen), n(gen), std::abs(n(gen)) + 1e-3}};
    const auto p = horizontal_position(ray, 0.0);
    CHECK(p[0] == ray.base[0]);
    CHECK(p[1] == ray.base[1]);
  }
}

TEST_CASE("in_cone examples") {
  CHECK(in_cone(Direction{0.0, 1.0}, OrthantCone{+1}));
  CHECK_FALSE(in_cone(Direction{0.6, 0.8}, OrthantCone{+1}));
  CHECK_FALSE(in_cone(Direction{-0.3, std::sqrt(0.91)}, OrthantCone{+1}));
  CHECK(kConeMinVertical == doctest::Approx(2.0 / std::sqrt(5.0)).epsilon(1e-16));
}

TEST_CASE("a steep direction off the coordinate planes lies in exactly one cone") {
  std::mt19937_64 gen(9);
  std::normal_distribution<double> n(0.0, 1.0);
  for (std::size_t d = 2; d <= 4; ++d) {
    const auto cones = OrthantCone::all(d);
    CHECK(cones.size() == (std::size_t{1} << (d - 1)));
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<double> s(d);
      for (std::size_t a = 0; a + 1 < d; ++a) s[a] = 0.2 * n(gen);
      s[d - 1] = 1.0;
      const Direction dir(s);
      if (dir.vertical() < kConeMinVertical) continue;
      int hits = 0;
      for (const auto& cone : cones) hits += in_cone(dir, cone) ? 1 : 0;
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("domain type validation") {
  const Direction d{3.0, 4.0};
  CHECK(d[0] == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(d[1] == doctest::Approx(0.8).epsilon(1e-15));
  double norm = std::hypot(d[0], d[1]);
  CHECK(std::abs(norm - 1.0) <= 1e-12);
  CHECK_THROWS(Direction{0.0, 0.0});
  CHECK_THROWS(Direction{0.0, -1.0});
  CHECK_THROWS(BasePoint{1.5});
  CHECK_THROWS(BasePoint{-0.1});
  CHECK_THROWS(OrthantCone{0});
  CHECK_THROWS(OrthantCone{2, 1});
  CHECK(OrthantCone::all(2)[0][0] == -1);
}
