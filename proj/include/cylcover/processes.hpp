#ifndef CYLCOVER_PROCESSES_HPP_
#define CYLCOVER_PROCESSES_HPP_

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "cylcover/geometry.hpp"
#include "cylcover/rng.hpp"

namespace cylcover {

// Directional laws for the line model.
struct UniformHemisphere {};
// Uniform law conditioned on the closure of one orthant cone.
struct ConeRestricted {
  OrthantCone cone;
};
struct FixedDirection {
  Direction dir;
};
using DirectionalLaw = std::variant<UniformHemisphere, ConeRestricted, FixedDirection>;

// One realization of the line model: a Poisson(rho) number of rays with
// bases uniform on [0,1]^{d-1}.
struct LineModelSample {
  std::size_t d = 2;
  double rho = 0.0;
  std::vector<LineRay> rays;
};

// A Brownian trajectory started at base, discretized on n_steps equal time
// steps over [0,1]. Between grid times the path is linearly interpolated.
struct BrownianPath {
  BasePoint base;
  // n_steps x (d-1) increments, row-major.
  std::vector<double> increments;

  std::size_t horizontal_dim() const { return base.dim(); }
  std::size_t n_steps() const { return increments.size() / base.dim(); }
  // Horizontal position at time t in [0,1].
  std::vector<double> position(double t) const;
  // All n_steps + 1 knot positions, row-major.
  std::vector<double> knots() const;
};

struct BrownianModelSample {
  std::size_t d = 2;
  double rho = 0.0;
  std::size_t n_steps = 0;
  std::vector<BrownianPath> paths;
};

inline constexpr std::size_t kDefaultBrownianSteps = 1024;

struct ProbabilityEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
};

std::vector<BasePoint> sample_base_points(std::size_t d, double rho, const SeedSpec& seed);

Direction sample_direction(std::size_t d, const DirectionalLaw& law, StreamRng& rng);
Direction sample_direction(std::size_t d, const DirectionalLaw& law, const SeedSpec& seed);

LineModelSample sample_line_model(std::size_t d, double rho, const DirectionalLaw& law,
                                  const SeedSpec& seed);

BrownianModelSample sample_brownian_model(std::size_t d, double rho, std::size_t n_steps,
                                          const SeedSpec& seed);

// Monte Carlo estimate of P(S in closure of the cone) under law.
ProbabilityEstimate condition_probability(std::size_t d, const DirectionalLaw& law,
                                          const OrthantCone& cone, std::size_t n_samples,
                                          const SeedSpec& seed);

}  // namespace cylcover

#endif  // CYLCOVER_PROCESSES_HPP_
