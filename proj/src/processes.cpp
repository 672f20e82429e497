#include "cylcover/processes.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "cylcover/errors.hpp"

namespace cylcover {

namespace {

void check_dim(std::size_t d) {
  if (d < 2) throw std::invalid_argument("dimension must be >= 2");
}

void check_rho(double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw InvalidIntensity(rho);
}

// Isotropic unit vector with the last coordinate reflected to s_d >= 0.
std::vector<double> uniform_hemisphere(std::size_t d, StreamRng& rng) {
  std::vector<double> s(d);
  for (;;) {
    double norm2 = 0.0;
    for (double& c : s) {
      c = rng.normal();
      norm2 += c * c;
    }
    if (norm2 > 0.0) {
      const double inv = 1.0 / std::sqrt(norm2);
      for (double& c : s) c *= inv;
      s.back() = std::abs(s.back());
      return s;
    }
  }
}

}  // namespace

std::vector<double> BrownianPath::position(double t) const {
  const std::size_t k = horizontal_dim();
  const std::size_t n = n_steps();
  std::vector<double> pos(base.coords().begin(), base.coords().end());
  if (n == 0) return pos;
  const double tc = std::clamp(t, 0.0, 1.0);
  const double scaled = tc * static_cast<double>(n);
  std::size_t seg = static_cast<std::size_t>(std::floor(scaled));
  if (seg >= n) seg = n - 1;
  const double frac = scaled - static_cast<double>(seg);
  for (std::size_t s = 0; s < seg; ++s) {
    for (std::size_t i = 0; i < k; ++i) pos[i] += increments[s * k + i];
  }
  for (std::size_t i = 0; i < k; ++i) pos[i] += frac * increments[seg * k + i];
  return pos;
}

std::vector<double> BrownianPath::knots() const {
  const std::size_t k = horizontal_dim();
  const std::size_t n = n_steps();
  std::vector<double> out((n + 1) * k);
  for (std::size_t i = 0; i < k; ++i) out[i] = base[i];
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t i = 0; i < k; ++i) {
      out[(s + 1) * k + i] = out[s * k + i] + increments[s * k + i];
    }
  }
  return out;
}

std::vector<BasePoint> sample_base_points(std::size_t d, double rho, const SeedSpec& seed) {
  check_dim(d);
  check_rho(rho);
  StreamRng rng(seed, Substream::kBasePoints);
  std::poisson_distribution<long long> count_dist(rho);
  const long long n = count_dist(rng.engine());
  std::vector<BasePoint> out;
  out.reserve(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) {
    std::vector<double> c(d - 1);
    for (double& v : c) v = rng.uniform();
    out.emplace_back(std::move(c));
  }
  return out;
}

Direction sample_direction(std::size_t d, const DirectionalLaw& law, StreamRng& rng) {
  check_dim(d);
  return std::visit(
      [&](const auto& l) -> Direction {
        using L = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<L, UniformHemisphere>) {
          return Direction(uniform_hemisphere(d, rng));
        } else if constexpr (std::is_same_v<L, ConeRestricted>) {
          if (l.cone.dim() != d) throw std::invalid_argument("cone dimension mismatch");
          // The uniform law is invariant under horizontal sign flips, so
          // conditioning on s_d >= 2/sqrt(5) and imposing the signs is exact.
          for (;;) {
            std::vector<double> s = uniform_hemisphere(d, rng);
            if (s.back() < kConeMinVertical) continue;
            for (std::size_t i = 0; i + 1 < d; ++i) s[i] = std::abs(s[i]) * l.cone[i];
            return Direction(std::move(s));
          }
        } else {
          if (l.dir.dim() != d) throw std::invalid_argument("fixed direction dimension mismatch");
          return l.dir;
        }
      },
      law);
}

Direction sample_direction(std::size_t d, const DirectionalLaw& law, const SeedSpec& seed) {
  StreamRng rng(seed, Substream::kDirections);
  return sample_direction(d, law, rng);
}

LineModelSample sample_line_model(std::size_t d, double rho, const DirectionalLaw& law,
                                  const SeedSpec& seed) {
  LineModelSample sample{d, rho, {}};
  std::vector<BasePoint> bases = sample_base_points(d, rho, seed);
  StreamRng rng(seed, Substream::kDirections);
  sample.rays.reserve(bases.size());
  for (BasePoint& b : bases) {
    Direction dir = sample_direction(d, law, rng);
    sample.rays.push_back(LineRay{std::move(b), std::move(dir)});
  }
  return sample;
}

BrownianModelSample sample_brownian_model(std::size_t d, double rho, std::size_t n_steps,
                                          const SeedSpec& seed) {
  if (n_steps < 1) throw InvalidSteps(static_cast<long long>(n_steps));
  BrownianModelSample sample{d, rho, n_steps, {}};
  std::vector<BasePoint> bases = sample_base_points(d, rho, seed);
  StreamRng rng(seed, Substream::kIncrements);
  const double sd = std::sqrt(1.0 / static_cast<double>(n_steps));
  const std::size_t k = d - 1;
  sample.paths.reserve(bases.size());
  for (BasePoint& b : bases) {
    std::vector<double> inc(n_steps * k);
    for (double& v : inc) v = sd * rng.normal();
    sample.paths.push_back(BrownianPath{std::move(b), std::move(inc)});
  }
  return sample;
}

ProbabilityEstimate condition_probability(std::size_t d, const DirectionalLaw& law,
                                          const OrthantCone& cone, std::size_t n_samples,
                                          const SeedSpec& seed) {
  if (n_samples < 1) throw std::invalid_argument("n_samples must be >= 1");
  if (cone.dim() != d) throw std::invalid_argument("cone dimension mismatch");
  StreamRng rng(seed, Substream::kMonteCarlo);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < n_samples; ++i) {
    if (in_cone(sample_direction(d, law, rng), cone)) ++hits;
  }
  const double n = static_cast<double>(n_samples);
  const double p = static_cast<double>(hits) / n;
  return {p, std::sqrt(p * (1.0 - p) / n)};
}

}  // namespace cylcover
