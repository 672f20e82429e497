#include "cylcover/theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "cylcover/errors.hpp"
#include "cylcover/quadrature.hpp"

namespace cylcover {

namespace {

constexpr double kPi = std::numbers::pi;

// Coordinate search never goes below this height; phi grows like
// x_d^{-(d-1)} near the base, so the infimum is not there.
constexpr double kSearchMinHeight = 1e-2;
constexpr double kSearchInitialStep = 0.25;
constexpr double kSearchFinalStep = 1e-4;

void check_dim(std::size_t d) {
  if (d < 2) throw std::invalid_argument("dimension must be >= 2");
}

}  // namespace

double unit_ball_volume(int n) {
  if (n < 1) throw std::invalid_argument("unit ball dimension must be >= 1");
  // kappa_n = 2 pi kappa_{n-2} / n from kappa_1 = 2, kappa_2 = pi; exact in
  // low dimensions where tgamma rounds.
  double k = (n % 2 == 1) ? 2.0 : kPi;
  for (int m = (n % 2 == 1) ? 3 : 4; m <= n; m += 2) k *= 2.0 * kPi / static_cast<double>(m);
  return k;
}

double crossing_constant(std::size_t d) {
  check_dim(d);
  const int n = static_cast<int>(d);
  return 2.0 * unit_ball_volume(n - 1) / (static_cast<double>(d) * unit_ball_volume(n));
}

double c_star_prefactor(std::size_t d) {
  check_dim(d);
  const int n = static_cast<int>(d);
  const double dd = static_cast<double>(d);
  return dd * dd / (dd - 1.0) * unit_ball_volume(n) / (2.0 * unit_ball_volume(n - 1));
}

CrossingProbability crossing_probability(double dist, double r, std::size_t d) {
  check_dim(d);
  if (!(dist > 0.0)) throw InvalidDistance("distance must be positive");
  if (r < 0.0) throw std::invalid_argument("radius must be nonnegative");
  CrossingProbability out;
  if (dist <= r) {
    out.leading = out.lower = out.upper = 1.0;
    if (d == 2) out.exact_2d = 1.0;
    return out;
  }
  const double u = r / dist;
  const double e = static_cast<double>(d - 1);
  const double k = crossing_constant(d);
  out.leading = std::pow(u, e) * k;
  out.lower = out.leading;
  out.upper = std::pow(std::asin(u), e) * k;
  if (d == 2) out.exact_2d = 2.0 / kPi * std::asin(u);
  return out;
}

double default_phi_tol(std::size_t d) { return d <= 2 ? 1e-8 : 1e-6; }

PhiResult phi_d(const PointD& x, double tol) {
  const std::size_t d = x.dim();
  check_dim(d);
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const double h = x.height();
  if (!(h > 0.0)) throw DegenerateHeight("phi_d needs x_d > 0");
  const std::size_t k = d - 1;
  const double h2 = h * h;
  const std::vector<double> xh(x.coords().begin(), x.coords().begin() + static_cast<long>(k));
  Integrand f;
  if (d == 2) {
    f = [&](std::span<const double> y) {
      const double u = y[0] - xh[0];
      return 1.0 / std::sqrt(u * u + h2);
    };
  } else {
    const double expo = -0.5 * static_cast<double>(k);
    f = [&, expo](std::span<const double> y) {
      double q = h2;
      for (std::size_t a = 0; a < k; ++a) {
        const double u = y[a] - xh[a];
        q += u * u;
      }
      return d == 3 ? 1.0 / q : std::pow(q, expo);
    };
  }
  std::vector<std::vector<double>> breaks(k);
  for (std::size_t a = 0; a < k; ++a) breaks[a] = {xh[a]};
  const CubatureResult res = adaptive_cubature(f, Box::unit(k), tol, 4'000'000, breaks);
  if (!res.converged) {
    throw Error("phi_d quadrature did not reach tolerance " + std::to_string(tol));
  }
  return PhiResult{res.value, res.abs_error, x};
}

InfPhiResult inf_phi(std::size_t d, double tol) {
  check_dim(d);
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const std::size_t k = d - 1;
  const double phi_tol = std::min(default_phi_tol(d), 0.25 * tol);
  InfPhiResult out;

  auto eval = [&](const std::vector<double>& p) {
    ++out.phi_evaluations;
    return phi_d(PointD(p), phi_tol).value;
  };

  std::vector<std::vector<double>> starts;
  out.corner_value = std::numeric_limits<double>::infinity();
  std::vector<double> best_corner;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<double> p(d, 1.0);
    for (std::size_t a = 0; a < k; ++a) p[a] = ((mask >> a) & 1U) ? 1.0 : 0.0;
    const double v = eval(p);
    if (v < out.corner_value) {
      out.corner_value = v;
      best_corner = p;
    }
    starts.push_back(std::move(p));
  }
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<double> p(d, 0.5);
    for (std::size_t a = 0; a < k; ++a) p[a] = ((mask >> a) & 1U) ? 0.75 : 0.25;
    starts.push_back(std::move(p));
  }
  starts.push_back(std::vector<double>(d, 0.5));

  out.value = out.corner_value;
  std::vector<double> best = best_corner;
  const double min_gain = 2.0 * phi_tol;
  for (const std::vector<double>& start : starts) {
    std::vector<double> p = start;
    double v = eval(p);
    for (double step = kSearchInitialStep; step >= kSearchFinalStep;) {
      bool moved = false;
      for (std::size_t a = 0; a < d && !moved; ++a) {
        const double lo = a == k ? kSearchMinHeight : 0.0;
        for (double sgn : {-1.0, 1.0}) {
          std::vector<double> q = p;
          q[a] = std::clamp(p[a] + sgn * step, lo, 1.0);
          if (q[a] == p[a]) continue;
          const double w = eval(q);
          if (w < v - min_gain) {
            p = std::move(q);
            v = w;
            moved = true;
            break;
          }
        }
      }
      if (!moved) step *= 0.5;
    }
    if (v < out.value - min_gain) {
      out.value = v;
      best = p;
    }
  }
  out.argmin = PointD(best);
  out.corner_confirmed = out.value >= out.corner_value - tol;
  return out;
}

CStar c_star(std::size_t d, double tol) {
  const InfPhiResult inf = inf_phi(d, tol);
  CStar out;
  out.d = d;
  out.inf_phi = inf.value;
  out.value = c_star_prefactor(d) / inf.value;
  out.limit = std::pow(out.value, 1.0 / static_cast<double>(d - 1));
  out.argmin = inf.argmin;
  return out;
}

double expected_cover_count(const PointD& x, double rho, double r, double tol) {
  const std::size_t d = x.dim();
  check_dim(d);
  if (!(x.height() > 0.0)) throw DegenerateHeight("expected_cover_count needs x_d > 0");
  if (!(rho > 0.0)) throw InvalidIntensity(rho);
  if (r < 0.0) throw std::invalid_argument("radius must be nonnegative");
  if (r == 0.0) return 0.0;
  const double phi = phi_d(x, tol).value;
  return rho * std::pow(r, static_cast<double>(d - 1)) * crossing_constant(d) * phi;
}

double expected_uncovered_volume(const Box& region, double c, double rho, std::size_t d,
                                 double tol) {
  check_dim(d);
  if (region.dim() != d || region.hi.size() != d) {
    throw std::invalid_argument("region dimension mismatch");
  }
  if (!(rho > 1.0)) throw std::invalid_argument("expected_uncovered_volume needs rho > 1");
  if (c < 0.0) throw std::invalid_argument("c must be nonnegative");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  for (std::size_t a = 0; a < d; ++a) {
    if (!(region.lo[a] < region.hi[a]) || region.lo[a] < 0.0 || region.hi[a] > 1.0) {
      throw std::invalid_argument("region must be a nonempty box inside the unit cube");
    }
  }
  if (!(region.lo[d - 1] > 0.0)) {
    throw DegenerateHeight("integration region touches the base x_d = 0");
  }
  if (c == 0.0) return region.volume();

  const double rate = c * crossing_constant(d) * std::log(rho);
  const double inner_tol =
      std::clamp(0.5 * tol / (rate * region.volume()), 1e-12, default_phi_tol(d));
  Integrand f = [&](std::span<const double> x) {
    const double phi = phi_d(PointD(std::vector<double>(x.begin(), x.end())), inner_tol).value;
    return std::exp(-rate * phi);
  };
  const CubatureResult res = adaptive_cubature(f, region, 0.5 * tol, 200'000);
  return res.value;
}

double radius_at_intensity(double c, double rho, std::size_t d) {
  check_dim(d);
  if (!(rho > 0.0)) throw InvalidIntensity(rho);
  if (c < 0.0) throw std::invalid_argument("c must be nonnegative");
  return std::pow(c * std::log(rho) / rho, 1.0 / static_cast<double>(d - 1));
}

}  // namespace cylcover
