#ifndef CYLCOVER_THEORY_HPP_
#define CYLCOVER_THEORY_HPP_

#include <cstddef>
#include <optional>

#include "cylcover/coverage.hpp"
#include "cylcover/geometry.hpp"

namespace cylcover {

// Volume of the n-dimensional unit ball, pi^{n/2} / Gamma(n/2 + 1).
double unit_ball_volume(int n);

// 2 kappa_{d-1} / (d kappa_d): probability scale of a uniform line hitting a
// small ball, per unit (r/dist)^{d-1}.
double crossing_constant(std::size_t d);

// d^2/(d-1) * kappa_d / (2 kappa_{d-1}).
double c_star_prefactor(std::size_t d);

// Probability that a line through a base point y, with direction uniform on
// the upper hemisphere, meets B_d(x, r) where dist = |y x {0} - x|.
// `leading` is the first-order term, [lower, upper] the spherical-cap
// sandwich; in d = 2 the exact value (2/pi) asin(r/dist) is also reported.
// Every field is 1 when dist <= r.
struct CrossingProbability {
  double leading = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  std::optional<double> exact_2d;
};
CrossingProbability crossing_probability(double dist, double r, std::size_t d);

struct PhiResult {
  double value = 0.0;
  double abs_error = 0.0;
  PointD x;
};

double default_phi_tol(std::size_t d);

// phi_d(x) = integral over [0,1]^{d-1} of |y x {0} - x|^{-(d-1)} dy, x_d > 0.
PhiResult phi_d(const PointD& x, double tol);
inline PhiResult phi_d(const PointD& x) { return phi_d(x, default_phi_tol(x.dim())); }

struct InfPhiResult {
  double value = 0.0;
  PointD argmin;
  // Smallest phi over the corners of the top face [0,1]^{d-1} x {1}.
  double corner_value = 0.0;
  // True when no search start beat the corner value by more than tol.
  bool corner_confirmed = false;
  std::size_t phi_evaluations = 0;
};

// Minimizes phi_d over [0,1]^{d-1} x (0,1] by corner evaluation plus
// multistart coordinate search.
InfPhiResult inf_phi(std::size_t d, double tol);

struct CStar {
  std::size_t d = 2;
  double inf_phi = 0.0;
  double value = 0.0;
  // (c*)^{1/(d-1)}: limit of R / (log rho / rho)^{1/(d-1)}.
  double limit = 0.0;
  PointD argmin;
};
CStar c_star(std::size_t d, double tol);

// Leading-order mean number of cylinders of radius r covering x:
// rho r^{d-1} crossing_constant(d) phi_d(x).
double expected_cover_count(const PointD& x, double rho, double r, double tol);

// Leading-order expected uncovered volume of region at r = (c log rho /
// rho)^{1/(d-1)}: integral over region of rho^{-c crossing_constant(d) phi_d(x)}.
double expected_uncovered_volume(const Box& region, double c, double rho, std::size_t d,
                                 double tol);

// (c log rho / rho)^{1/(d-1)}, natural log.
double radius_at_intensity(double c, double rho, std::size_t d);

}  // namespace cylcover

#endif  // CYLCOVER_THEORY_HPP_
