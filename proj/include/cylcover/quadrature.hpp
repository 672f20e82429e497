#ifndef CYLCOVER_QUADRATURE_HPP_
#define CYLCOVER_QUADRATURE_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "cylcover/coverage.hpp"

namespace cylcover {

struct CubatureResult {
  double value = 0.0;
  double abs_error = 0.0;
  std::size_t cells = 0;
  std::size_t evaluations = 0;
  bool converged = false;
};

using Integrand = std::function<double(std::span<const double>)>;

// Globally adaptive tensor-product cubature over a box. Each cell carries the
// 3-point Gauss-Legendre product rule on itself and on its 2^k halves; the
// difference of the two is the cell's error estimate and the finer value is
// kept. The cell with the largest estimate is subdivided until the summed
// estimate drops below tol or max_cells is reached.
//
// `breakpoints[a]` lists interior coordinates along axis a at which the box is
// cut before refinement starts (e.g. the location of an integrand peak).
CubatureResult adaptive_cubature(const Integrand& f, const Box& box, double tol,
                                 std::size_t max_cells = 1'000'000,
                                 const std::vector<std::vector<double>>& breakpoints = {});

}  // namespace cylcover

#endif  // CYLCOVER_QUADRATURE_HPP_
