#include "cylcover/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <queue>
#include <stdexcept>

namespace cylcover {

namespace {

constexpr double kNodes[3] = {-0.77459666924148337704, 0.0, 0.77459666924148337704};
constexpr double kWeights[3] = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};

struct Cell {
  std::vector<double> lo;
  std::vector<double> hi;
  double coarse = 0.0;  // rule on the cell itself
  double fine = 0.0;    // rule summed over the 2^k halves
  std::vector<double> half_values;
  double error = 0.0;
  std::size_t id = 0;
};

class Cubature {
 public:
  Cubature(const Integrand& f, std::size_t dim) : f_(f), dim_(dim), x_(dim) {}

  double rule(const std::vector<double>& lo, const std::vector<double>& hi) {
    const std::size_t n_pts = static_cast<std::size_t>(std::pow(3.0, static_cast<double>(dim_)));
    double jac = 1.0;
    for (std::size_t a = 0; a < dim_; ++a) jac *= 0.5 * (hi[a] - lo[a]);
    double sum = 0.0;
    for (std::size_t p = 0; p < n_pts; ++p) {
      std::size_t rest = p;
      double w = 1.0;
      for (std::size_t a = 0; a < dim_; ++a) {
        const std::size_t j = rest % 3;
        rest /= 3;
        const double mid = 0.5 * (lo[a] + hi[a]);
        x_[a] = mid + 0.5 * (hi[a] - lo[a]) * kNodes[j];
        w *= kWeights[j];
      }
      sum += w * f_(x_);
      ++evaluations_;
    }
    return jac * sum;
  }

  std::vector<std::pair<std::vector<double>, std::vector<double>>> halves(
      const std::vector<double>& lo, const std::vector<double>& hi) const {
    std::vector<std::pair<std::vector<double>, std::vector<double>>> out;
    out.reserve(std::size_t{1} << dim_);
    for (std::size_t mask = 0; mask < (std::size_t{1} << dim_); ++mask) {
      std::vector<double> l(dim_), h(dim_);
      for (std::size_t a = 0; a < dim_; ++a) {
        const double mid = 0.5 * (lo[a] + hi[a]);
        if ((mask >> a) & 1U) {
          l[a] = mid;
          h[a] = hi[a];
        } else {
          l[a] = lo[a];
          h[a] = mid;
        }
      }
      out.emplace_back(std::move(l), std::move(h));
    }
    return out;
  }

  void finish(Cell& c) {
    c.half_values.clear();
    c.fine = 0.0;
    for (const auto& [l, h] : halves(c.lo, c.hi)) {
      const double v = rule(l, h);
      c.half_values.push_back(v);
      c.fine += v;
    }
    c.error = std::abs(c.fine - c.coarse);
  }

  std::size_t evaluations() const { return evaluations_; }

 private:
  const Integrand& f_;
  std::size_t dim_;
  std::vector<double> x_;
  std::size_t evaluations_ = 0;
};

struct ByError {
  bool operator()(const Cell* a, const Cell* b) const {
    if (a->error != b->error) return a->error < b->error;
    return a->id > b->id;
  }
};

}  // namespace

CubatureResult adaptive_cubature(const Integrand& f, const Box& box, double tol,
                                 std::size_t max_cells,
                                 const std::vector<std::vector<double>>& breakpoints) {
  const std::size_t dim = box.dim();
  if (dim == 0 || box.hi.size() != dim) throw std::invalid_argument("cubature box is empty");
  if (!(tol > 0.0)) throw std::invalid_argument("cubature tolerance must be positive");

  // Initial partition from the breakpoints.
  std::vector<std::vector<double>> cuts(dim);
  for (std::size_t a = 0; a < dim; ++a) {
    cuts[a].push_back(box.lo[a]);
    if (a < breakpoints.size()) {
      for (double b : breakpoints[a]) {
        if (b > box.lo[a] && b < box.hi[a]) cuts[a].push_back(b);
      }
    }
    cuts[a].push_back(box.hi[a]);
    std::sort(cuts[a].begin(), cuts[a].end());
    cuts[a].erase(std::unique(cuts[a].begin(), cuts[a].end()), cuts[a].end());
  }

  Cubature cub(f, dim);
  std::vector<std::unique_ptr<Cell>> cells;
  std::priority_queue<Cell*, std::vector<Cell*>, ByError> queue;
  std::size_t next_id = 0;
  double total_error = 0.0;

  std::vector<std::size_t> idx(dim, 0);
  for (;;) {
    auto c = std::make_unique<Cell>();
    c->lo.resize(dim);
    c->hi.resize(dim);
    for (std::size_t a = 0; a < dim; ++a) {
      c->lo[a] = cuts[a][idx[a]];
      c->hi[a] = cuts[a][idx[a] + 1];
    }
    c->coarse = cub.rule(c->lo, c->hi);
    cub.finish(*c);
    c->id = next_id++;
    total_error += c->error;
    queue.push(c.get());
    cells.push_back(std::move(c));
    std::size_t a = 0;
    for (; a < dim; ++a) {
      if (++idx[a] + 1 < cuts[a].size()) break;
      idx[a] = 0;
    }
    if (a == dim) break;
  }

  std::size_t live = cells.size();
  while (total_error > tol && live < max_cells && !queue.empty()) {
    Cell* worst = queue.top();
    queue.pop();
    total_error -= worst->error;
    std::size_t h = 0;
    for (auto& [l, hi] : cub.halves(worst->lo, worst->hi)) {
      auto c = std::make_unique<Cell>();
      c->lo = std::move(l);
      c->hi = std::move(hi);
      c->coarse = worst->half_values[h++];
      cub.finish(*c);
      c->id = next_id++;
      total_error += c->error;
      queue.push(c.get());
      cells.push_back(std::move(c));
    }
    worst->error = -1.0;  // retired
    live += (std::size_t{1} << dim) - 1;
    if (total_error < 0.0) total_error = 0.0;
  }

  // Final sums in creation order over the live cells.
  CubatureResult out;
  for (const auto& c : cells) {
    if (c->error < 0.0) continue;
    out.value += c->fine;
    out.abs_error += c->error;
  }
  out.cells = live;
  out.evaluations = cub.evaluations();
  out.converged = out.abs_error <= tol;
  return out;
}

}  // namespace cylcover
