// Distance fields over the unit cube used by the coverage queries and the
// branch-and-bound. Each field is a finite family of per-trajectory distance
// functions g_i. Trajectories are stored as fixed-size records of doubles so
// candidate lists can be copied into contiguous buffers; bound() returns the
// centre value of a cell and a radius var with |g_i(x) - g_i(c)| <= var on
// the cell.
#ifndef CYLCOVER_SRC_FIELDS_HPP_
#define CYLCOVER_SRC_FIELDS_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "cylcover/coverage.hpp"
#include "cylcover/processes.hpp"

namespace cylcover::detail {

struct CellGeom {
  const double* center = nullptr;
  const double* half = nullptr;
  std::size_t dim = 0;
  double half_norm = 0.0;    // |half| over all axes
  double half_norm_h = 0.0;  // |half| over the horizontal axes
  double half_t = 0.0;       // half width along the last (time) axis
};

// Common storage: n records of record_size() doubles.
class RecordStore {
 public:
  std::size_t size() const { return n_; }
  std::size_t record_size() const { return rec_; }
  const double* record(std::size_t i) const { return &data_[i * rec_]; }
  const double* data() const { return data_.data(); }

 protected:
  std::size_t n_ = 0;
  std::size_t rec_ = 0;
  std::vector<double> data_;
};

// Euclidean distance to rays; 1-Lipschitz. Record: base (d-1), dir (d).
class LineBallField : public RecordStore {
 public:
  static constexpr bool kHasTimeAxis = false;

  explicit LineBallField(const LineModelSample& sample);

  std::size_t dim() const { return d_; }
  double value(std::size_t i, const double* x) const { return value_rec(record(i), x); }
  double value_rec(const double* rec, const double* x) const;

  // Where the projection onto the ray stays nonnegative over the whole cell
  // the distance is that to a line, whose change over the cell is at most the
  // cross-ray part of the offset: sqrt(|h|^2 - m^2) with m the smallest
  // |s . u| over corners u. Otherwise the 1-Lipschitz bound |h|.
  void bound(const double* rec, const CellGeom& g, double& v, double& var, double& speed) const {
    speed = 1.0;
    const double* b = rec;
    const double* s = rec + (d_ - 1);
    const double* x = g.center;
    const double* h = g.half;
    if (d_ == 2) {
      const double w0 = x[0] - b[0];
      const double w1 = x[1];
      const double alpha = w0 * s[0] + w1 * s[1];
      v = alpha >= 0.0 ? std::abs(w0 * s[1] - w1 * s[0]) : std::sqrt(w0 * w0 + w1 * w1);
      const double a0 = std::abs(s[0]) * h[0];
      const double a1 = s[1] * h[1];
      var = alpha >= a0 + a1 ? s[1] * h[0] + std::abs(s[0]) * h[1] : g.half_norm;
      return;
    }
    v = value_rec(rec, x);
    double alpha = x[d_ - 1] * s[d_ - 1];
    for (std::size_t a = 0; a + 1 < d_; ++a) alpha += (x[a] - b[a]) * s[a];
    double sum = 0.0;
    double top = 0.0;
    for (std::size_t a = 0; a < d_; ++a) {
      const double t = std::abs(s[a]) * h[a];
      sum += t;
      top = std::max(top, t);
    }
    if (alpha >= sum) {
      const double m = std::max(0.0, 2.0 * top - sum);
      var = std::sqrt(std::max(0.0, g.half_norm * g.half_norm - m * m));
    } else {
      var = g.half_norm;
    }
  }

 private:
  std::size_t d_;
};

// Horizontal distance at height x_d to the ray's point at that height:
// |x_h - b - x_d v| with horizontal velocity v = s_h / s_d. The bound
// |dg| <= |dx_h| + |dx_d| |v| holds per ray. Record: base (k), v (k), |v|.
class LineDiskField : public RecordStore {
 public:
  static constexpr bool kHasTimeAxis = true;

  // Throws ZeroVerticalComponent if any ray is horizontal.
  explicit LineDiskField(const LineModelSample& sample);

  std::size_t dim() const { return d_; }
  double value(std::size_t i, const double* x) const { return value_rec(record(i), x); }
  double value_rec(const double* rec, const double* x) const {
    const std::size_t k = d_ - 1;
    const double t = x[k];
    double s = 0.0;
    for (std::size_t a = 0; a < k; ++a) {
      const double u = x[a] - rec[a] - t * rec[k + a];
      s += u * u;
    }
    return std::sqrt(s);
  }
  void bound(const double* rec, const CellGeom& g, double& v, double& var, double& speed) const {
    v = value_rec(rec, g.center);
    speed = rec[2 * (d_ - 1)];
    var = g.half_norm_h + g.half_t * speed;
  }

 private:
  std::size_t d_;
};

// Horizontal distance to piecewise-linear Brownian paths. The time
// Lipschitz constant on a cell is the largest segment speed among the grid
// segments that meet the cell's time range. Record: path index.
class BrownianDiskField : public RecordStore {
 public:
  static constexpr bool kHasTimeAxis = true;
  static constexpr std::size_t kBlock = 16;

  explicit BrownianDiskField(const BrownianModelSample& sample);

  std::size_t dim() const { return d_; }
  double value(std::size_t i, const double* x) const;
  double value_rec(const double* rec, const double* x) const {
    return value(static_cast<std::size_t>(rec[0]), x);
  }
  void bound(const double* rec, const CellGeom& g, double& v, double& var, double& speed) const {
    const auto i = static_cast<std::size_t>(rec[0]);
    v = value(i, g.center);
    speed = max_speed(i, g.center[d_ - 1] - g.half_t, g.center[d_ - 1] + g.half_t);
    var = g.half_norm_h + g.half_t * speed;
  }
  double max_speed(std::size_t i, double t0, double t1) const;

 private:
  std::size_t d_;
  std::size_t k_;
  std::size_t steps_;
  std::size_t blocks_;
  std::vector<double> knots_;       // n x (steps+1) x k
  std::vector<double> speed_;       // n x steps, |segment| * steps
  std::vector<double> block_max_;   // n x blocks
};

// Euclidean distance to a finite point set; 1-Lipschitz. Record: the point.
class PointField : public RecordStore {
 public:
  static constexpr bool kHasTimeAxis = false;

  PointField(std::size_t dim, std::vector<double> points);

  std::size_t dim() const { return rec_; }
  double value(std::size_t i, const double* x) const { return value_rec(record(i), x); }
  double value_rec(const double* p, const double* x) const {
    double s = 0.0;
    for (std::size_t a = 0; a < rec_; ++a) {
      const double t = x[a] - p[a];
      s += t * t;
    }
    return std::sqrt(s);
  }
  void bound(const double* rec, const CellGeom& g, double& v, double& var, double& speed) const {
    speed = 1.0;
    v = value_rec(rec, g.center);
    var = g.half_norm;
  }
};

}  // namespace cylcover::detail

#endif  // CYLCOVER_SRC_FIELDS_HPP_
