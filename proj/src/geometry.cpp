#include "cylcover/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "cylcover/errors.hpp"

namespace cylcover {

PointD::PointD(std::vector<double> coords) : coords_(std::move(coords)) {}
PointD::PointD(std::initializer_list<double> coords) : coords_(coords) {}

BasePoint::BasePoint(std::vector<double> coords) : coords_(std::move(coords)) {
  for (double c : coords_) {
    if (!(c >= 0.0 && c <= 1.0)) {
      throw std::invalid_argument("base point coordinate outside [0,1]: " +
                                  std::to_string(c));
    }
  }
}
BasePoint::BasePoint(std::initializer_list<double> coords)
    : BasePoint(std::vector<double>(coords)) {}

Direction::Direction(std::vector<double> s) : s_(std::move(s)) {
  if (s_.size() < 2) {
    throw std::invalid_argument("direction needs at least 2 components");
  }
  double norm2 = 0.0;
  for (double c : s_) norm2 += c * c;
  if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
    throw std::invalid_argument("direction must be a nonzero finite vector");
  }
  const double norm = std::sqrt(norm2);
  if (std::abs(norm - 1.0) > kUnitNormTolerance) {
    for (double& c : s_) c /= norm;
  }
  if (s_.back() < 0.0) {
    throw std::invalid_argument("direction must lie on the upper hemisphere");
  }
}
Direction::Direction(std::initializer_list<double> s)
    : Direction(std::vector<double>(s)) {}

OrthantCone::OrthantCone(std::vector<int> z) : z_(std::move(z)) {
  for (int v : z_) {
    if (v != -1 && v != 1) {
      throw std::invalid_argument("cone signs must be -1 or +1");
    }
  }
}
OrthantCone::OrthantCone(std::initializer_list<int> z)
    : OrthantCone(std::vector<int>(z)) {}

std::vector<OrthantCone> OrthantCone::all(std::size_t d) {
  if (d < 2) throw std::invalid_argument("cones need d >= 2");
  const std::size_t k = d - 1;
  std::vector<OrthantCone> out;
  out.reserve(std::size_t{1} << k);
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<int> z(k);
    for (std::size_t i = 0; i < k; ++i) {
      z[i] = ((mask >> (k - 1 - i)) & 1U) ? 1 : -1;
    }
    out.emplace_back(std::move(z));
  }
  return out;
}

double point_ray_distance(std::span<const double> x,
                          std::span<const double> base,
                          std::span<const double> dir) {
  const std::size_t d = dir.size();
  double alpha = 0.0;
  for (std::size_t i = 0; i + 1 < d; ++i) alpha += (x[i] - base[i]) * dir[i];
  alpha += x[d - 1] * dir[d - 1];
  if (alpha < 0.0) alpha = 0.0;
  double dist2 = 0.0;
  for (std::size_t i = 0; i + 1 < d; ++i) {
    const double p = x[i] - base[i] - alpha * dir[i];
    dist2 += p * p;
  }
  const double p = x[d - 1] - alpha * dir[d - 1];
  dist2 += p * p;
  return std::sqrt(dist2);
}

namespace {

void check_dims(const PointD& x, const LineRay& ray) {
  if (x.dim() != ray.dim() || ray.base.dim() + 1 != ray.dim()) {
    throw std::invalid_argument("dimension mismatch between point and ray");
  }
}

}  // namespace

double point_ray_distance(const PointD& x, const LineRay& ray) {
  check_dims(x, ray);
  return point_ray_distance(x.coords(), ray.base.coords(), ray.dir.coords());
}

double point_line_distance(const PointD& x, const LineRay& ray) {
  check_dims(x, ray);
  const std::size_t d = ray.dim();
  std::vector<double> w(x.coords().begin(), x.coords().end());
  for (std::size_t i = 0; i + 1 < d; ++i) w[i] -= ray.base[i];
  double alpha = 0.0;
  for (std::size_t i = 0; i < d; ++i) alpha += w[i] * ray.dir[i];
  double dist2 = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    const double p = w[i] - alpha * ray.dir[i];
    dist2 += p * p;
  }
  return std::sqrt(dist2);
}

bool ray_hits_ball(const LineRay& ray, const PointD& center, double r) {
  if (r < 0.0) throw std::invalid_argument("ball radius must be nonnegative");
  return point_ray_distance(center, ray) <= r;
}

std::vector<double> horizontal_position(const LineRay& ray, double t) {
  const double sd = ray.dir.vertical();
  if (sd == 0.0) throw ZeroVerticalComponent();
  const std::size_t k = ray.base.dim();
  std::vector<double> out(k);
  const double scale = t / sd;
  for (std::size_t i = 0; i < k; ++i) out[i] = ray.base[i] + scale * ray.dir[i];
  return out;
}

bool in_cone(const Direction& dir, const OrthantCone& cone) {
  if (dir.dim() != cone.dim()) {
    throw std::invalid_argument("dimension mismatch between direction and cone");
  }
  for (std::size_t i = 0; i + 1 < dir.dim(); ++i) {
    const double s = dir[i];
    if (s != 0.0 && (s > 0.0 ? 1 : -1) != cone[i]) return false;
  }
  return dir.vertical() >= kConeMinVertical;
}

}  // namespace cylcover
