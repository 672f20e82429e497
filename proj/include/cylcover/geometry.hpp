#ifndef CYLCOVER_GEOMETRY_HPP_
#define CYLCOVER_GEOMETRY_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace cylcover {

// Minimum vertical component of a direction in an orthant cone, 2/sqrt(5).
inline constexpr double kConeMinVertical = 0.89442719099991587856;

// Tolerance on |s| - 1 accepted for a Direction.
inline constexpr double kUnitNormTolerance = 1e-12;

// A point of R^d (usually of the unit cube).
class PointD {
 public:
  PointD() = default;
  explicit PointD(std::vector<double> coords);
  PointD(std::initializer_list<double> coords);

  std::size_t dim() const { return coords_.size(); }
  std::span<const double> coords() const { return coords_; }
  double operator[](std::size_t i) const { return coords_[i]; }
  // Height coordinate x_d.
  double height() const { return coords_.back(); }

 private:
  std::vector<double> coords_;
};

// A point of the cube base [0,1]^{d-1}.
class BasePoint {
 public:
  BasePoint() = default;
  explicit BasePoint(std::vector<double> coords);
  BasePoint(std::initializer_list<double> coords);

  std::size_t dim() const { return coords_.size(); }
  std::span<const double> coords() const { return coords_; }
  double operator[](std::size_t i) const { return coords_[i]; }

 private:
  std::vector<double> coords_;
};

// A unit vector on the closed upper hemisphere (s_d >= 0). The constructor
// normalizes its argument.
class Direction {
 public:
  Direction() = default;
  explicit Direction(std::vector<double> s);
  Direction(std::initializer_list<double> s);

  std::size_t dim() const { return s_.size(); }
  std::span<const double> coords() const { return s_; }
  double operator[](std::size_t i) const { return s_[i]; }
  double vertical() const { return s_.back(); }

 private:
  std::vector<double> s_;
};

// The trajectory {base x {0} + alpha * dir : alpha >= 0}.
struct LineRay {
  BasePoint base;
  Direction dir;

  std::size_t dim() const { return dir.dim(); }
};

// Sign pattern z in {-1,+1}^{d-1} selecting the cone of directions with
// sgn(s_i) = z_i and s_d >= 2/sqrt(5).
class OrthantCone {
 public:
  OrthantCone() = default;
  explicit OrthantCone(std::vector<int> z);
  OrthantCone(std::initializer_list<int> z);

  std::size_t dim() const { return z_.size() + 1; }
  std::span<const int> signs() const { return z_; }
  int operator[](std::size_t i) const { return z_[i]; }

  // All 2^{d-1} cones of dimension d, in lexicographic order with -1 first.
  static std::vector<OrthantCone> all(std::size_t d);

 private:
  std::vector<int> z_;
};

// Distance from x to the ray (the projection parameter is clamped to
// alpha >= 0).
double point_ray_distance(const PointD& x, const LineRay& ray);

// Same, on raw coordinate spans; x has d entries, base d-1, dir d.
double point_ray_distance(std::span<const double> x,
                          std::span<const double> base,
                          std::span<const double> dir);

// Distance from x to the full line through base x {0} with direction dir.
double point_line_distance(const PointD& x, const LineRay& ray);

bool ray_hits_ball(const LineRay& ray, const PointD& center, double r);

// Horizontal coordinates of the ray's point at height t. Throws
// ZeroVerticalComponent if the ray is horizontal.
std::vector<double> horizontal_position(const LineRay& ray, double t);

// Membership in the closure of the cone: sgn(s_i) in {0, z_i} for i < d and
// s_d >= 2/sqrt(5).
bool in_cone(const Direction& dir, const OrthantCone& cone);

}  // namespace cylcover

#endif  // CYLCOVER_GEOMETRY_HPP_
