#ifndef CYLCOVER_COVERAGE_HPP_
#define CYLCOVER_COVERAGE_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "cylcover/geometry.hpp"
#include "cylcover/processes.hpp"
#include "cylcover/rng.hpp"

namespace cylcover {

// Structuring set K: the full d-ball, or the horizontal (d-1)-disk embedded
// at height 0.
enum class DilationKind { kFullBall, kBaseDisk };

struct DilationSpec {
  DilationKind kind = DilationKind::kFullBall;
  double r = 0.0;
};

enum class RadiusStatus {
  kCertified,
  // No trajectory exists, so no finite radius covers the cube.
  kEmptyModel,
  // The evaluation budget ran out; [lower, upper] is still a valid bracket
  // but may be wider than requested.
  kBudgetExhausted,
};

// Bracket [lower, upper] around the coverage radius.
struct CertifiedRadius {
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
  // Per-trajectory distance evaluations spent.
  std::uint64_t evaluations = 0;
  RadiusStatus status = RadiusStatus::kCertified;

  double width() const { return upper - lower; }
  double midpoint() const { return 0.5 * (lower + upper); }
};

struct VolumeEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::size_t n_points = 0;
};

// Axis-aligned box.
struct Box {
  std::vector<double> lo;
  std::vector<double> hi;

  static Box unit(std::size_t d);
  std::size_t dim() const { return lo.size(); }
  double volume() const;
  bool contains(std::span<const double> x) const;
};

inline constexpr std::uint64_t kDefaultEvaluationBudget = 1'000'000'000'000ULL;
// Largest dimension handled by the branch-and-bound.
inline constexpr std::size_t kMaxCoverageDim = 8;

struct RadiusOptions {
  // Distances are measured in the gauge of K / gauge_scale, i.e. every
  // per-trajectory distance is multiplied by this factor.
  double gauge_scale = 1.0;
  std::size_t initial_cells_per_axis = 9;
};

// Minimum over trajectories of the distance relevant for the dilation kind
// (Euclidean distance to the ray for the ball, horizontal distance at height
// x_d for the disk). Returns +inf for an empty sample.
double min_distance(const LineModelSample& sample, DilationKind kind, const PointD& x);
double min_distance(const BrownianModelSample& sample, DilationKind kind, const PointD& x);

bool covers_point(const LineModelSample& sample, const DilationSpec& dilation,
                  const PointD& x);
bool covers_point(const BrownianModelSample& sample, const DilationSpec& dilation,
                  const PointD& x);

std::size_t cover_count(const LineModelSample& sample, const DilationSpec& dilation,
                        const PointD& x);
std::size_t cover_count(const BrownianModelSample& sample, const DilationSpec& dilation,
                        const PointD& x);

// Certified bracket on sup_{x in [0,1]^d} min_i dist_i(x) by Lipschitz
// branch-and-bound.
CertifiedRadius coverage_radius(const LineModelSample& sample, DilationKind kind, double tol,
                                std::uint64_t budget = kDefaultEvaluationBudget,
                                const RadiusOptions& options = {});
CertifiedRadius coverage_radius(const BrownianModelSample& sample, DilationKind kind,
                                double tol, std::uint64_t budget = kDefaultEvaluationBudget,
                                const RadiusOptions& options = {});

// Monte Carlo estimate of the volume of region \ (union of dilated
// trajectories).
VolumeEstimate uncovered_volume_estimate(const LineModelSample& sample,
                                         const DilationSpec& dilation, const Box& region,
                                         std::size_t n_points, const SeedSpec& seed);
VolumeEstimate uncovered_volume_estimate(const BrownianModelSample& sample,
                                         const DilationSpec& dilation, const Box& region,
                                         std::size_t n_points, const SeedSpec& seed);

// Coverage radius of the Boolean model formed by the trajectories' positions
// at height t, over [shrink, 1 - shrink]^{d-1}.
CertifiedRadius slice_coverage_radius(const LineModelSample& sample, double t, double shrink,
                                      double tol,
                                      std::uint64_t budget = kDefaultEvaluationBudget);

}  // namespace cylcover

#endif  // CYLCOVER_COVERAGE_HPP_
