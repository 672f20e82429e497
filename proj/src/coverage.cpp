#include "cylcover/coverage.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <stdexcept>

#include "cylcover/errors.hpp"
#include "fields.hpp"

namespace cylcover {

namespace detail {

LineBallField::LineBallField(const LineModelSample& sample) : d_(sample.d) {
  n_ = sample.rays.size();
  rec_ = 2 * d_ - 1;
  data_.reserve(n_ * rec_);
  for (const LineRay& ray : sample.rays) {
    if (ray.dim() != d_) throw std::invalid_argument("ray dimension mismatch");
    data_.insert(data_.end(), ray.base.coords().begin(), ray.base.coords().end());
    data_.insert(data_.end(), ray.dir.coords().begin(), ray.dir.coords().end());
  }
}

double LineBallField::value_rec(const double* rec, const double* x) const {
  return point_ray_distance(std::span<const double>(x, d_), std::span<const double>(rec, d_ - 1),
                            std::span<const double>(rec + (d_ - 1), d_));
}

LineDiskField::LineDiskField(const LineModelSample& sample) : d_(sample.d) {
  const std::size_t k = d_ - 1;
  n_ = sample.rays.size();
  rec_ = 2 * k + 1;
  data_.reserve(n_ * rec_);
  for (const LineRay& ray : sample.rays) {
    if (ray.dim() != d_) throw std::invalid_argument("ray dimension mismatch");
    const double sd = ray.dir.vertical();
    if (sd == 0.0) throw ZeroVerticalComponent();
    for (std::size_t a = 0; a < k; ++a) data_.push_back(ray.base[a]);
    double sp2 = 0.0;
    for (std::size_t a = 0; a < k; ++a) {
      const double v = ray.dir[a] / sd;
      data_.push_back(v);
      sp2 += v * v;
    }
    data_.push_back(std::sqrt(sp2));
  }
}

BrownianDiskField::BrownianDiskField(const BrownianModelSample& sample)
    : d_(sample.d),
      k_(sample.d - 1),
      steps_(sample.n_steps),
      blocks_((sample.n_steps + kBlock - 1) / kBlock) {
  n_ = sample.paths.size();
  rec_ = 1;
  data_.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) data_[i] = static_cast<double>(i);
  knots_.reserve(n_ * (steps_ + 1) * k_);
  for (const BrownianPath& path : sample.paths) {
    if (path.horizontal_dim() != k_ || path.n_steps() != steps_) {
      throw std::invalid_argument("Brownian path shape mismatch");
    }
    const std::vector<double> kn = path.knots();
    knots_.insert(knots_.end(), kn.begin(), kn.end());
  }
  speed_.resize(n_ * steps_);
  block_max_.assign(n_ * blocks_, 0.0);
  const double scale = static_cast<double>(steps_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t s = 0; s < steps_; ++s) {
      const double* p = &knots_[(i * (steps_ + 1) + s) * k_];
      double len2 = 0.0;
      for (std::size_t a = 0; a < k_; ++a) len2 += (p[k_ + a] - p[a]) * (p[k_ + a] - p[a]);
      const double v = std::sqrt(len2) * scale;
      speed_[i * steps_ + s] = v;
      double& m = block_max_[i * blocks_ + s / kBlock];
      m = std::max(m, v);
    }
  }
}

double BrownianDiskField::max_speed(std::size_t i, double t0, double t1) const {
  const double n = static_cast<double>(steps_);
  auto seg_of = [&](double t) {
    const double c = std::clamp(t, 0.0, 1.0) * n;
    return std::min(static_cast<std::size_t>(c), steps_ - 1);
  };
  const std::size_t s0 = seg_of(t0);
  const std::size_t s1 = seg_of(t1);
  const double* sp = &speed_[i * steps_];
  double m = 0.0;
  if (s1 - s0 < 2 * kBlock) {
    for (std::size_t s = s0; s <= s1; ++s) m = std::max(m, sp[s]);
    return m;
  }
  const std::size_t b0 = (s0 + kBlock - 1) / kBlock;  // first full block
  const std::size_t b1 = (s1 + 1) / kBlock;           // one past last full block
  for (std::size_t s = s0; s < b0 * kBlock; ++s) m = std::max(m, sp[s]);
  for (std::size_t b = b0; b < b1; ++b) m = std::max(m, block_max_[i * blocks_ + b]);
  for (std::size_t s = b1 * kBlock; s <= s1; ++s) m = std::max(m, sp[s]);
  return m;
}

double BrownianDiskField::value(std::size_t i, const double* x) const {
  const double n = static_cast<double>(steps_);
  const double scaled = std::clamp(x[k_], 0.0, 1.0) * n;
  const std::size_t seg = std::min(static_cast<std::size_t>(scaled), steps_ - 1);
  const double frac = scaled - static_cast<double>(seg);
  const double* p = &knots_[(i * (steps_ + 1) + seg) * k_];
  double s = 0.0;
  for (std::size_t a = 0; a < k_; ++a) {
    const double pos = p[a] + frac * (p[k_ + a] - p[a]);
    const double u = x[a] - pos;
    s += u * u;
  }
  return std::sqrt(s);
}

PointField::PointField(std::size_t dim, std::vector<double> points) {
  rec_ = dim;
  n_ = dim == 0 ? 0 : points.size() / dim;
  data_ = std::move(points);
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Breadth-first refinement stops growing generations at these sizes and
// switches to depth-first search of the remaining cells.
constexpr std::size_t kSwitchCells = 16384;
constexpr std::size_t kSwitchRecordDoubles = 16'000'000;

template <class Field>
class BranchAndBound {
 public:
  BranchAndBound(const Field& field, double scale, double tol, std::uint64_t budget)
      : field_(field), scale_(scale), tol_(tol), budget_(budget) {}

  CertifiedRadius run(const Box& domain, std::size_t per_axis) {
    CertifiedRadius out;
    if (field_.size() == 0) {
      out.lower = kInf;
      out.upper = kInf;
      out.status = RadiusStatus::kEmptyModel;
      return out;
    }
    const std::size_t dim = field_.dim();
    rec_ = field_.record_size();

    std::size_t n_initial = 1;
    for (std::size_t a = 0; a < dim; ++a) n_initial *= per_axis;
    std::vector<Node> gen;
    gen.reserve(n_initial);
    std::vector<std::size_t> idx(dim, 0);
    for (std::size_t c = 0; c < n_initial; ++c) {
      Node node;
      for (std::size_t a = 0; a < dim; ++a) {
        const double w = (domain.hi[a] - domain.lo[a]) / static_cast<double>(per_axis);
        node.h[a] = 0.5 * w;
        node.c[a] = domain.lo[a] + (static_cast<double>(idx[a]) + 0.5) * w;
      }
      if (evals_ + field_.size() <= budget_) {
        evaluate(node, field_.data(), field_.size());
        gen.push_back(std::move(node));
      } else {
        open_max_ = kInf;
        exhausted_ = true;
      }
      for (std::size_t a = dim; a-- > 0;) {
        if (++idx[a] < per_axis) break;
        idx[a] = 0;
      }
    }

    // Breadth-first generations while the frontier is small.
    std::vector<Node> next;
    while (!gen.empty()) {
      next.clear();
      std::size_t total_doubles = 0;
      for (Node& node : gen) {
        if (node.upper <= lower_ + tol_) {
          closed_max_ = std::max(closed_max_, node.upper);
          continue;
        }
        auto children = split(node);
        if (!children) continue;
        for (Node& child : *children) {
          total_doubles += child.n_recs * rec_;
          next.push_back(std::move(child));
        }
      }
      gen.swap(next);
      if (gen.size() > kSwitchCells || total_doubles > kSwitchRecordDoubles) break;
    }

    // Depth-first over what is left, most promising cells first. The
    // breadth-first phase runs long enough that the cell holding the maximum
    // usually sorts near the front; a late find costs several times more.
    std::stable_sort(gen.begin(), gen.end(),
                     [](const Node& a, const Node& b) { return a.value > b.value; });
    std::vector<Node> stack;
    for (Node& root : gen) {
      stack.push_back(std::move(root));
      while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();
        if (node.upper <= lower_ + tol_) {
          closed_max_ = std::max(closed_max_, node.upper);
          continue;
        }
        auto children = split(node);
        if (!children) continue;
        auto& [first, second] = *children;
        if (first.value > second.value) {
          stack.push_back(std::move(second));
          stack.push_back(std::move(first));
        } else {
          stack.push_back(std::move(first));
          stack.push_back(std::move(second));
        }
      }
    }

    out.lower = lower_;
    out.upper = std::max({closed_max_, open_max_, lower_});
    out.evaluations = evals_;
    if (exhausted_ || out.upper - out.lower > tol_) out.status = RadiusStatus::kBudgetExhausted;
    return out;
  }

 private:
  struct Node {
    std::array<double, kMaxCoverageDim> c{};
    std::array<double, kMaxCoverageDim> h{};
    double upper = kInf;
    double value = 0.0;  // field value at the centre
    double speed = 0.0;
    // Candidate records, rec_ doubles each.
    std::unique_ptr<double[]> recs;
    std::size_t n_recs = 0;
  };

  void copy_record(const double* src, double* dst) const {
    switch (rec_) {
      case 1: dst[0] = src[0]; break;
      case 3: dst[0] = src[0]; dst[1] = src[1]; dst[2] = src[2]; break;
      default: std::copy_n(src, rec_, dst);
    }
  }

  void evaluate(Node& node, const double* parent, std::size_t n) {
    const std::size_t dim = field_.dim();
    detail::CellGeom g;
    g.center = node.c.data();
    g.half = node.h.data();
    g.dim = dim;
    double hh = 0.0;
    for (std::size_t a = 0; a + 1 < dim; ++a) hh += node.h[a] * node.h[a];
    const double ht = node.h[dim - 1];
    g.half_norm_h = std::sqrt(hh);
    g.half_norm = std::sqrt(hh + ht * ht);
    g.half_t = ht;
    if constexpr (!Field::kHasTimeAxis) {
      g.half_norm_h = g.half_norm;
      g.half_t = 0.0;
    }

    vals_.resize(n);
    vars_.resize(n);
    double center_min = kInf;
    double upper = kInf;
    double best_speed = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      double v = 0.0;
      double var = 0.0;
      double sp = 0.0;
      field_.bound(parent + j * rec_, g, v, var, sp);
      v *= scale_;
      var *= scale_;
      vals_[j] = v;
      vars_[j] = var;
      center_min = std::min(center_min, v);
      if (v + var < upper) {
        upper = v + var;
        best_speed = sp;
      }
    }
    node.recs = std::make_unique_for_overwrite<double[]>(n * rec_);
    double* out = node.recs.get();
    // The split rule weighs the time axis by the speed of the trajectory that
    // currently gives the cell's upper bound.
    node.speed = best_speed;
    for (std::size_t j = 0; j < n; ++j) {
      if (vals_[j] - vars_[j] <= upper) {
        copy_record(parent + j * rec_, out);
        out += rec_;
      }
    }
    node.n_recs = static_cast<std::size_t>(out - node.recs.get()) / rec_;
    node.upper = upper;
    node.value = center_min;
    lower_ = std::max(lower_, center_min);
    evals_ += n;
  }

  // Bisects the axis with the largest Lipschitz-weighted half width (ties go
  // to the lowest axis) and evaluates both halves. Returns nullopt and records
  // the node as open when the budget or floating-point resolution is spent.
  std::optional<std::array<Node, 2>> split(Node& node) {
    const std::size_t dim = field_.dim();
    std::size_t axis = 0;
    double best = -1.0;
    for (std::size_t a = 0; a < dim; ++a) {
      double w = node.h[a];
      if constexpr (Field::kHasTimeAxis) {
        if (a == dim - 1) w *= node.speed;
      }
      if (w > best) {
        best = w;
        axis = a;
      }
    }
    const double q = 0.5 * node.h[axis];
    const bool resolvable = node.c[axis] - q < node.c[axis] && node.c[axis] + q > node.c[axis];
    if (evals_ + 2 * node.n_recs > budget_ || !resolvable) {
      open_max_ = std::max(open_max_, node.upper);
      exhausted_ = true;
      return std::nullopt;
    }
    std::array<Node, 2> kids;
    for (int s = 0; s < 2; ++s) {
      kids[s].c = node.c;
      kids[s].h = node.h;
      kids[s].h[axis] = q;
      kids[s].c[axis] = node.c[axis] + (s == 0 ? -q : q);
      evaluate(kids[s], node.recs.get(), node.n_recs);
    }
    node.recs.reset();
    node.n_recs = 0;
    return kids;
  }

  const Field& field_;
  double scale_;
  double tol_;
  std::uint64_t budget_;
  double lower_ = -kInf;
  double closed_max_ = -kInf;
  double open_max_ = -kInf;
  bool exhausted_ = false;
  std::uint64_t evals_ = 0;
  std::size_t rec_ = 1;
  std::vector<double> vals_;
  std::vector<double> vars_;
};

// Uniform grid over a region whose leaves list every trajectory that can
// come within r of some point of the leaf.
template <class Field>
class CoverIndex {
 public:
  CoverIndex(const Field& field, const Box& region, double r)
      : field_(field), region_(region), r_(r), dim_(field.dim()) {
    const std::size_t max_levels = std::max<std::size_t>(1, 16 / dim_);
    std::size_t levels = max_levels;
    if (r > 0.0) {
      double extent = 0.0;
      for (std::size_t a = 0; a < dim_; ++a) extent = std::max(extent, region.hi[a] - region.lo[a]);
      const double want = std::ceil(std::log2(std::max(1.0, extent / (4.0 * r))));
      levels = std::min(max_levels, static_cast<std::size_t>(want));
    }
    per_axis_ = std::size_t{1} << levels;
    std::size_t n_leaves = 1;
    for (std::size_t a = 0; a < dim_; ++a) n_leaves *= per_axis_;
    leaves_.resize(n_leaves);
    std::vector<std::uint32_t> all(field.size());
    std::iota(all.begin(), all.end(), 0U);
    std::array<std::size_t, kMaxCoverageDim> origin{};
    build(all, origin, per_axis_);
  }

  bool covered(const double* x) const { return count(x, true) > 0; }

  std::size_t count(const double* x, bool stop_at_first) const {
    std::size_t leaf = 0;
    for (std::size_t a = 0; a < dim_; ++a) {
      const double u = (x[a] - region_.lo[a]) / (region_.hi[a] - region_.lo[a]);
      const auto j = static_cast<std::size_t>(
          std::clamp(u * static_cast<double>(per_axis_), 0.0, static_cast<double>(per_axis_ - 1)));
      leaf = leaf * per_axis_ + j;
    }
    std::size_t hits = 0;
    for (std::uint32_t i : leaves_[leaf]) {
      if (field_.value(i, x) <= r_) {
        ++hits;
        if (stop_at_first) return hits;
      }
    }
    return hits;
  }

 private:
  void build(const std::vector<std::uint32_t>& cands,
             const std::array<std::size_t, kMaxCoverageDim>& origin, std::size_t width) {
    std::array<double, kMaxCoverageDim> c{};
    std::array<double, kMaxCoverageDim> h{};
    double hh = 0.0;
    for (std::size_t a = 0; a < dim_; ++a) {
      const double cell = (region_.hi[a] - region_.lo[a]) / static_cast<double>(per_axis_);
      h[a] = 0.5 * cell * static_cast<double>(width);
      c[a] = region_.lo[a] + cell * static_cast<double>(origin[a]) + h[a];
      if (a + 1 < dim_) hh += h[a] * h[a];
    }
    detail::CellGeom g;
    g.center = c.data();
    g.half = h.data();
    g.dim = dim_;
    g.half_norm_h = std::sqrt(hh);
    g.half_norm = std::sqrt(hh + h[dim_ - 1] * h[dim_ - 1]);
    g.half_t = h[dim_ - 1];
    if constexpr (!Field::kHasTimeAxis) {
      g.half_norm_h = g.half_norm;
      g.half_t = 0.0;
    }
    std::vector<std::uint32_t> kept;
    for (std::uint32_t i : cands) {
      double v = 0.0;
      double var = 0.0;
      double sp = 0.0;
      field_.bound(field_.record(i), g, v, var, sp);
      if (v - var <= r_) kept.push_back(i);
    }
    if (width == 1) {
      std::size_t leaf = 0;
      for (std::size_t a = 0; a < dim_; ++a) leaf = leaf * per_axis_ + origin[a];
      leaves_[leaf] = std::move(kept);
      return;
    }
    const std::size_t half_width = width / 2;
    for (std::size_t mask = 0; mask < (std::size_t{1} << dim_); ++mask) {
      std::array<std::size_t, kMaxCoverageDim> o = origin;
      for (std::size_t a = 0; a < dim_; ++a) {
        if ((mask >> a) & 1U) o[a] += half_width;
      }
      build(kept, o, half_width);
    }
  }

  const Field& field_;
  const Box& region_;
  double r_;
  std::size_t dim_;
  std::size_t per_axis_ = 1;
  std::vector<std::vector<std::uint32_t>> leaves_;
};

template <class Field>
VolumeEstimate estimate_uncovered(const Field& field, const Box& region, double r,
                                  std::size_t n_points, const SeedSpec& seed) {
  const double vol = region.volume();
  VolumeEstimate out;
  out.n_points = n_points;
  if (field.size() == 0) {
    out.estimate = vol;
    return out;
  }
  CoverIndex<Field> index(field, region, r);
  StreamRng rng(seed, Substream::kQueryPoints);
  std::array<double, kMaxCoverageDim> x{};
  std::size_t uncovered = 0;
  for (std::size_t p = 0; p < n_points; ++p) {
    for (std::size_t a = 0; a < region.dim(); ++a) {
      x[a] = region.lo[a] + (region.hi[a] - region.lo[a]) * rng.uniform();
    }
    if (!index.covered(x.data())) ++uncovered;
  }
  const double n = static_cast<double>(n_points);
  const double frac = static_cast<double>(uncovered) / n;
  out.estimate = vol * frac;
  out.std_error = vol * std::sqrt(frac * (1.0 - frac) / n);
  return out;
}

}  // namespace
}  // namespace detail

namespace {

void check_point(std::size_t d, const PointD& x) {
  if (x.dim() != d) throw std::invalid_argument("point dimension mismatch");
}

void check_coverage_dim(std::size_t d) {
  if (d < 2 || d > kMaxCoverageDim) {
    throw std::invalid_argument("coverage queries support 2 <= d <= " +
                                std::to_string(kMaxCoverageDim));
  }
}

void check_tol(double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
}

void check_region(std::size_t d, const Box& region) {
  if (region.dim() != d || region.hi.size() != d) {
    throw std::invalid_argument("region dimension mismatch");
  }
  for (std::size_t a = 0; a < d; ++a) {
    if (!(region.lo[a] >= 0.0 && region.hi[a] <= 1.0 && region.lo[a] < region.hi[a])) {
      throw std::invalid_argument("region must be a nonempty box inside the unit cube");
    }
  }
}

void require_vertical(const LineModelSample& sample) {
  for (const LineRay& ray : sample.rays) {
    if (ray.dir.vertical() == 0.0) throw ZeroVerticalComponent();
  }
}

double horizontal_distance(const LineRay& ray, const PointD& x) {
  const std::size_t k = ray.base.dim();
  const double scale = x.height() / ray.dir.vertical();
  double s = 0.0;
  for (std::size_t a = 0; a < k; ++a) {
    const double u = x[a] - ray.base[a] - scale * ray.dir[a];
    s += u * u;
  }
  return std::sqrt(s);
}

double path_distance(const BrownianPath& path, const PointD& x) {
  const std::vector<double> pos = path.position(x.height());
  double s = 0.0;
  for (std::size_t a = 0; a < pos.size(); ++a) {
    const double u = x[a] - pos[a];
    s += u * u;
  }
  return std::sqrt(s);
}

// Calls visit(distance) for every trajectory, stopping early when it returns
// false.
template <class Visit>
void for_each_distance(const LineModelSample& sample, DilationKind kind, const PointD& x,
                       Visit&& visit) {
  check_point(sample.d, x);
  if (kind == DilationKind::kBaseDisk) require_vertical(sample);
  for (const LineRay& ray : sample.rays) {
    const double dist = kind == DilationKind::kFullBall ? point_ray_distance(x, ray)
                                                        : horizontal_distance(ray, x);
    if (!visit(dist)) return;
  }
}

template <class Visit>
void for_each_distance(const BrownianModelSample& sample, DilationKind kind, const PointD& x,
                       Visit&& visit) {
  check_point(sample.d, x);
  if (kind == DilationKind::kFullBall) {
    throw UnsupportedCombination("Brownian samples support only the base-disk dilation");
  }
  for (const BrownianPath& path : sample.paths) {
    if (!visit(path_distance(path, x))) return;
  }
}

template <class Sample>
double min_distance_impl(const Sample& sample, DilationKind kind, const PointD& x) {
  double best = std::numeric_limits<double>::infinity();
  for_each_distance(sample, kind, x, [&](double dist) {
    best = std::min(best, dist);
    return true;
  });
  return best;
}

template <class Sample>
bool covers_impl(const Sample& sample, const DilationSpec& dil, const PointD& x) {
  if (dil.r < 0.0) throw std::invalid_argument("dilation radius must be nonnegative");
  bool hit = false;
  for_each_distance(sample, dil.kind, x, [&](double dist) {
    hit = dist <= dil.r;
    return !hit;
  });
  return hit;
}

template <class Sample>
std::size_t count_impl(const Sample& sample, const DilationSpec& dil, const PointD& x) {
  if (dil.r < 0.0) throw std::invalid_argument("dilation radius must be nonnegative");
  std::size_t hits = 0;
  for_each_distance(sample, dil.kind, x, [&](double dist) {
    if (dist <= dil.r) ++hits;
    return true;
  });
  return hits;
}

}  // namespace

Box Box::unit(std::size_t d) { return Box{std::vector<double>(d, 0.0), std::vector<double>(d, 1.0)}; }

double Box::volume() const {
  double v = 1.0;
  for (std::size_t a = 0; a < lo.size(); ++a) v *= hi[a] - lo[a];
  return v;
}

bool Box::contains(std::span<const double> x) const {
  if (x.size() != lo.size()) return false;
  for (std::size_t a = 0; a < lo.size(); ++a) {
    if (x[a] < lo[a] || x[a] > hi[a]) return false;
  }
  return true;
}

double min_distance(const LineModelSample& sample, DilationKind kind, const PointD& x) {
  return min_distance_impl(sample, kind, x);
}
double min_distance(const BrownianModelSample& sample, DilationKind kind, const PointD& x) {
  return min_distance_impl(sample, kind, x);
}

bool covers_point(const LineModelSample& sample, const DilationSpec& dilation, const PointD& x) {
  return covers_impl(sample, dilation, x);
}
bool covers_point(const BrownianModelSample& sample, const DilationSpec& dilation,
                  const PointD& x) {
  return covers_impl(sample, dilation, x);
}

std::size_t cover_count(const LineModelSample& sample, const DilationSpec& dilation,
                        const PointD& x) {
  return count_impl(sample, dilation, x);
}
std::size_t cover_count(const BrownianModelSample& sample, const DilationSpec& dilation,
                        const PointD& x) {
  return count_impl(sample, dilation, x);
}

CertifiedRadius coverage_radius(const LineModelSample& sample, DilationKind kind, double tol,
                                std::uint64_t budget, const RadiusOptions& options) {
  check_coverage_dim(sample.d);
  check_tol(tol);
  const Box cube = Box::unit(sample.d);
  if (kind == DilationKind::kFullBall) {
    detail::LineBallField field(sample);
    return detail::BranchAndBound(field, options.gauge_scale, tol, budget)
        .run(cube, options.initial_cells_per_axis);
  }
  detail::LineDiskField field(sample);
  return detail::BranchAndBound(field, options.gauge_scale, tol, budget)
      .run(cube, options.initial_cells_per_axis);
}

CertifiedRadius coverage_radius(const BrownianModelSample& sample, DilationKind kind,
                                double tol, std::uint64_t budget, const RadiusOptions& options) {
  check_coverage_dim(sample.d);
  check_tol(tol);
  if (kind == DilationKind::kFullBall) {
    throw UnsupportedCombination("Brownian samples support only the base-disk dilation");
  }
  detail::BrownianDiskField field(sample);
  return detail::BranchAndBound(field, options.gauge_scale, tol, budget)
      .run(Box::unit(sample.d), options.initial_cells_per_axis);
}

VolumeEstimate uncovered_volume_estimate(const LineModelSample& sample,
                                         const DilationSpec& dilation, const Box& region,
                                         std::size_t n_points, const SeedSpec& seed) {
  check_coverage_dim(sample.d);
  check_region(sample.d, region);
  if (n_points < 1) throw std::invalid_argument("n_points must be >= 1");
  if (dilation.r < 0.0) throw std::invalid_argument("dilation radius must be nonnegative");
  if (dilation.kind == DilationKind::kFullBall) {
    return detail::estimate_uncovered(detail::LineBallField(sample), region, dilation.r,
                                      n_points, seed);
  }
  return detail::estimate_uncovered(detail::LineDiskField(sample), region, dilation.r,
                                    n_points, seed);
}

VolumeEstimate uncovered_volume_estimate(const BrownianModelSample& sample,
                                         const DilationSpec& dilation, const Box& region,
                                         std::size_t n_points, const SeedSpec& seed) {
  check_coverage_dim(sample.d);
  check_region(sample.d, region);
  if (n_points < 1) throw std::invalid_argument("n_points must be >= 1");
  if (dilation.r < 0.0) throw std::invalid_argument("dilation radius must be nonnegative");
  if (dilation.kind == DilationKind::kFullBall) {
    throw UnsupportedCombination("Brownian samples support only the base-disk dilation");
  }
  return detail::estimate_uncovered(detail::BrownianDiskField(sample), region, dilation.r,
                                    n_points, seed);
}

CertifiedRadius slice_coverage_radius(const LineModelSample& sample, double t, double shrink,
                                      double tol, std::uint64_t budget) {
  check_coverage_dim(sample.d);
  check_tol(tol);
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("slice height must lie in [0,1]");
  if (!(shrink >= 0.0 && shrink < 0.5)) throw std::invalid_argument("shrink must lie in [0,1/2)");
  const std::size_t k = sample.d - 1;
  std::vector<double> points;
  points.reserve(sample.rays.size() * k);
  for (const LineRay& ray : sample.rays) {
    const std::vector<double> p = horizontal_position(ray, t);
    points.insert(points.end(), p.begin(), p.end());
  }
  detail::PointField field(k, std::move(points));
  Box domain{std::vector<double>(k, shrink), std::vector<double>(k, 1.0 - shrink)};
  return detail::BranchAndBound(field, 1.0, tol, budget).run(domain, 9);
}

}  // namespace cylcover
