#ifndef CYLCOVER_RNG_HPP_
#define CYLCOVER_RNG_HPP_

#include <cstdint>
#include <random>

namespace cylcover {

// Identifies one independent random stream: replication i of an experiment
// uses stream_index i under the experiment's master seed.
struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_index = 0;

  friend bool operator==(const SeedSpec&, const SeedSpec&) = default;
};

// Purpose tags separating the sub-streams drawn from one SeedSpec, so that
// e.g. the base points of a line sample do not depend on its directions.
enum class Substream : std::uint64_t {
  kBasePoints = 1,
  kDirections = 2,
  kIncrements = 3,
  kMonteCarlo = 4,
  kQueryPoints = 5,
};

// Stateless 64-bit mixer (SplitMix64 finalizer).
std::uint64_t mix64(std::uint64_t x);

// Deterministic engine keyed by (master_seed, stream_index, substream). The
// key is hashed counter-style, so any stream can be built independently of
// every other without advancing a shared generator.
class StreamRng {
 public:
  StreamRng(const SeedSpec& seed, Substream tag);

  std::mt19937_64& engine() { return engine_; }
  double uniform() { return uniform_(engine_); }
  double normal() { return normal_(engine_); }

 private:
  std::mt19937_64 engine_;
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace cylcover

#endif  // CYLCOVER_RNG_HPP_
