#include "cylcover/rng.hpp"

namespace cylcover {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

namespace {

std::mt19937_64 make_engine(const SeedSpec& seed, Substream tag) {
  const std::uint64_t a = mix64(seed.master_seed);
  const std::uint64_t b = mix64(a ^ mix64(seed.stream_index + 0x632BE59BD9B4E019ULL));
  const std::uint64_t c = mix64(b ^ static_cast<std::uint64_t>(tag));
  std::seed_seq seq{static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(c >> 32),
                    static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

StreamRng::StreamRng(const SeedSpec& seed, Substream tag)
    : engine_(make_engine(seed, tag)) {}

}  // namespace cylcover
