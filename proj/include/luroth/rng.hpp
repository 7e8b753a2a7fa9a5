#pragma once

#include <cstdint>
#include <random>

namespace luroth {

/// SplitMix64 step; used only to key substreams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic 64-bit key for (seed, stream); stream 0, 1, 2, ... give
/// independent substreams of one master seed.
inline std::uint64_t derive_stream_key(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
  splitmix64(s);
  return splitmix64(s);
}

/// Seeded substream built on the standardized mt19937_64, so identical
/// (seed, stream) pairs give bit-identical sequences on every platform.
/// Uniform doubles are produced by explicit bit manipulation rather than
/// std::uniform_real_distribution (whose output is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : engine_(derive_stream_key(seed, stream)) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform draw in the open interval (0,1): ((x >> 11) + 0.5) * 2^-53.
  double unit_open() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Uniform integer in [lo, hi]; span is tiny in all uses here, so plain
  /// modulo reduction is fine (and keeps the stream layout obvious).
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace luroth
