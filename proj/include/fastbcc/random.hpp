#pragma once

// Counter-based randomness. Every random choice in the library is a pure
// function of (seed, stream, index) through the SplitMix64 finalizer, so
// results do not depend on evaluation order or worker count.

#include <cstdint>

namespace fastbcc::rng {

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline constexpr std::uint64_t hash(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return splitmix64(splitmix64(seed ^ splitmix64(stream)) ^ index);
}

// Uniform double in [0, 1) with 53 random bits.
inline constexpr double to_unit(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

inline double uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return to_unit(hash(seed, stream, index));
}

// Sequential stream derived from a (seed, stream) pair.
class Stream {
 public:
  Stream(std::uint64_t seed, std::uint64_t stream) : state_(hash(seed, stream, 0)) {}
  std::uint64_t next() { return splitmix64(state_++); }
  double next_unit() { return to_unit(next()); }

 private:
  std::uint64_t state_;
};

}  // namespace fastbcc::rng
