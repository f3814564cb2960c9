// rng.hpp: counter-based random numbers (Philox4x32-10)
//
// Every draw is a pure function of (seed, stream, block index), so results
// are identical across platforms, thread counts, and evaluation order.
// Parallel shards of a Monte Carlo run partition the index space instead
// of sharing mutable generator state.
//
// Block layout: counter = {index_lo, index_hi, stream_lo, stream_hi},
// key = {seed_lo, seed_hi}.

#pragma once

#include <array>
#include <cstdint>
#include <utility>

namespace tauclock {

// One keyed bijection round set: 10 rounds, key schedule bumped by the
// Weyl constants between rounds.
std::array<std::uint32_t, 4> philox4x32_10(
    const std::array<std::uint32_t, 4>& counter,
    const std::array<std::uint32_t, 2>& key);

class PhiloxStream {
 public:
  PhiloxStream(std::uint64_t seed, std::uint64_t stream)
      : seed_(seed), stream_(stream) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  // Raw 128-bit block for the given counter index.
  std::array<std::uint32_t, 4> block(std::uint64_t index) const;

  // Two doubles in (0, 1], each built from 53 bits of one block half.
  // The smallest value is 0.5 * 2^-53 > 0, so logs are safe; the top of
  // the range is 1 - 2^-54, which rounds to 1.0 in double precision.
  std::pair<double, double> uniform_pair(std::uint64_t index) const;

  // Two independent standard normal variates (Box-Muller over one block).
  std::pair<double, double> normal_pair(std::uint64_t index) const;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
};

// Converts 53 random bits spread over two words into a double in (0, 1).
double uniform_from_bits(std::uint32_t hi, std::uint32_t lo);

}  // namespace tauclock
