#include "tauclock/rng.hpp"

#include <cmath>
#include <numbers>

namespace tauclock {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                    std::uint32_t& lo) {
  const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(product >> 32);
  lo = static_cast<std::uint32_t>(product);
}

inline std::array<std::uint32_t, 4> round_once(
    const std::array<std::uint32_t, 4>& ctr,
    const std::array<std::uint32_t, 2>& key) {
  std::uint32_t hi0, lo0, hi1, lo1;
  mulhilo(kPhiloxM0, ctr[0], hi0, lo0);
  mulhilo(kPhiloxM1, ctr[2], hi1, lo1);
  return {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32_10(
    const std::array<std::uint32_t, 4>& counter,
    const std::array<std::uint32_t, 2>& key) {
  std::array<std::uint32_t, 4> state = counter;
  std::array<std::uint32_t, 2> round_key = key;
  state = round_once(state, round_key);
  for (int round = 1; round < 10; ++round) {
    round_key[0] += kWeyl0;
    round_key[1] += kWeyl1;
    state = round_once(state, round_key);
  }
  return state;
}

std::array<std::uint32_t, 4> PhiloxStream::block(std::uint64_t index) const {
  const std::array<std::uint32_t, 4> counter = {
      static_cast<std::uint32_t>(index),
      static_cast<std::uint32_t>(index >> 32),
      static_cast<std::uint32_t>(stream_),
      static_cast<std::uint32_t>(stream_ >> 32),
  };
  const std::array<std::uint32_t, 2> key = {
      static_cast<std::uint32_t>(seed_),
      static_cast<std::uint32_t>(seed_ >> 32),
  };
  return philox4x32_10(counter, key);
}

double uniform_from_bits(std::uint32_t hi, std::uint32_t lo) {
  // 27 + 26 = 53 bits; the half-bit offset keeps the value strictly
  // inside (0, 1).
  const double mantissa =
      static_cast<double>(hi >> 5) * 67108864.0 +  // 2^26
      static_cast<double>(lo >> 6) + 0.5;
  return mantissa * 0x1.0p-53;
}

std::pair<double, double> PhiloxStream::uniform_pair(std::uint64_t index) const {
  const auto words = block(index);
  return {uniform_from_bits(words[0], words[1]),
          uniform_from_bits(words[2], words[3])};
}

std::pair<double, double> PhiloxStream::normal_pair(std::uint64_t index) const {
  const auto [u1, u2] = uniform_pair(index);
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

}  // namespace tauclock
