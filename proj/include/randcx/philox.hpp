#pragma once

#include <array>
#include <cstdint>

namespace randcx {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11): a keyed
// bijection of a 128-bit counter. Stateless, so any draw can be addressed
// directly by (key, counter).
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static constexpr Counter apply(Counter ctr, Key key) {
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += kWeyl0;
        key[1] += kWeyl1;
      }
      const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
      const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
      ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
             static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
    }
    return ctr;
  }

  static constexpr Key key_from(std::uint64_t seed) {
    return {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  }

 private:
  static constexpr std::uint32_t kMul0 = 0xD2511F53;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85;
};

// Uniform double in [0, 1) from the first 53 bits of philox(key, index, stream).
inline double uniform_at(std::uint64_t seed, std::uint64_t index, std::uint32_t stream) {
  const auto out = Philox4x32::apply(
      {static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), stream, 0}, Philox4x32::key_from(seed));
  const std::uint64_t bits = (std::uint64_t{out[0]} << 32 | out[1]) >> 11;
  return static_cast<double>(bits) * 0x1.0p-53;
}

// 64-bit value addressed by (seed, index, stream).
inline std::uint64_t bits_at(std::uint64_t seed, std::uint64_t index, std::uint32_t stream) {
  const auto out = Philox4x32::apply(
      {static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), stream, 0}, Philox4x32::key_from(seed));
  return std::uint64_t{out[0]} << 32 | out[1];
}

}  // namespace randcx
