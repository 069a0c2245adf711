#pragma once

#include <cstdint>

namespace anticonc {

// Philox4x32-10 counter-based generator (Salmon, Moraes, Dror, Shaw 2011).
// Stateless: every 128-bit counter/64-bit key pair maps to 128 independent
// output bits, so draw j of a Monte Carlo run can read its own substream
// without coordination between workers.
struct PhiloxBlock {
  std::uint32_t x[4];
};

inline PhiloxBlock philox4x32(std::uint32_t c0, std::uint32_t c1,
                              std::uint32_t c2, std::uint32_t c3,
                              std::uint32_t k0, std::uint32_t k1) {
  constexpr std::uint32_t kMulA = 0xD2511F53u;
  constexpr std::uint32_t kMulB = 0xCD9E8D57u;
  constexpr std::uint32_t kWeylA = 0x9E3779B9u;
  constexpr std::uint32_t kWeylB = 0xBB67AE85u;
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kMulA) * c0;
    const std::uint64_t p1 = static_cast<std::uint64_t>(kMulB) * c2;
    const auto lo0 = static_cast<std::uint32_t>(p0);
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const auto lo1 = static_cast<std::uint32_t>(p1);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const std::uint32_t n0 = hi1 ^ c1 ^ k0;
    const std::uint32_t n1 = lo1;
    const std::uint32_t n2 = hi0 ^ c3 ^ k1;
    const std::uint32_t n3 = lo0;
    c0 = n0;
    c1 = n1;
    c2 = n2;
    c3 = n3;
    if (round < 9) {
      k0 += kWeylA;
      k1 += kWeylB;
    }
  }
  return PhiloxBlock{{c0, c1, c2, c3}};
}

// Uniform doubles on the open interval (0, 1) indexed by
// (seed, stream, index): index 2b and 2b+1 come from block b of the stream.
// Each Monte Carlo draw uses its draw index as `stream`, which makes the
// output independent of scheduling and worker count.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : k0_(static_cast<std::uint32_t>(seed)),
        k1_(static_cast<std::uint32_t>(seed >> 32)),
        s0_(static_cast<std::uint32_t>(stream)),
        s1_(static_cast<std::uint32_t>(stream >> 32)) {}

  std::uint64_t bits_at(std::uint64_t index) const {
    const PhiloxBlock b =
        philox4x32(s0_, s1_, static_cast<std::uint32_t>(index >> 1),
                   static_cast<std::uint32_t>(index >> 33), k0_, k1_);
    const int half = static_cast<int>(index & 1u) * 2;
    return (static_cast<std::uint64_t>(b.x[half + 1]) << 32) | b.x[half];
  }

  // (0, 1): 53-bit mantissa uniform offset by half a spacing so the
  // endpoints are unreachable (safe input for the normal quantile).
  double uniform_at(std::uint64_t index) const {
    return static_cast<double>(bits_at(index) >> 11) * 0x1.0p-53 + 0x1.0p-54;
  }

 private:
  std::uint32_t k0_, k1_, s0_, s1_;
};

// 64-bit mixer (splitmix64 finalizer); used to derive independent
// sub-seeds for nested estimators from a master seed and context words.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
  return mix64(mix64(a) ^ b);
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return mix64(mix64(a, b) ^ c);
}

}  // namespace anticonc
