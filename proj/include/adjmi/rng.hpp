#pragma once

#include <cstdint>
#include <random>

namespace adjmi {

struct RngSeed {
  std::uint64_t value = 0;
};

// SplitMix64 finalizer; used to derive substream seeds.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed of substream `index` of `seed`. Nest calls for multi-level indices,
// e.g. substream(substream(seed, run), trial).
constexpr RngSeed substream(RngSeed seed, std::uint64_t index) noexcept {
  return RngSeed{mix64(mix64(seed.value) ^ mix64(index + 0x632be59bd9b4e019ULL))};
}

// mt19937_64 with platform-independent derived draws. The standard
// distributions are implementation-defined, so they are not used here.
class Rng {
 public:
  explicit Rng(RngSeed seed) : engine_(seed.value) {}

  std::uint64_t next() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform integer on [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace adjmi
