#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "implang/error.hpp"

namespace implang {

// 64-bit linear congruential generator with a fixed multiplier/increment.
// Each step emits the high 32 bits of the new state. Every random decision
// in the toolkit goes through this type so that outputs are bit-exact across
// platforms and standard library implementations.
class Prng {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

  constexpr explicit Prng(std::uint64_t state = 0) noexcept : state_(state) {}

  constexpr std::uint64_t state() const noexcept { return state_; }

  constexpr std::uint32_t next() noexcept {
    state_ = kMultiplier * state_ + kIncrement;
    return static_cast<std::uint32_t>(state_ >> 32);
  }

  // Uniform-ish draw in [0, bound). Uses plain modulo reduction; the bias is
  // negligible for the bounds used here (sentence lengths and counts far
  // below 2^32).
  std::uint32_t bounded(std::uint64_t bound) {
    if (bound == 0) throw Error("Prng::bounded: bound must be positive");
    return static_cast<std::uint32_t>(next() % bound);
  }

  friend constexpr bool operator==(const Prng&, const Prng&) = default;

 private:
  std::uint64_t state_;
};

// Stream tags used as the second seeding coordinate.
enum class Stream : std::uint64_t {
  kShuffleGlobal = 0,
  kRevPosition = 1,
  kSubset = 2,
};

// Derives an independent generator from a global seed and two coordinates.
// The generator is advanced once before it is returned.
constexpr Prng seed_for(std::uint64_t global_seed, std::uint64_t a,
                        std::uint64_t b) noexcept {
  const std::uint64_t init = global_seed ^ (a * 0x9E3779B97F4A7C15ULL) ^
                             (b * 0xBF58476D1CE4E5B9ULL);
  Prng prng(init);
  prng.next();
  return prng;
}

// Functional form: returns the advanced generator and the draw.
inline std::pair<Prng, std::uint32_t> bounded(Prng prng, std::uint64_t bound) {
  const std::uint32_t value = prng.bounded(bound);
  return {prng, value};
}

// In-place Fisher-Yates: for i = n-1 down to 1, swap i with bounded(i+1).
template <typename T>
void fisher_yates(std::vector<T>& items, Prng& prng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = prng.bounded(i);
    using std::swap;
    swap(items[i - 1], items[j]);
  }
}

}  // namespace implang
