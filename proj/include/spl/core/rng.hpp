#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <utility>

namespace spl {

/// SplitMix64 generator: 64 bits of state, cheap to copy, so it can live
/// inside a game state. Satisfies UniformRandomBitGenerator.
///
/// Bounded draws use Lemire's multiply-shift rather than the standard
/// distributions so sequences are identical across standard libraries.
class Rng {
 public:
  using result_type = std::uint64_t;

  constexpr explicit Rng(std::uint64_t seed = 0) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  constexpr result_type operator()() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, n); n must be positive.
  std::uint32_t below(std::uint32_t n) noexcept {
    return static_cast<std::uint32_t>(
        (static_cast<unsigned __int128>((*this)()) * n) >> 64);
  }

  /// Uniform double in [0, 1).
  double uniform() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) noexcept { return uniform() < p; }

  /// Independent child stream.
  Rng split() noexcept { return Rng((*this)() ^ 0x5851f42d4c957f2dULL); }

  constexpr std::uint64_t state() const noexcept { return state_; }

  bool operator==(const Rng&) const = default;

 private:
  std::uint64_t state_;
};

/// Fisher-Yates shuffle driven by Rng::below.
template <typename T, std::size_t Extent>
void shuffle(std::span<T, Extent> items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = rng.below(static_cast<std::uint32_t>(i));
    std::swap(items[i - 1], items[j]);
  }
}

/// Stateless 64-bit mix, used to derive per-game and per-seat seeds.
constexpr std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) noexcept {
  Rng r(a ^ (b * 0xd1b54a32d192ed03ULL));
  r();
  return r();
}

}  // namespace spl
