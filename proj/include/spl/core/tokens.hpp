#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <string>

namespace spl {

/// Storage capacity for common suits. The active count comes from
/// GameParams::token_types; unused entries stay zero.
inline constexpr int kMaxSuits = 7;

/// Per-suit token counts plus a joker count.
struct TokenVector {
  std::array<std::int16_t, kMaxSuits> suit{};
  std::int16_t joker = 0;

  int total() const noexcept {
    return std::accumulate(suit.begin(), suit.end(), 0) + joker;
  }

  bool any_negative() const noexcept {
    for (auto s : suit)
      if (s < 0) return true;
    return joker < 0;
  }

  /// Entry-wise <=.
  bool within(const TokenVector& other) const noexcept {
    for (int i = 0; i < kMaxSuits; ++i)
      if (suit[i] > other.suit[i]) return false;
    return joker <= other.joker;
  }

  bool is_zero() const noexcept { return total() == 0 && !any_negative(); }

  TokenVector& operator+=(const TokenVector& o) noexcept {
    for (int i = 0; i < kMaxSuits; ++i) suit[i] += o.suit[i];
    joker += o.joker;
    return *this;
  }
  TokenVector& operator-=(const TokenVector& o) noexcept {
    for (int i = 0; i < kMaxSuits; ++i) suit[i] -= o.suit[i];
    joker -= o.joker;
    return *this;
  }
  friend TokenVector operator+(TokenVector a, const TokenVector& b) noexcept { return a += b; }
  friend TokenVector operator-(TokenVector a, const TokenVector& b) noexcept { return a -= b; }

  bool operator==(const TokenVector&) const = default;
};

/// Compact text form, e.g. "[1,0,2,0,0|j1]", listing `suits` entries.
std::string to_string(const TokenVector& v, int suits = 5);

}  // namespace spl
