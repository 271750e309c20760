#include "spl/core/tokens.hpp"

namespace spl {

std::string to_string(const TokenVector& v, int suits) {
  std::string out = "[";
  for (int i = 0; i < suits && i < kMaxSuits; ++i) {
    if (i) out += ',';
    out += std::to_string(v.suit[i]);
  }
  out += "|j" + std::to_string(v.joker) + "]";
  return out;
}

}  // namespace spl
