#pragma once

#include <filesystem>
#include <memory>
#include <vector>

#include "spl/core/tokens.hpp"

namespace spl {

struct Card {
  int level = 1;  // 1..D
  int bonus = 0;  // suit index
  TokenVector price;
  int value = 0;
};

struct Noble {
  int value = 0;
  TokenVector requirement;
};

/// Immutable card and noble content. Shared between games.
struct ContentSet {
  std::vector<Card> cards;
  std::vector<Noble> nobles;
  int suits = 5;
  int levels = 3;

  int cards_in_level(int level) const;
};

using ContentPtr = std::shared_ptr<const ContentSet>;

/// Reads the cards CSV (`level,bonus,value,cost_suit0..`) and nobles CSV
/// (`value,req_suit0..`). The suit count is taken from the header.
/// Throws SetupError on malformed input.
ContentPtr load_content(const std::filesystem::path& cards_csv,
                        const std::filesystem::path& nobles_csv);

/// Loads `cards.csv` and `nobles.csv` from a directory.
ContentPtr load_content(const std::filesystem::path& dir);

/// Directory holding the bundled content, overridable with SPL_DATA_DIR.
std::filesystem::path default_data_dir();

/// The bundled 90-card / 10-noble set, loaded once.
ContentPtr default_content();

}  // namespace spl
