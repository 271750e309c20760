#include "spl/core/content.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <string>

#include "spl/core/errors.hpp"

#ifndef SPL_DATA_DIR
#define SPL_DATA_DIR "data"
#endif

namespace spl {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
    out.push_back(cell);
  }
  return out;
}

int to_int(const std::string& s, const std::filesystem::path& file, int row) {
  char* end = nullptr;
  long v = std::strtol(s.c_str(), &end, 10);
  if (s.empty() || *end != '\0' || v < 0)
    throw SetupError(file.string() + ": row " + std::to_string(row) +
                     ": expected a non-negative integer, got '" + s + "'");
  return static_cast<int>(v);
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<int>> rows;
};

Table read_csv(const std::filesystem::path& file, std::size_t fixed_columns,
               const std::string& suit_prefix) {
  std::ifstream in(file);
  if (!in) throw SetupError("cannot open " + file.string());
  Table t;
  std::string line;
  if (!std::getline(in, line)) throw SetupError(file.string() + ": empty file");
  t.header = split(line);
  if (t.header.size() <= fixed_columns)
    throw SetupError(file.string() + ": header has no suit columns");
  for (std::size_t i = fixed_columns; i < t.header.size(); ++i) {
    if (t.header[i] != suit_prefix + std::to_string(i - fixed_columns))
      throw SetupError(file.string() + ": unexpected column '" + t.header[i] + "'");
  }
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || line == "\r") continue;
    auto cells = split(line);
    if (cells.size() != t.header.size())
      throw SetupError(file.string() + ": row " + std::to_string(row) +
                       " has " + std::to_string(cells.size()) + " cells");
    std::vector<int> vals;
    for (auto& c : cells) vals.push_back(to_int(c, file, row));
    t.rows.push_back(std::move(vals));
  }
  return t;
}

}  // namespace

int ContentSet::cards_in_level(int level) const {
  int n = 0;
  for (const auto& c : cards) n += c.level == level;
  return n;
}

ContentPtr load_content(const std::filesystem::path& cards_csv,
                        const std::filesystem::path& nobles_csv) {
  auto content = std::make_shared<ContentSet>();

  Table cards = read_csv(cards_csv, 3, "cost_suit");
  if (cards.header[0] != "level" || cards.header[1] != "bonus" || cards.header[2] != "value")
    throw SetupError(cards_csv.string() + ": header must start with level,bonus,value");
  int suits = static_cast<int>(cards.header.size()) - 3;
  if (suits > kMaxSuits) throw SetupError("too many suits in " + cards_csv.string());
  content->suits = suits;
  content->levels = 0;
  for (const auto& r : cards.rows) {
    Card c;
    c.level = r[0];
    c.bonus = r[1];
    c.value = r[2];
    for (int s = 0; s < suits; ++s) c.price.suit[s] = static_cast<std::int16_t>(r[3 + s]);
    if (c.level < 1) throw SetupError("card level must be >= 1");
    if (c.bonus >= suits) throw SetupError("card bonus suit out of range");
    content->levels = std::max(content->levels, c.level);
    content->cards.push_back(c);
  }
  if (content->cards.size() > 256) throw SetupError("at most 256 cards are supported");

  Table nobles = read_csv(nobles_csv, 1, "req_suit");
  if (nobles.header[0] != "value") throw SetupError(nobles_csv.string() + ": header must start with value");
  if (static_cast<int>(nobles.header.size()) - 1 != suits)
    throw SetupError("nobles and cards disagree on the number of suits");
  for (const auto& r : nobles.rows) {
    Noble n;
    n.value = r[0];
    for (int s = 0; s < suits; ++s) n.requirement.suit[s] = static_cast<std::int16_t>(r[1 + s]);
    if (n.value <= 0 || n.requirement.total() <= 0)
      throw SetupError("nobles need a positive value and requirement");
    content->nobles.push_back(n);
  }
  if (content->nobles.size() > 256) throw SetupError("at most 256 nobles are supported");
  return content;
}

ContentPtr load_content(const std::filesystem::path& dir) {
  return load_content(dir / "cards.csv", dir / "nobles.csv");
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("SPL_DATA_DIR")) return env;
  return SPL_DATA_DIR;
}

ContentPtr default_content() {
  static std::once_flag once;
  static ContentPtr content;
  std::call_once(once, [] { content = load_content(default_data_dir()); });
  return content;
}

}  // namespace spl
