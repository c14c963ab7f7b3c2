#pragma once

// Domination-based markers for the full shift on {0,1}.
//
// Every row of the array repeats the same binary word. A marker at position n
// is a bar on the LEFT boundary of cell n. In row k there is a marker at n iff
// for some i in [n-k+1, n] the block x[n, n+k) dominates each of the k blocks
// x[j, j+k), j in [i, i+k-1]. The bit at n reads cells [n-k+1, n+2k-2], so on
// a word of length L row k is determined on [k-1, L-2k+1].

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bvm/interval.hpp"

namespace bvm {

// a dominates b iff a == b or, at the first index where they differ, a has 1
// and b has 0. Throws std::invalid_argument if the lengths differ or are 0.
bool dominates(std::string_view a, std::string_view b);

// Throws ParseError unless every character is '0' or '1'.
void require_binary(std::string_view word);

struct MarkerRow {
  std::vector<Position> markers;  // sorted, inside `determined`
  Interval determined;

  friend bool operator==(const MarkerRow&, const MarkerRow&) = default;
};

// Markers of row k by literal evaluation of the rule. Throws WordTooShort when
// the determined range is empty (|word| < 3k - 2), std::invalid_argument for
// k == 0.
MarkerRow row_markers(std::string_view word, std::size_t k);

// Determined range of row k on a word of length L (possibly empty).
Interval determined_range(Position L, std::size_t k);

// A binary word with marker rows 1..K. Each row carries the exact range on
// which marker presence is decided by the word.
class MarkedWord {
 public:
  MarkedWord(std::string word, std::vector<MarkerRow> rows);

  const std::string& word() const noexcept { return word_; }
  Position length() const noexcept { return static_cast<Position>(word_.size()); }
  std::size_t row_count() const noexcept { return rows_.size(); }
  // 1-based.
  const MarkerRow& row(std::size_t k) const;

  // Cell symbol (same in every row); nullopt outside the word or above row K.
  std::optional<char> symbol_at(std::size_t k, Position p) const;
  // Marker bit; nullopt outside the row's determined range.
  std::optional<bool> marker_at(std::size_t k, Position p) const;

 private:
  std::string word_;
  std::vector<MarkerRow> rows_;
  std::vector<std::vector<char>> bits_;  // bits_[k-1][p], valid on determined
};

// Rows 1..K, each computed independently from the word. Throws WordTooShort
// if row K has an empty determined range.
MarkedWord mark_all_rows(std::string_view word, std::size_t K);

// Violations of the marked-word invariants: markers inside determined
// ranges, row 1 full, nesting of row k+1 into row k, and gaps of at most k in
// row k. Empty on every output of mark_all_rows.
std::vector<std::string> invariant_violations(const MarkedWord& mw);

// Positions inside all determined ranges of rows 1..K carrying a marker in
// every one of those rows (a finite stand-in for markers of infinite order).
std::vector<Position> infinite_order_positions(const MarkedWord& mw, std::size_t K);

// One line per row, row 1 on top. A cell shows its symbol, preceded by '|'
// when a marker sits on its left boundary; undetermined cells show '?'.
std::string render(const MarkedWord& mw);

}  // namespace bvm
