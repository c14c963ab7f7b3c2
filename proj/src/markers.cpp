#include "bvm/markers.hpp"

#include <algorithm>
#include <stdexcept>

#include "bvm/error.hpp"
#include "bvm/picture.hpp"

namespace bvm {

bool dominates(std::string_view a, std::string_view b) {
  if (a.size() != b.size() || a.empty()) {
    throw std::invalid_argument("dominates() needs two blocks of equal positive length");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] == '1' && b[i] == '0';
  }
  return true;
}

void require_binary(std::string_view word) {
  const auto bad = word.find_first_not_of("01");
  if (bad != std::string_view::npos) {
    throw ParseError(0, "word must be over {0,1}; found '" + std::string(1, word[bad]) +
                            "' at position " + std::to_string(bad));
  }
}

Interval determined_range(Position L, std::size_t k) {
  const auto kk = static_cast<Position>(k);
  return {kk - 1, L - 2 * kk + 1};
}

MarkerRow row_markers(std::string_view word, std::size_t k) {
  if (k == 0) throw std::invalid_argument("marker rows are numbered from 1");
  require_binary(word);
  const auto L = static_cast<Position>(word.size());
  const auto kk = static_cast<Position>(k);
  MarkerRow row;
  row.determined = determined_range(L, k);
  if (row.determined.empty()) {
    throw WordTooShort("row " + std::to_string(k) + " needs a word of length >= " +
                       std::to_string(3 * k - 2) + ", got " + std::to_string(L));
  }
  auto block = [&](Position j) { return word.substr(static_cast<std::size_t>(j), k); };
  for (Position n = row.determined.lo; n <= row.determined.hi; ++n) {
    const auto here = block(n);
    for (Position i = n - kk + 1; i <= n; ++i) {
      bool all = true;
      for (Position j = i; j < i + kk && all; ++j) all = dominates(here, block(j));
      if (all) {
        row.markers.push_back(n);
        break;
      }
    }
  }
  return row;
}

MarkedWord::MarkedWord(std::string word, std::vector<MarkerRow> rows)
    : word_(std::move(word)), rows_(std::move(rows)) {
  require_binary(word_);
  bits_.reserve(rows_.size());
  for (std::size_t k = 1; k <= rows_.size(); ++k) {
    const auto& r = rows_[k - 1];
    std::vector<char> bits(word_.size(), 0);
    for (Position m : r.markers) {
      if (!r.determined.contains(m) || m < 0 || m >= length()) {
        throw std::invalid_argument("row " + std::to_string(k) + " marker " +
                                    std::to_string(m) + " outside its determined range");
      }
      bits[static_cast<std::size_t>(m)] = 1;
    }
    bits_.push_back(std::move(bits));
  }
}

const MarkerRow& MarkedWord::row(std::size_t k) const {
  if (k == 0 || k > rows_.size()) {
    throw std::out_of_range("row " + std::to_string(k) + " outside [1, " +
                            std::to_string(rows_.size()) + "]");
  }
  return rows_[k - 1];
}

std::optional<char> MarkedWord::symbol_at(std::size_t k, Position p) const {
  if (k == 0 || k > rows_.size() || p < 0 || p >= length()) return std::nullopt;
  return word_[static_cast<std::size_t>(p)];
}

std::optional<bool> MarkedWord::marker_at(std::size_t k, Position p) const {
  if (k == 0 || k > rows_.size() || !rows_[k - 1].determined.contains(p)) {
    return std::nullopt;
  }
  return bits_[k - 1][static_cast<std::size_t>(p)] != 0;
}

MarkedWord mark_all_rows(std::string_view word, std::size_t K) {
  if (K == 0) throw std::invalid_argument("mark_all_rows needs K >= 1");
  std::vector<MarkerRow> rows;
  rows.reserve(K);
  for (std::size_t k = 1; k <= K; ++k) rows.push_back(row_markers(word, k));
  return MarkedWord(std::string(word), std::move(rows));
}

std::vector<std::string> invariant_violations(const MarkedWord& mw) {
  std::vector<std::string> out;
  auto where = [](std::size_t k, Position p) {
    return "row " + std::to_string(k) + " position " + std::to_string(p);
  };
  for (std::size_t k = 1; k <= mw.row_count(); ++k) {
    const auto& row = mw.row(k);
    const Interval det = row.determined;
    for (Position m : row.markers) {
      if (!det.contains(m)) out.push_back(where(k, m) + ": marker outside determined range");
    }
    if (k == 1) {
      for (Position p = det.lo; p <= det.hi; ++p) {
        if (!*mw.marker_at(1, p)) out.push_back(where(1, p) + ": row 1 missing marker");
      }
    }
    for (std::size_t i = 1; i < row.markers.size(); ++i) {
      const Position gap = row.markers[i] - row.markers[i - 1];
      if (gap > static_cast<Position>(k)) {
        out.push_back(where(k, row.markers[i - 1]) + ": gap " + std::to_string(gap) +
                      " exceeds " + std::to_string(k));
      }
    }
    // Every k consecutive determined positions hold a marker.
    const auto kk = static_cast<Position>(k);
    for (Position s = det.lo; s + kk - 1 <= det.hi; ++s) {
      bool any = false;
      for (Position p = s; p < s + kk && !any; ++p) any = *mw.marker_at(k, p);
      if (!any) out.push_back(where(k, s) + ": no marker in the next " + std::to_string(k) + " cells");
    }
    if (k >= 2) {
      const Interval common = det.intersect(mw.row(k - 1).determined);
      for (Position m : row.markers) {
        if (common.contains(m) && !*mw.marker_at(k - 1, m)) {
          out.push_back(where(k, m) + ": marker not nested in row " + std::to_string(k - 1));
        }
      }
    }
  }
  return out;
}

std::vector<Position> infinite_order_positions(const MarkedWord& mw, std::size_t K) {
  if (K == 0 || K > mw.row_count()) {
    throw std::out_of_range("K outside the marked rows");
  }
  Interval common = mw.row(1).determined;
  for (std::size_t k = 2; k <= K; ++k) common = common.intersect(mw.row(k).determined);
  std::vector<Position> out;
  for (Position p = common.lo; p <= common.hi; ++p) {
    bool full = true;
    for (std::size_t k = 1; k <= K && full; ++k) full = *mw.marker_at(k, p);
    if (full) out.push_back(p);
  }
  return out;
}

std::string render(const MarkedWord& mw) {
  std::vector<PictureRow> rows;
  for (std::size_t k = 1; k <= mw.row_count(); ++k) {
    const auto& row = mw.row(k);
    PictureRow pr;
    pr.begin = 0;
    pr.cells = mw.word();
    for (Position p = 0; p < mw.length(); ++p) {
      if (!row.determined.contains(p)) pr.cells[static_cast<std::size_t>(p)] = '?';
    }
    pr.bars = row.markers;
    rows.push_back(std::move(pr));
  }
  return render_picture(rows);
}

}  // namespace bvm
