#pragma once

// k-blocks, k-trapezoids and the ordered diagram of the full 2-shift built
// from them.
//
// Coordinates: a trapezoid is stored relative to the left marker of its core
// (offset 0). Row r covers the cells [offset, offset + |symbols|) and records
// every marker on the closed boundary range [offset, offset + |symbols|].

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bvm/diagram.hpp"
#include "bvm/interval.hpp"
#include "bvm/markers.hpp"

namespace bvm {

// Widths of the side rectangles used to widen a k-trapezoid: for each w < k,
// largest first, one w-rectangle is glued on each side in rows 1..w.
class WidenSchedule {
 public:
  // Throws std::invalid_argument unless non-empty, positive and strictly
  // increasing.
  explicit WidenSchedule(std::vector<std::size_t> widths);

  // {1}: every trapezoid gains one cell on each side of row 1.
  static WidenSchedule figures() { return WidenSchedule({1}); }
  // "1,2,3"; throws ParseError.
  static WidenSchedule parse(std::string_view text);

  const std::vector<std::size_t>& widths() const noexcept { return widths_; }
  std::vector<std::size_t> widths_below(std::size_t k) const;  // descending
  // Widest possible side extension of a k-trapezoid: sum of widths < k.
  Position margin(std::size_t k) const;
  std::string to_string() const;

  friend bool operator==(const WidenSchedule&, const WidenSchedule&) = default;

 private:
  std::vector<std::size_t> widths_;
};

// Word length guaranteeing that every k-trapezoid of the full shift shows up
// fully determined in some word: its extent (at most k + 2 margin) plus the
// marker reach k - 1 to the left and 2k - 2 to the right.
std::size_t dependence_bound(std::size_t k, const WidenSchedule& schedule);

struct TrapezoidRow {
  Position offset = 0;
  std::string symbols;
  std::vector<Position> markers;  // sorted, within [offset, offset + |symbols|]

  Interval extent() const noexcept {
    return {offset, offset + static_cast<Position>(symbols.size())};
  }
  friend bool operator==(const TrapezoidRow&, const TrapezoidRow&) = default;
};

class Trapezoid {
 public:
  // Throws std::invalid_argument if the rows do not form a normalized
  // trapezoid (see the file comment).
  Trapezoid(std::size_t level, Position core_width, std::vector<TrapezoidRow> rows);

  std::size_t level() const noexcept { return level_; }
  Position core_width() const noexcept { return core_width_; }
  const std::vector<TrapezoidRow>& rows() const noexcept { return rows_; }
  // 1-based.
  const TrapezoidRow& row(std::size_t r) const;

  // "T <level> <core_width>" then "R <r> <offset> <symbols> M <m1,m2,...>"
  // per row, newline separated, no final newline.
  const std::string& canonical() const noexcept { return canonical_; }
  // Inverse of canonical(); throws ParseError.
  static Trapezoid parse(std::string_view text);

  std::optional<char> symbol_at(std::size_t r, Position p) const;
  std::optional<bool> marker_at(std::size_t r, Position p) const;

  friend bool operator==(const Trapezoid& a, const Trapezoid& b) {
    return a.canonical_ == b.canonical_;
  }
  friend auto operator<=>(const Trapezoid& a, const Trapezoid& b) {
    return a.canonical_ <=> b.canonical_;
  }

 private:
  std::size_t level_;
  Position core_width_;
  std::vector<TrapezoidRow> rows_;
  std::string canonical_;
};

struct TrapezoidHash {
  std::size_t operator()(const Trapezoid& t) const noexcept {
    return std::hash<std::string>{}(t.canonical());
  }
};

// Pictorial form, row 1 on top: `0|0|0` over ` |0|`. Boundary markers of the
// outermost side rectangles are not drawn.
std::string render(const Trapezoid& t);

// Consecutive row-k marker pairs inside the determined range of row k, as
// closed intervals [left marker, right marker]. Throws InsufficientWindow if
// row k has fewer than two markers.
std::vector<Interval> k_blocks(const MarkedWord& mw, std::size_t k);

// The k-trapezoid over `block`, or nullopt if some symbol or marker it needs
// is undetermined. Throws std::invalid_argument if `block` is not a k-block.
std::optional<Trapezoid> try_trapezoid_at(const MarkedWord& mw, Interval block,
                                          std::size_t k, const WidenSchedule& schedule);
// As above but throws InsufficientWindow instead of returning nullopt.
Trapezoid trapezoid_at(const MarkedWord& mw, Interval block, std::size_t k,
                       const WidenSchedule& schedule);

// levels[k - 1] = every k-trapezoid found in words of length L, k = 1..K,
// sorted by canonical text. Words are split over `threads` workers (0 picks
// the hardware concurrency). Throws InsufficientWindow if
// L < dependence_bound(K).
std::vector<std::vector<Trapezoid>> enumerate_levels(std::size_t K,
                                                     const WidenSchedule& schedule,
                                                     std::size_t L,
                                                     std::size_t threads = 0);
std::vector<Trapezoid> enumerate_level(std::size_t k, const WidenSchedule& schedule,
                                       std::size_t L, std::size_t threads = 0);

struct Occurrence {
  Position offset;  // left core marker, relative to the enclosing core
  Trapezoid trapezoid;
};

struct Decomposition {
  std::vector<Occurrence> internal;  // cores inside the core, left to right
  std::vector<Occurrence> external;  // readable k-trapezoids in the side rectangles
};

// Splits a (k+1)-trapezoid into the k-trapezoids over the k-blocks of its
// row k. Throws std::invalid_argument for a 1-trapezoid and
// InsufficientWindow if an internal trapezoid cannot be read off.
Decomposition decompose(const Trapezoid& S, const WidenSchedule& schedule);

// Vertex indices of the internal trapezoids in `level_below` (sorted by
// canonical text). Throws LabelError if one is missing.
std::vector<VertexIndex> internal_indices(const Trapezoid& S, const WidenSchedule& schedule,
                                          const std::vector<Trapezoid>& level_below);

// Root label "widths=<list>", level-k vertices labelled by canonical text,
// E_1 one edge per 1-trapezoid, E_{k+1} one edge per internal occurrence with
// order = left-to-right index.
OrderedBratteliDiagram build_diagram(std::size_t K, const WidenSchedule& schedule,
                                     std::size_t L, std::size_t threads = 0);
OrderedBratteliDiagram build_diagram(const std::vector<std::vector<Trapezoid>>& levels,
                                     const WidenSchedule& schedule);

// Schedule recorded in the root label; throws LabelError.
WidenSchedule schedule_of(const OrderedBratteliDiagram& d);

// Rows 1..N of an array, with positions relative to the distinguished cell 0.
struct ArrayWindow {
  std::vector<TrapezoidRow> rows;
  Interval core;  // closed marker range of the deepest core; core.lo <= 0 < core.hi

  ArrayWindow shifted(Position delta) const;
  // True iff every symbol and marker bit known to both windows matches.
  bool agrees_on_overlap(const ArrayWindow& other) const;
  friend bool operator==(const ArrayWindow&, const ArrayWindow&) = default;
};

// The window described by a prefix of a diagram from build_diagram: the
// depth-N trapezoid with cell 0 at the 1-trapezoid reached through the chain
// of internal occurrences. Throws LabelError on inconsistent labels and
// std::invalid_argument on the empty prefix.
ArrayWindow path_to_window(const OrderedBratteliDiagram& d, const PathPrefix& p);

}  // namespace bvm
