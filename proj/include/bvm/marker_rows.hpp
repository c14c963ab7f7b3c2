#pragma once

// Rule-free marker rows on a finite index range, and the three manipulations
// used to turn loosely separated marker sets into nested rows: shifting a
// row, filling outside the forbidden zone, and upward adjustment.
//
// Each row carries the sub-range on which its content is known to match what
// the same manipulation would produce on a bi-infinite row.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bvm/interval.hpp"

namespace bvm {

struct GenericRow {
  Interval range;                      // positions the row may hold
  Interval determined;                 // sub-range where markers are exact
  std::vector<Position> markers;       // sorted, unique, inside range
  std::optional<Position> separation;  // n of the last fill, if any

  friend bool operator==(const GenericRow&, const GenericRow&) = default;
};

class GenericMarkerRows {
 public:
  GenericMarkerRows() = default;
  explicit GenericMarkerRows(std::vector<GenericRow> rows);

  std::size_t size() const noexcept { return rows_.size(); }
  // 1-based.
  const GenericRow& row(std::size_t k) const;
  GenericRow& row(std::size_t k);

  // Adds a row with the given markers, determined on the whole range.
  // Throws std::invalid_argument for a marker outside the range.
  static GenericRow make_row(Interval range, std::vector<Position> markers);

  friend bool operator==(const GenericMarkerRows&, const GenericMarkerRows&) = default;

 private:
  std::vector<GenericRow> rows_;
};

// Translates row k by delta (negative moves left). Markers leaving the range
// are dropped; determined becomes (determined + delta) clipped to the range.
GenericMarkerRows shift_row(GenericMarkerRows rows, std::size_t k, Position delta);

// Replaces row k by every in-range position outside the forbidden zone, the
// union of [m+1, m+n-1] over the current markers m. Positions within n-1 of
// the left end of the determined range lose determination, since markers
// beyond the range could forbid them. If the old markers were at least n
// apart the new gaps are at most n; a denser input can forbid long runs.
// Throws std::invalid_argument if n == 0.
GenericMarkerRows fill_outside_forbidden(GenericMarkerRows rows, std::size_t k,
                                         Position n);

struct AdjustResult {
  GenericMarkerRows rows;
  // (row, original position) of markers with no marker of the row above at
  // or to their left.
  std::vector<std::pair<std::size_t, Position>> dropped;
};

// For k = 2..K, moves each row-k marker left onto the nearest row-(k-1)
// marker (already adjusted) at or before it. Several markers may land on
// the same position. Row 1 is unchanged.
AdjustResult upward_adjust(GenericMarkerRows rows);

// Largest gap between consecutive markers of a row lying inside its
// determined range; 0 with fewer than two such markers.
Position max_gap(const GenericRow& row);

// True iff row k's markers inside both determined ranges sit on row k-1
// markers.
bool nested(const GenericMarkerRows& rows, std::size_t k);

}  // namespace bvm
