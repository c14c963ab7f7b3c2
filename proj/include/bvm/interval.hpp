#pragma once

#include <algorithm>
#include <cstddef>

namespace bvm {

// Horizontal coordinate in a row of an array. May be negative for offsets
// relative to a core.
using Position = std::ptrdiff_t;

// Closed range [lo, hi]; empty when lo > hi.
struct Interval {
  Position lo = 0;
  Position hi = -1;

  bool empty() const noexcept { return lo > hi; }
  bool contains(Position p) const noexcept { return lo <= p && p <= hi; }
  bool contains(const Interval& o) const noexcept {
    return o.empty() || (lo <= o.lo && o.hi <= hi);
  }
  Position size() const noexcept { return empty() ? 0 : hi - lo + 1; }
  Interval intersect(const Interval& o) const noexcept {
    return {std::max(lo, o.lo), std::min(hi, o.hi)};
  }
  Interval shifted(Position delta) const noexcept { return {lo + delta, hi + delta}; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

}  // namespace bvm
