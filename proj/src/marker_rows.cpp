#include "bvm/marker_rows.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bvm {
namespace {

void normalize(std::vector<Position>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

GenericMarkerRows::GenericMarkerRows(std::vector<GenericRow> rows) : rows_(std::move(rows)) {
  for (auto& r : rows_) {
    normalize(r.markers);
    for (Position m : r.markers) {
      if (!r.range.contains(m)) {
        throw std::invalid_argument("marker " + std::to_string(m) + " outside row range");
      }
    }
  }
}

const GenericRow& GenericMarkerRows::row(std::size_t k) const {
  if (k == 0 || k > rows_.size()) throw std::out_of_range("row " + std::to_string(k));
  return rows_[k - 1];
}

GenericRow& GenericMarkerRows::row(std::size_t k) {
  if (k == 0 || k > rows_.size()) throw std::out_of_range("row " + std::to_string(k));
  return rows_[k - 1];
}

GenericRow GenericMarkerRows::make_row(Interval range, std::vector<Position> markers) {
  normalize(markers);
  for (Position m : markers) {
    if (!range.contains(m)) {
      throw std::invalid_argument("marker " + std::to_string(m) + " outside row range");
    }
  }
  return GenericRow{range, range, std::move(markers), std::nullopt};
}

GenericMarkerRows shift_row(GenericMarkerRows rows, std::size_t k, Position delta) {
  GenericRow& r = rows.row(k);
  std::vector<Position> moved;
  for (Position m : r.markers) {
    if (r.range.contains(m + delta)) moved.push_back(m + delta);
  }
  r.markers = std::move(moved);
  r.determined = r.determined.shifted(delta).intersect(r.range);
  return rows;
}

GenericMarkerRows fill_outside_forbidden(GenericMarkerRows rows, std::size_t k,
                                         Position n) {
  if (n < 1) throw std::invalid_argument("separation must be >= 1");
  GenericRow& r = rows.row(k);
  std::vector<Position> filled;
  auto it = r.markers.begin();
  Position reach = r.range.lo - 1;  // last forbidden position so far
  for (Position p = r.range.lo; p <= r.range.hi; ++p) {
    while (it != r.markers.end() && *it < p) {
      reach = std::max(reach, *it + n - 1);
      ++it;
    }
    if (p > reach) filled.push_back(p);
  }
  r.markers = std::move(filled);
  r.determined = Interval{r.determined.lo + n - 1, r.determined.hi};
  r.separation = n;
  return rows;
}

AdjustResult upward_adjust(GenericMarkerRows rows) {
  AdjustResult out;
  for (std::size_t k = 2; k <= rows.size(); ++k) {
    const GenericRow& above = rows.row(k - 1);
    GenericRow& r = rows.row(k);
    const auto& anchors = above.markers;

    std::vector<Position> moved;
    for (Position m : r.markers) {
      auto it = std::upper_bound(anchors.begin(), anchors.end(), m);
      if (it == anchors.begin()) {
        out.dropped.emplace_back(k, m);
        continue;
      }
      moved.push_back(*std::prev(it));
    }
    normalize(moved);

    // An adjusted marker at anchor a is exact once both rows are known from a
    // through the next anchor.
    const Position lo = std::max(r.determined.lo, above.determined.lo);
    const Position hi = std::min(r.determined.hi + 1, above.determined.hi);
    Interval det;
    auto first = std::lower_bound(anchors.begin(), anchors.end(), lo);
    auto last = std::upper_bound(anchors.begin(), anchors.end(), hi);
    if (lo <= hi && first != anchors.end() && last != anchors.begin()) {
      det = Interval{*first, *std::prev(last) - 1};
    }
    r.markers = std::move(moved);
    r.determined = det;
  }
  out.rows = std::move(rows);
  return out;
}

Position max_gap(const GenericRow& row) {
  Position gap = 0;
  std::optional<Position> prev;
  for (Position m : row.markers) {
    if (!row.determined.contains(m)) continue;
    if (prev) gap = std::max(gap, m - *prev);
    prev = m;
  }
  return gap;
}

bool nested(const GenericMarkerRows& rows, std::size_t k) {
  if (k < 2) return true;
  const auto& r = rows.row(k);
  const auto& above = rows.row(k - 1);
  const Interval common = r.determined.intersect(above.determined);
  for (Position m : r.markers) {
    if (common.contains(m) &&
        !std::binary_search(above.markers.begin(), above.markers.end(), m)) {
      return false;
    }
  }
  return true;
}

}  // namespace bvm
