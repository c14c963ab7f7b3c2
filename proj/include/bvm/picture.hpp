#pragma once

// Column-aligned text pictures of marked rows. Each cell takes two columns:
// its left boundary ('|' for a marker, ' ' otherwise) and its symbol.

#include <string>
#include <vector>

#include "bvm/interval.hpp"

namespace bvm {

struct PictureRow {
  Position begin = 0;
  std::string cells;               // cells[i] sits at begin + i; ' ' = blank
  std::vector<Position> bars;      // boundary positions drawn as '|'
};

// One line per row. A leading column that is blank in every row is dropped,
// trailing blanks are trimmed; lines are joined by '\n' with no final newline.
std::string render_picture(const std::vector<PictureRow>& rows);

}  // namespace bvm
