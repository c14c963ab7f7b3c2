#include "bvm/picture.hpp"

#include <algorithm>
#include <set>

namespace bvm {

std::string render_picture(const std::vector<PictureRow>& rows) {
  if (rows.empty()) return {};
  Position c0 = rows.front().begin;
  Position c1 = c0;
  for (const auto& r : rows) {
    c0 = std::min(c0, r.begin);
    c1 = std::max(c1, r.begin + static_cast<Position>(r.cells.size()));
    for (Position b : r.bars) {
      c0 = std::min(c0, b);
      c1 = std::max(c1, b);
    }
  }

  std::vector<std::string> lines;
  for (const auto& r : rows) {
    const std::set<Position> bars(r.bars.begin(), r.bars.end());
    std::string line;
    for (Position p = c0; p <= c1; ++p) {
      line += bars.count(p) ? '|' : ' ';
      if (p == c1) break;
      const Position i = p - r.begin;
      line += (i >= 0 && i < static_cast<Position>(r.cells.size())) ? r.cells[i] : ' ';
    }
    lines.push_back(std::move(line));
  }

  const bool blank_lead = std::all_of(lines.begin(), lines.end(), [](const std::string& l) {
    return l.empty() || l.front() == ' ';
  });
  std::string out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string& l = lines[i];
    if (blank_lead && !l.empty()) l.erase(0, 1);
    l.erase(l.find_last_not_of(' ') + 1);
    if (i) out += '\n';
    out += l;
  }
  return out;
}

}  // namespace bvm
