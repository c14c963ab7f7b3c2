#include "bvm/trapezoid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <exception>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "bvm/error.hpp"
#include "bvm/picture.hpp"

namespace bvm {

WidenSchedule::WidenSchedule(std::vector<std::size_t> widths) : widths_(std::move(widths)) {
  if (widths_.empty()) throw std::invalid_argument("widen schedule needs at least one width");
  for (std::size_t i = 0; i < widths_.size(); ++i) {
    if (widths_[i] == 0) throw std::invalid_argument("widths must be positive");
    if (i > 0 && widths_[i] <= widths_[i - 1]) {
      throw std::invalid_argument("widths must be strictly increasing");
    }
  }
}

WidenSchedule WidenSchedule::parse(std::string_view text) {
  std::vector<std::size_t> widths;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const auto part = text.substr(pos, comma == text.npos ? text.npos : comma - pos);
    std::size_t w = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), w);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw ParseError(0, "bad width '" + std::string(part) + "' in '" + std::string(text) + "'");
    }
    widths.push_back(w);
    if (comma == text.npos) break;
    pos = comma + 1;
  }
  try {
    return WidenSchedule(std::move(widths));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

std::vector<std::size_t> WidenSchedule::widths_below(std::size_t k) const {
  std::vector<std::size_t> out;
  for (auto it = widths_.rbegin(); it != widths_.rend(); ++it) {
    if (*it < k) out.push_back(*it);
  }
  return out;
}

Position WidenSchedule::margin(std::size_t k) const {
  Position m = 0;
  for (std::size_t w : widths_) {
    if (w < k) m += static_cast<Position>(w);
  }
  return m;
}

std::string WidenSchedule::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < widths_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(widths_[i]);
  }
  return out;
}

std::size_t dependence_bound(std::size_t k, const WidenSchedule& schedule) {
  if (k == 0) throw std::invalid_argument("levels start at 1");
  return 4 * k - 2 + 2 * static_cast<std::size_t>(schedule.margin(k));
}

// ---------------------------------------------------------------------------

namespace {

std::string join_markers(const std::vector<Position>& ms) {
  if (ms.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(ms[i]);
  }
  return out;
}

}  // namespace

Trapezoid::Trapezoid(std::size_t level, Position core_width, std::vector<TrapezoidRow> rows)
    : level_(level), core_width_(core_width), rows_(std::move(rows)) {
  auto fail = [](const std::string& why) {
    throw std::invalid_argument("not a trapezoid: " + why);
  };
  if (level_ == 0) fail("level 0");
  if (rows_.size() != level_) fail("expected " + std::to_string(level_) + " rows");
  if (core_width_ < 1) fail("empty core");
  for (std::size_t r = 1; r <= level_; ++r) {
    const auto& row = rows_[r - 1];
    const Interval ext = row.extent();
    if (row.symbols.empty()) fail("row " + std::to_string(r) + " is empty");
    if (row.symbols.find_first_not_of("01") != std::string::npos) {
      fail("row " + std::to_string(r) + " has a non-binary symbol");
    }
    if (!std::is_sorted(row.markers.begin(), row.markers.end()) ||
        std::adjacent_find(row.markers.begin(), row.markers.end()) != row.markers.end()) {
      fail("row " + std::to_string(r) + " markers not sorted and unique");
    }
    for (Position m : row.markers) {
      if (!ext.contains(m)) fail("row " + std::to_string(r) + " marker outside row");
    }
    if (!ext.contains(Interval{0, core_width_})) fail("row " + std::to_string(r) + " misses the core");
    if (r > 1 && !rows_[r - 2].extent().contains(ext)) {
      fail("row " + std::to_string(r) + " wider than the row below");
    }
  }
  const auto& top = rows_.back();
  if (top.offset != 0 || static_cast<Position>(top.symbols.size()) != core_width_ ||
      top.markers.empty() || top.markers.front() != 0 || top.markers.back() != core_width_) {
    fail("row " + std::to_string(level_) + " is not the core block");
  }

  std::ostringstream os;
  os << "T " << level_ << " " << core_width_;
  for (std::size_t r = 1; r <= level_; ++r) {
    const auto& row = rows_[r - 1];
    os << "\nR " << r << " " << row.offset << " " << row.symbols << " M "
       << join_markers(row.markers);
  }
  canonical_ = os.str();
}

const TrapezoidRow& Trapezoid::row(std::size_t r) const {
  if (r == 0 || r > rows_.size()) throw std::out_of_range("trapezoid row " + std::to_string(r));
  return rows_[r - 1];
}

std::optional<char> Trapezoid::symbol_at(std::size_t r, Position p) const {
  if (r == 0 || r > rows_.size()) return std::nullopt;
  const auto& row = rows_[r - 1];
  const Position i = p - row.offset;
  if (i < 0 || i >= static_cast<Position>(row.symbols.size())) return std::nullopt;
  return row.symbols[static_cast<std::size_t>(i)];
}

std::optional<bool> Trapezoid::marker_at(std::size_t r, Position p) const {
  if (r == 0 || r > rows_.size()) return std::nullopt;
  const auto& row = rows_[r - 1];
  if (!row.extent().contains(p)) return std::nullopt;
  return std::binary_search(row.markers.begin(), row.markers.end(), p);
}

Trapezoid Trapezoid::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  auto next = [&]() -> std::istringstream {
    if (!std::getline(in, line)) throw ParseError(lineno + 1, "unexpected end of trapezoid");
    ++lineno;
    return std::istringstream(line);
  };

  auto head = next();
  std::string tag;
  long long level = 0, width = 0;
  if (!(head >> tag >> level >> width) || tag != "T" || level < 1 || !(head >> std::ws).eof()) {
    throw ParseError(lineno, "expected 'T <level> <core_width>'");
  }
  std::vector<TrapezoidRow> rows;
  for (long long r = 1; r <= level; ++r) {
    auto ls = next();
    std::string rtag, mtag, marks;
    long long rr = 0, offset = 0;
    TrapezoidRow row;
    if (!(ls >> rtag >> rr >> offset >> row.symbols >> mtag >> marks) || rtag != "R" ||
        mtag != "M" || rr != r || !(ls >> std::ws).eof()) {
      throw ParseError(lineno, "expected 'R " + std::to_string(r) +
                                   " <offset> <symbols> M <markers>'");
    }
    row.offset = static_cast<Position>(offset);
    if (marks != "-") {
      std::size_t pos = 0;
      while (pos <= marks.size()) {
        std::size_t comma = marks.find(',', pos);
        if (comma == std::string::npos) comma = marks.size();
        Position m = 0;
        const char* first = marks.data() + pos;
        const char* last = marks.data() + comma;
        auto [ptr, ec] = std::from_chars(first, last, m);
        if (first == last || ec != std::errc() || ptr != last) {
          throw ParseError(lineno, "bad marker list '" + marks + "'");
        }
        row.markers.push_back(m);
        pos = comma + 1;
      }
    }
    rows.push_back(std::move(row));
  }
  if (std::getline(in, line) && line.find_first_not_of(" \t\r") != std::string::npos) {
    throw ParseError(lineno + 1, "trailing text after trapezoid");
  }
  try {
    return Trapezoid(static_cast<std::size_t>(level), static_cast<Position>(width),
                     std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

std::string render(const Trapezoid& t) {
  std::vector<PictureRow> rows;
  for (const auto& row : t.rows()) {
    const Interval ext = row.extent();
    PictureRow pr;
    pr.begin = row.offset;
    pr.cells = row.symbols;
    for (Position m : row.markers) {
      if ((m == ext.lo && ext.lo < 0) || (m == ext.hi && ext.hi > t.core_width())) continue;
      pr.bars.push_back(m);
    }
    rows.push_back(std::move(pr));
  }
  return render_picture(rows);
}

// ---------------------------------------------------------------------------

namespace {

// Grid: anything with symbol_at(r, p) and marker_at(r, p) returning optionals.
template <class Grid>
std::optional<Trapezoid> extract(const Grid& g, Interval block, std::size_t k,
                                 const WidenSchedule& schedule) {
  const Position a = block.lo;
  const Position b = block.hi;
  if (b <= a) throw std::invalid_argument("k-block needs left marker < right marker");
  for (Position p = a; p <= b; ++p) {
    const auto m = g.marker_at(k, p);
    if (!m) return std::nullopt;
    if (*m != (p == a || p == b)) {
      throw std::invalid_argument("[" + std::to_string(a) + ", " + std::to_string(b) +
                                  "] is not a block of row " + std::to_string(k));
    }
  }

  std::vector<Position> lo(k + 1, a), hi(k + 1, b);
  Position cur_lo = a, cur_hi = b;
  for (std::size_t w : schedule.widths_below(k)) {
    for (Position p = cur_lo - 1;; --p) {
      const auto m = g.marker_at(w, p);
      if (!m) return std::nullopt;
      if (*m) {
        cur_lo = p;
        break;
      }
    }
    for (Position p = cur_hi + 1;; ++p) {
      const auto m = g.marker_at(w, p);
      if (!m) return std::nullopt;
      if (*m) {
        cur_hi = p;
        break;
      }
    }
    for (std::size_t r = 1; r <= w; ++r) {
      lo[r] = cur_lo;
      hi[r] = cur_hi;
    }
  }

  std::vector<TrapezoidRow> rows;
  rows.reserve(k);
  for (std::size_t r = 1; r <= k; ++r) {
    TrapezoidRow row;
    row.offset = lo[r] - a;
    for (Position p = lo[r]; p < hi[r]; ++p) {
      const auto s = g.symbol_at(r, p);
      if (!s) return std::nullopt;
      row.symbols += *s;
    }
    for (Position p = lo[r]; p <= hi[r]; ++p) {
      const auto m = g.marker_at(r, p);
      if (!m) return std::nullopt;
      if (*m) row.markers.push_back(p - a);
    }
    rows.push_back(std::move(row));
  }
  return Trapezoid(k, b - a, std::move(rows));
}

std::string word_of(std::uint64_t bits, std::size_t L) {
  std::string w(L, '0');
  for (std::size_t i = 0; i < L; ++i) {
    if ((bits >> (L - 1 - i)) & 1U) w[i] = '1';
  }
  return w;
}

}  // namespace

std::vector<Interval> k_blocks(const MarkedWord& mw, std::size_t k) {
  const auto& ms = mw.row(k).markers;
  if (ms.size() < 2) {
    throw InsufficientWindow("row " + std::to_string(k) + " has " +
                             std::to_string(ms.size()) +
                             " determined markers; a block needs two");
  }
  std::vector<Interval> out;
  for (std::size_t i = 1; i < ms.size(); ++i) out.push_back({ms[i - 1], ms[i]});
  return out;
}

std::optional<Trapezoid> try_trapezoid_at(const MarkedWord& mw, Interval block,
                                          std::size_t k, const WidenSchedule& schedule) {
  if (k == 0 || k > mw.row_count()) throw std::out_of_range("row outside the marked word");
  return extract(mw, block, k, schedule);
}

Trapezoid trapezoid_at(const MarkedWord& mw, Interval block, std::size_t k,
                       const WidenSchedule& schedule) {
  auto t = try_trapezoid_at(mw, block, k, schedule);
  if (!t) {
    throw InsufficientWindow("the " + std::to_string(k) + "-trapezoid over [" +
                             std::to_string(block.lo) + ", " + std::to_string(block.hi) +
                             "] reaches past the determined part of the word");
  }
  return std::move(*t);
}

std::vector<std::vector<Trapezoid>> enumerate_levels(std::size_t K,
                                                     const WidenSchedule& schedule,
                                                     std::size_t L, std::size_t threads) {
  if (K == 0) throw std::invalid_argument("levels start at 1");
  const std::size_t bound = dependence_bound(K, schedule);
  if (L < bound) {
    throw InsufficientWindow("word length " + std::to_string(L) + " cannot show every " +
                             std::to_string(K) + "-trapezoid; use --word-length >= " +
                             std::to_string(bound));
  }
  if (L > 40) throw std::invalid_argument("word length above 40 is not enumerable");
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());

  const std::uint64_t total = std::uint64_t{1} << L;
  threads = static_cast<std::size_t>(std::min<std::uint64_t>(threads, total));
  std::vector<std::vector<std::set<Trapezoid>>> found(
      threads, std::vector<std::set<Trapezoid>>(K));
  std::vector<std::exception_ptr> errors(threads);

  auto work = [&](std::size_t t) {
    try {
      const std::uint64_t begin = total * t / threads;
      const std::uint64_t end = total * (t + 1) / threads;
      for (std::uint64_t bits = begin; bits < end; ++bits) {
        const MarkedWord mw = mark_all_rows(word_of(bits, L), K);
        for (std::size_t k = 1; k <= K; ++k) {
          const auto& ms = mw.row(k).markers;
          for (std::size_t i = 1; i < ms.size(); ++i) {
            if (auto trap = extract(mw, Interval{ms[i - 1], ms[i]}, k, schedule)) {
              found[t][k - 1].insert(std::move(*trap));
            }
          }
        }
      }
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };

  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(work, t);
  work(0);
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<std::vector<Trapezoid>> levels(K);
  for (std::size_t k = 0; k < K; ++k) {
    std::set<Trapezoid> merged;
    for (auto& part : found) merged.merge(part[k]);
    levels[k].assign(merged.begin(), merged.end());
  }
  return levels;
}

std::vector<Trapezoid> enumerate_level(std::size_t k, const WidenSchedule& schedule,
                                       std::size_t L, std::size_t threads) {
  auto levels = enumerate_levels(k, schedule, L, threads);
  return std::move(levels.back());
}

Decomposition decompose(const Trapezoid& S, const WidenSchedule& schedule) {
  if (S.level() < 2) throw std::invalid_argument("a 1-trapezoid has no internal trapezoids");
  const std::size_t k = S.level() - 1;
  const auto& ms = S.row(k).markers;
  Decomposition out;
  for (std::size_t i = 1; i < ms.size(); ++i) {
    const Interval block{ms[i - 1], ms[i]};
    const bool inside = block.lo >= 0 && block.hi <= S.core_width();
    auto t = extract(S, block, k, schedule);
    if (inside) {
      if (!t) {
        throw InsufficientWindow("internal " + std::to_string(k) + "-trapezoid at offset " +
                                 std::to_string(block.lo) + " is not readable from\n" +
                                 S.canonical());
      }
      out.internal.push_back({block.lo, std::move(*t)});
    } else if (t) {
      out.external.push_back({block.lo, std::move(*t)});
    }
  }
  if (out.internal.empty()) {
    throw InsufficientWindow("no internal trapezoid in\n" + S.canonical());
  }
  return out;
}

std::vector<VertexIndex> internal_indices(const Trapezoid& S, const WidenSchedule& schedule,
                                          const std::vector<Trapezoid>& level_below) {
  std::vector<VertexIndex> out;
  for (const auto& occ : decompose(S, schedule).internal) {
    auto it = std::lower_bound(level_below.begin(), level_below.end(), occ.trapezoid);
    if (it == level_below.end() || !(*it == occ.trapezoid)) {
      throw LabelError("internal trapezoid missing from the level below:\n" +
                       occ.trapezoid.canonical());
    }
    out.push_back(static_cast<VertexIndex>(it - level_below.begin()));
  }
  return out;
}

OrderedBratteliDiagram build_diagram(const std::vector<std::vector<Trapezoid>>& levels,
                                     const WidenSchedule& schedule) {
  DiagramBuilder b;
  b.set_label(0, 0, "widths=" + schedule.to_string());
  for (std::size_t k = 1; k <= levels.size(); ++k) {
    b.add_level(levels[k - 1].size());
    for (VertexIndex v = 0; v < levels[k - 1].size(); ++v) {
      b.set_label(k, v, levels[k - 1][v].canonical());
    }
  }
  if (!levels.empty()) {
    for (VertexIndex v = 0; v < levels[0].size(); ++v) b.add_edge(1, v, 0, 0);
  }
  for (std::size_t k = 2; k <= levels.size(); ++k) {
    for (VertexIndex v = 0; v < levels[k - 1].size(); ++v) {
      const auto targets = internal_indices(levels[k - 1][v], schedule, levels[k - 2]);
      for (std::size_t o = 0; o < targets.size(); ++o) b.add_edge(k, v, o, targets[o]);
    }
  }
  return std::move(b).build();
}

OrderedBratteliDiagram build_diagram(std::size_t K, const WidenSchedule& schedule,
                                     std::size_t L, std::size_t threads) {
  return build_diagram(enumerate_levels(K, schedule, L, threads), schedule);
}

WidenSchedule schedule_of(const OrderedBratteliDiagram& d) {
  const auto& label = d.label(0, 0);
  constexpr std::string_view prefix = "widths=";
  if (!label || label->rfind(prefix, 0) != 0) {
    throw LabelError("root label does not record a widen schedule");
  }
  try {
    return WidenSchedule::parse(std::string_view(*label).substr(prefix.size()));
  } catch (const ParseError& e) {
    throw LabelError(std::string("root label: ") + e.what());
  }
}

// ---------------------------------------------------------------------------

ArrayWindow ArrayWindow::shifted(Position delta) const {
  ArrayWindow out = *this;
  for (auto& row : out.rows) {
    row.offset += delta;
    for (auto& m : row.markers) m += delta;
  }
  out.core = core.shifted(delta);
  return out;
}

bool ArrayWindow::agrees_on_overlap(const ArrayWindow& other) const {
  const std::size_t n = std::min(rows.size(), other.rows.size());
  for (std::size_t r = 0; r < n; ++r) {
    const auto& x = rows[r];
    const auto& y = other.rows[r];
    const Interval both = x.extent().intersect(y.extent());
    for (Position p = both.lo; p < both.hi; ++p) {
      if (x.symbols[static_cast<std::size_t>(p - x.offset)] !=
          y.symbols[static_cast<std::size_t>(p - y.offset)]) {
        return false;
      }
    }
    for (Position p = both.lo; p <= both.hi; ++p) {
      if (std::binary_search(x.markers.begin(), x.markers.end(), p) !=
          std::binary_search(y.markers.begin(), y.markers.end(), p)) {
        return false;
      }
    }
  }
  return true;
}

ArrayWindow path_to_window(const OrderedBratteliDiagram& d, const PathPrefix& p) {
  if (p.empty()) throw std::invalid_argument("path_to_window needs depth >= 1");
  const WidenSchedule schedule = schedule_of(d);
  auto trapezoid = [&](std::size_t k) {
    const VertexIndex v = p.vertex_at(k);
    const auto& label = d.label(k, v);
    const std::string where = "vertex " + std::to_string(v) + " of level " + std::to_string(k);
    if (!label) throw LabelError(where + " has no trapezoid label");
    try {
      Trapezoid t = Trapezoid::parse(*label);
      if (t.level() != k) throw LabelError(where + " holds a trapezoid of another level");
      return t;
    } catch (const ParseError& e) {
      throw LabelError(where + ": " + e.what());
    }
  };

  const std::size_t N = p.depth();
  const Trapezoid top = trapezoid(N);
  Trapezoid cur = top;
  Position origin = 0;
  for (std::size_t k = N; k >= 2; --k) {
    Decomposition dec;
    try {
      dec = decompose(cur, schedule);
    } catch (const InsufficientWindow& e) {
      throw LabelError(e.what());
    }
    const std::size_t order = p.edge_data(k).order;
    if (order >= dec.internal.size()) {
      throw LabelError("edge order " + std::to_string(order) + " at level " +
                       std::to_string(k) + " exceeds the internal trapezoid count " +
                       std::to_string(dec.internal.size()));
    }
    Trapezoid below = trapezoid(k - 1);
    if (!(dec.internal[order].trapezoid == below)) {
      throw LabelError("level " + std::to_string(k - 1) + " label differs from internal " +
                       "trapezoid " + std::to_string(order) + " of its level-" +
                       std::to_string(k) + " source");
    }
    origin += dec.internal[order].offset;
    cur = std::move(below);
  }

  ArrayWindow w;
  w.rows = top.rows();
  w.core = Interval{0, top.core_width()};
  return w.shifted(-origin);
}

}  // namespace bvm
