// Acceptance harness: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Expected values either come from the drawn trapezoid
// listings (expected_trapezoids.hpp) or from the reference code in oracle.hpp.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bvm/catalog.hpp"
#include "bvm/markers.hpp"
#include "bvm/trapezoid.hpp"
#include "bvm/vershik.hpp"
#include "expected_trapezoids.hpp"
#include "oracle.hpp"

using namespace bvm;

namespace {

// Pinned limits.
constexpr double kLevelCountSeconds = 60.0;
constexpr double kExhaustiveMarkerSeconds = 10.0;
constexpr std::size_t kRandomWords = 1000;
constexpr std::size_t kRandomWordLength = 24;
constexpr Position kMaxShift = 6;
constexpr std::uint32_t kSeed = 20240917;

const WidenSchedule kFig = WidenSchedule::figures();
const std::size_t kL = dependence_bound(3, kFig) + 2;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const std::vector<std::vector<Trapezoid>>& levels_at(std::size_t L) {
  static std::vector<std::pair<std::size_t, std::vector<std::vector<Trapezoid>>>> cache;
  for (const auto& [len, lv] : cache) {
    if (len == L) return lv;
  }
  cache.emplace_back(L, enumerate_levels(3, kFig, L, 1));
  return cache.back().second;
}

std::string word_of(std::uint64_t bits, std::size_t L) {
  std::string w(L, '0');
  for (std::size_t i = 0; i < L; ++i) {
    if ((bits >> i) & 1U) w[i] = '1';
  }
  return w;
}

bool contains(const std::vector<Position>& v, Position p) {
  return std::binary_search(v.begin(), v.end(), p);
}

// --- criteria --------------------------------------------------------------

Outcome level_counts() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto& lv = levels_at(kL);
  const double secs = seconds_since(t0);
  Outcome o;
  std::ostringstream os;
  os << "L=" << kL << " V_1=" << lv[0].size() << " V_2=" << lv[1].size()
     << " V_3=" << lv[2].size() << " in " << secs << "s";
  o.detail = os.str();
  o.pass = lv[0].size() == 2 && lv[1].size() == 11 && lv[2].size() == 15 &&
           secs < kLevelCountSeconds;
  return o;
}

Outcome level_contents() {
  std::set<std::string> got;
  for (const auto& t : levels_at(kL)[1]) got.insert(render(t));
  const std::set<std::string> want(expected::level2.begin(), expected::level2.end());
  Outcome o;
  o.pass = got == want;
  std::size_t matched = 0;
  for (const auto& s : got) matched += want.count(s);
  o.detail = std::to_string(matched) + "/" + std::to_string(want.size()) +
             " drawn 2-trapezoids matched, " + std::to_string(got.size()) + " enumerated";
  return o;
}

Outcome marker_invariants() {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t bad = 0;
  for (std::uint64_t bits = 0; bits < (1U << 12); ++bits) {
    const std::string w = word_of(bits, 12);
    const MarkedWord mw = mark_all_rows(w, 3);
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto& row = mw.row(k);
      const auto want = oracle::markers(w, k);
      if (row.markers != std::vector<Position>(want.begin(), want.end())) ++bad;
      if (k == 1 && static_cast<Position>(row.markers.size()) != row.determined.size()) ++bad;
      for (std::size_t i = 1; i < row.markers.size(); ++i) {
        if (row.markers[i] - row.markers[i - 1] > static_cast<Position>(k)) ++bad;
      }
      if (k >= 2) {
        const auto& above = mw.row(k - 1);
        const Interval common = row.determined.intersect(above.determined);
        for (Position m : row.markers) {
          if (common.contains(m) && !contains(above.markers, m)) ++bad;
        }
      }
    }
  }
  const double secs = seconds_since(t0);
  Outcome o;
  o.pass = bad == 0 && secs < kExhaustiveMarkerSeconds;
  o.detail = std::to_string(bad) + " violations over 4096 words, rows 1-3, in " +
             std::to_string(secs) + "s";
  return o;
}

Outcome shift_equivariance() {
  std::mt19937 rng(kSeed);
  std::size_t bad = 0, checked = 0;
  for (std::size_t t = 0; t < kRandomWords; ++t) {
    std::string w(kRandomWordLength, '0');
    for (auto& c : w) c = (rng() & 1U) ? '1' : '0';
    for (Position s = 1; s <= kMaxShift; ++s) {
      const std::string tail = w.substr(static_cast<std::size_t>(s));
      for (std::size_t k = 1; 3 * k - 2 <= tail.size(); ++k) {
        const auto full = row_markers(w, k);
        const auto cut = row_markers(tail, k);
        const Interval common = full.determined.intersect(cut.determined.shifted(s));
        for (Position p = common.lo; p <= common.hi; ++p) {
          ++checked;
          if (contains(full.markers, p) != contains(cut.markers, p - s)) ++bad;
        }
      }
    }
  }
  return {bad == 0, std::to_string(bad) + " mismatches in " + std::to_string(checked) +
                        " positions (1000 words, shifts 1-6)"};
}

Outcome domination_prefix() {
  std::size_t bad = 0, pairs = 0;
  for (std::size_t len = 2; len <= 8; ++len) {
    for (std::uint64_t a = 0; a < (1U << len); ++a) {
      for (std::uint64_t b = 0; b < (1U << len); ++b) {
        // Most significant bit first.
        std::string sa(len, '0'), sb(len, '0');
        for (std::size_t i = 0; i < len; ++i) {
          sa[i] = ((a >> (len - 1 - i)) & 1U) ? '1' : '0';
          sb[i] = ((b >> (len - 1 - i)) & 1U) ? '1' : '0';
        }
        ++pairs;
        if (dominates(sa, sb) != (a >= b)) ++bad;
        if (dominates(sa, sb) && !dominates(sa.substr(0, len - 1), sb.substr(0, len - 1))) ++bad;
      }
    }
  }
  return {bad == 0, std::to_string(bad) + " violations over " + std::to_string(pairs) +
                        " pairs, lengths 2-8"};
}

Outcome successor_is_shift() {
  const auto d = build_diagram(levels_at(kL), kFig);
  std::size_t bad = 0, checked = 0;
  for (const auto& p : all_prefixes(d, 3)) {
    const auto s = successor(p);
    if (s.is_exhausted()) continue;
    ++checked;
    const auto here = path_to_window(d, p).shifted(-1);
    const auto next = path_to_window(d, s.path());
    if (!next.agrees_on_overlap(here) || next.core != here.core) ++bad;
  }
  return {bad == 0 && checked > 0, std::to_string(bad) + " violations over " +
                                       std::to_string(checked) + " non-maximal depth-3 prefixes"};
}

Outcome odometer_counter() {
  const std::size_t K = 10;
  const auto d = odometer(K);
  const auto o = orbit(*minimal_prefixes(d, K).begin(), (1U << K) - 1);
  std::size_t bad = o.prefixes.size() == (1U << K) ? 0 : 1;
  for (std::uint64_t c = 0; c < o.prefixes.size(); ++c) {
    const auto want = oracle::counter_orders(c, K);
    for (std::size_t k = 1; k <= K; ++k) {
      if (o.prefixes[c].edge_data(k).order != want[k - 1]) {
        ++bad;
        break;
      }
    }
  }
  if (o.exhausted || successor(o.prefixes.back()).is_determined()) ++bad;
  return {bad == 0, std::to_string(o.prefixes.size()) + " prefixes, " + std::to_string(bad) +
                        " out of counter order"};
}

Outcome brute_force_successor() {
  std::size_t bad = 0, checked = 0;
  for (const auto& name : catalog_names()) {
    for (std::size_t K = 1; K <= 5; ++K) {
      if (K < 2 && (name == "example-7-2" || name == "example-7-3")) continue;
      const auto d = by_name(name, K);
      for (std::size_t N = 1; N <= K; ++N) {
        const auto all = oracle::paths(d, N);
        for (const auto& p : all) {
          ++checked;
          const auto want = oracle::next_inverse_lex_or_empty(d, all, p);
          const auto got = successor(PathPrefix(d, p));
          if (want.empty() != got.is_exhausted()) {
            ++bad;
          } else if (!want.empty() &&
                     std::vector<EdgeIndex>(got.path().edges().begin(),
                                            got.path().edges().end()) != want) {
            ++bad;
          }
        }
      }
    }
  }
  return {bad == 0, std::to_string(bad) + " mismatches over " + std::to_string(checked) +
                        " prefixes"};
}

Outcome shrinking_images() {
  const std::size_t D = 8;
  const auto d = example_7_2(D);
  const std::vector<std::size_t> ns{1, 2, 4, 8, 16, 32};
  const auto profile = image_diameter_profile(d, ns.back(), D);

  // Starting points, split by the level-1 vertex they pass.
  // Level k holds 2^(k-1) left vertices, then the centre.
  std::vector<PathPrefix> through_u;
  for (const auto& p : minimal_prefixes(d, D)) {
    if (d.label(1, p.vertex_at(1)) == "u") through_u.push_back(p);
  }
  const PathPrefix central = extremal_chain(d, D, VertexIndex{1} << (D - 1), Side::Min);

  bool pass = d.label(1, central.vertex_at(1)) == "v" && !through_u.empty();
  std::ostringstream os;
  double last = 2.0;
  for (std::size_t n : ns) {
    const auto m = static_cast<std::size_t>(std::floor(std::log2(static_cast<double>(n)))) + 1;
    const Orbit c = orbit(central, n);
    if (c.exhausted) {
      pass = false;
      continue;
    }
    std::size_t shortest = D;
    for (const auto& p : through_u) {
      const Orbit o = orbit(p, n);
      if (o.exhausted) continue;
      shortest = std::min(shortest,
                          common_prefix_length({o.prefixes.back(), c.prefixes.back()}));
    }
    const double diam = profile[n].diameter;
    pass = pass && shortest >= m && diam <= std::ldexp(1.0, -static_cast<int>(m)) && diam <= last;
    last = diam;
    os << "n=" << n << ":" << shortest << "/" << m << "/" << diam << " ";
  }
  std::string detail = os.str();
  detail += "(n:shared/needed/diameter)";
  return {pass, detail};
}

Outcome diagnostics_fixtures() {
  std::ostringstream os;
  bool pass = true;

  const auto tree = binary_tree(4);
  for (Side side : {Side::Max, Side::Min}) {
    const auto r = interior_witness(tree, side, 1, 2);
    pass = pass && r.candidates.size() == 2;
  }
  os << "binary tree both sides at depth 1; ";

  const auto fs = build_diagram(levels_at(kL), kFig);
  for (Side side : {Side::Max, Side::Min}) {
    const auto r = interior_witness(fs, side, 1, 2);
    pass = pass && r.certified_absent() && r.probe_until == 3;
  }
  os << "full shift none to depth 3; ";

  const std::size_t K = 6;
  const auto e = example_7_2(K);
  for (std::size_t N = 1; N + 2 <= K; ++N) {
    for (Side side : {Side::Max, Side::Min}) {
      const std::string family = side == Side::Max ? "w" : "u";
      std::set<PathPrefix> want;
      for (const auto& p : all_prefixes(e, N)) {
        if (e.label(1, p.vertex_at(1)) == family) want.insert(p);
      }
      const auto r = interior_witness(e, side, N, 2);
      const std::set<PathPrefix> got(r.candidates.begin(), r.candidates.end());
      pass = pass && got == want;
    }
  }
  os << "example 7.2 u/w families at N=1-4";
  return {pass, os.str()};
}

Outcome stabilization() {
  const auto& a = levels_at(kL);
  const auto& b = levels_at(kL + 2);
  return {a == b, "L=" + std::to_string(kL) + " vs L=" + std::to_string(kL + 2) + ": " +
                      std::to_string(b[0].size()) + "/" + std::to_string(b[1].size()) + "/" +
                      std::to_string(b[2].size())};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"level counts", level_counts},
      {"level-2 contents", level_contents},
      {"marker invariants", marker_invariants},
      {"shift equivariance", shift_equivariance},
      {"domination prefix property", domination_prefix},
      {"successor is the left shift", successor_is_shift},
      {"odometer counter", odometer_counter},
      {"brute-force successor", brute_force_successor},
      {"example 7.2 image shrinkage", shrinking_images},
      {"diagnostics fixtures", diagnostics_fixtures},
      {"stabilization", stabilization},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first
              << ": " << o.detail << std::endl;
    failed += o.pass ? 0 : 1;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
