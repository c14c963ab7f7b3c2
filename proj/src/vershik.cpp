#include "bvm/vershik.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bvm/error.hpp"

namespace bvm {

std::string_view to_string(Side side) { return side == Side::Max ? "max" : "min"; }

void CylinderSet::insert(PathPrefix p) {
  if (p.depth() != depth_) {
    throw std::invalid_argument("cylinder set of depth " + std::to_string(depth_) +
                                " cannot hold a prefix of depth " +
                                std::to_string(p.depth()));
  }
  members_.insert(std::move(p));
}

std::partial_ordering compare_inverse_lex(const PathPrefix& a, const PathPrefix& b) {
  if (&a.diagram() != &b.diagram() || a.depth() != b.depth() ||
      a.source() != b.source()) {
    return std::partial_ordering::unordered;
  }
  const auto& d = a.diagram();
  for (std::size_t k = a.depth(); k >= 1; --k) {
    if (a.edge(k) != b.edge(k)) {
      // Same target above equal edges means the same source here.
      return d.rank(k, a.edge(k)) <=> d.rank(k, b.edge(k));
    }
  }
  return std::partial_ordering::equivalent;
}

namespace {

void require_nonempty(const PathPrefix& p) {
  if (p.empty()) throw std::invalid_argument("operation needs a prefix of depth >= 1");
}

bool is_extremal_edge(const OrderedBratteliDiagram& d, std::size_t k, EdgeIndex e,
                      Side side) {
  return side == Side::Max ? d.is_max_edge(k, e) : d.is_min_edge(k, e);
}

// Shared body of successor/predecessor: bump the lowest-level non-extremal
// edge one step away from `side`, then reset everything above it to the
// opposite extreme.
SuccessorResult step(const PathPrefix& p, Side side) {
  require_nonempty(p);
  const auto& d = p.diagram();
  const std::size_t N = p.depth();
  std::size_t i = 1;
  while (i <= N && is_extremal_edge(d, i, p.edge(i), side)) ++i;
  if (i > N) return SuccessorResult::exhausted();

  std::vector<EdgeIndex> edges(p.edges().begin(), p.edges().end());
  const Edge& old = d.edge(i, edges[i - 1]);
  const auto siblings = d.edges_from(i, old.source);
  const std::size_t r = d.rank(i, edges[i - 1]);
  edges[i - 1] = side == Side::Max ? siblings[r + 1] : siblings[r - 1];

  VertexIndex v = d.edge(i, edges[i - 1]).target;
  for (std::size_t j = i - 1; j >= 1; --j) {
    const auto out = d.edges_from(j, v);
    edges[j - 1] = side == Side::Max ? out.front() : out.back();
    v = d.edge(j, edges[j - 1]).target;
  }
  return SuccessorResult::determined(PathPrefix(d, std::move(edges)));
}

}  // namespace

bool is_extremal_prefix(const PathPrefix& p, Side side) {
  require_nonempty(p);
  for (std::size_t k = 1; k <= p.depth(); ++k) {
    if (!is_extremal_edge(p.diagram(), k, p.edge(k), side)) return false;
  }
  return true;
}

bool is_maximal_prefix(const PathPrefix& p) { return is_extremal_prefix(p, Side::Max); }
bool is_minimal_prefix(const PathPrefix& p) { return is_extremal_prefix(p, Side::Min); }

SuccessorResult successor(const PathPrefix& p) { return step(p, Side::Max); }
SuccessorResult predecessor(const PathPrefix& p) { return step(p, Side::Min); }

PathPrefix extremal_chain(const OrderedBratteliDiagram& d, std::size_t k,
                          VertexIndex v, Side side) {
  std::vector<EdgeIndex> edges(k);
  for (std::size_t j = k; j >= 1; --j) {
    const auto out = d.edges_from(j, v);
    if (out.empty()) {
      throw ValidationError("vertex " + std::to_string(v) + " of level " +
                            std::to_string(j) + " sources no edge");
    }
    edges[j - 1] = side == Side::Max ? out.back() : out.front();
    v = d.edge(j, edges[j - 1]).target;
  }
  return PathPrefix(d, std::move(edges));
}

CylinderSet extremal_prefixes(const OrderedBratteliDiagram& d, std::size_t N,
                              Side side) {
  if (N == 0 || N > d.depth()) {
    throw std::out_of_range("prefix depth " + std::to_string(N) + " outside [1, " +
                            std::to_string(d.depth()) + "]");
  }
  CylinderSet set(N);
  for (VertexIndex v = 0; v < d.level_size(N); ++v) {
    set.insert(extremal_chain(d, N, v, side));
  }
  return set;
}

CylinderSet maximal_prefixes(const OrderedBratteliDiagram& d, std::size_t N) {
  return extremal_prefixes(d, N, Side::Max);
}

CylinderSet minimal_prefixes(const OrderedBratteliDiagram& d, std::size_t N) {
  return extremal_prefixes(d, N, Side::Min);
}

std::vector<PathPrefix> all_prefixes(const OrderedBratteliDiagram& d, std::size_t N) {
  if (N > d.depth()) throw std::out_of_range("prefix depth beyond diagram depth");
  std::vector<PathPrefix> layer{PathPrefix(d)};
  for (std::size_t k = 1; k <= N; ++k) {
    std::vector<PathPrefix> next;
    for (const auto& p : layer) {
      for (EdgeIndex e : d.edges_into(k - 1, p.source())) next.push_back(extend(p, e));
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

namespace {

// counts[v] = number of downward paths from (k, v) to level K, saturating.
std::vector<std::size_t> extension_counts(const OrderedBratteliDiagram& d,
                                          std::size_t k) {
  constexpr std::size_t cap = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> below(d.level_size(d.depth()), 1);
  for (std::size_t level = d.depth(); level > k; --level) {
    std::vector<std::size_t> here(d.level_size(level - 1), 0);
    for (VertexIndex v = 0; v < here.size(); ++v) {
      for (EdgeIndex e : d.edges_into(level - 1, v)) {
        const std::size_t add = below[d.edge(level, e).source];
        here[v] = here[v] > cap - add ? cap : here[v] + add;
      }
    }
    below = std::move(here);
  }
  return below;
}

}  // namespace

std::size_t count_extensions(const OrderedBratteliDiagram& d, std::size_t k,
                             VertexIndex v) {
  return extension_counts(d, k).at(v);
}

std::string InteriorReport::verdict() const {
  if (certified_absent()) {
    return "certified absent to depth " + std::to_string(probe_until);
  }
  return "candidate witness (" + std::to_string(candidates.size()) + ")";
}

InteriorReport interior_witness(const OrderedBratteliDiagram& d, Side side,
                                std::size_t N, std::size_t probe_depth) {
  if (N == 0 || N + 1 > d.depth()) {
    throw std::out_of_range("interior probe needs 1 <= N < depth; got N = " +
                            std::to_string(N) + ", depth " +
                            std::to_string(d.depth()));
  }
  InteriorReport report;
  report.side = side;
  report.depth = N;
  report.probe_depth = probe_depth;
  report.probe_until = std::min(N + probe_depth, d.depth());

  // good[v] at level k: every downward path from v to probe_until uses only
  // extremal edges.
  std::vector<char> good(d.level_size(report.probe_until), 1);
  for (std::size_t level = report.probe_until; level > N; --level) {
    std::vector<char> here(d.level_size(level - 1), 1);
    for (VertexIndex v = 0; v < here.size(); ++v) {
      for (EdgeIndex e : d.edges_into(level - 1, v)) {
        if (!is_extremal_edge(d, level, e, side) || !good[d.edge(level, e).source]) {
          here[v] = 0;
          break;
        }
      }
    }
    good = std::move(here);
  }

  const auto counts = extension_counts(d, N);
  for (const PathPrefix& p : extremal_prefixes(d, N, side)) {
    if (good[p.source()]) report.candidates.push_back(p);
    if (counts[p.source()] == 1) report.isolated.push_back(p);
  }
  return report;
}

Orbit orbit(const PathPrefix& p, std::size_t steps) {
  Orbit out;
  out.prefixes.push_back(p);
  for (std::size_t s = 0; s < steps; ++s) {
    auto next = successor(out.prefixes.back());
    if (next.is_exhausted()) {
      out.exhausted = true;
      break;
    }
    out.prefixes.push_back(next.path());
  }
  return out;
}

std::size_t common_prefix_length(const std::vector<PathPrefix>& prefixes) {
  if (prefixes.empty()) throw std::invalid_argument("empty prefix set");
  std::size_t m = prefixes.front().depth();
  const auto first = prefixes.front().edges();
  for (const auto& p : prefixes) {
    std::size_t j = 0;
    const auto e = p.edges();
    while (j < m && j < e.size() && e[j] == first[j]) ++j;
    m = j;
  }
  return m;
}

std::vector<ImageDiameter> image_diameter_profile(const OrderedBratteliDiagram& d,
                                                  std::size_t n_max, std::size_t D) {
  std::vector<std::optional<PathPrefix>> images;
  for (const auto& p : minimal_prefixes(d, D)) images.emplace_back(p);

  std::vector<ImageDiameter> profile;
  for (std::size_t n = 0; n <= n_max; ++n) {
    ImageDiameter row;
    row.n = n;
    std::set<PathPrefix> distinct;
    for (const auto& img : images) {
      if (img) {
        distinct.insert(*img);
      } else {
        ++row.undetermined_count;
      }
    }
    row.determined_count = distinct.size();
    if (distinct.size() > 1) {
      const std::size_t m =
          common_prefix_length(std::vector<PathPrefix>(distinct.begin(), distinct.end()));
      row.common_prefix = m;
      row.diameter = std::ldexp(1.0, -static_cast<int>(m));
    }
    profile.push_back(std::move(row));

    if (n == n_max) break;
    for (auto& img : images) {
      if (!img) continue;
      auto next = successor(*img);
      if (next.is_determined()) {
        img = next.path();
      } else {
        img.reset();
      }
    }
  }
  return profile;
}

std::string format_path(const PathPrefix& p) {
  std::string out;
  for (std::size_t k = 1; k <= p.depth(); ++k) {
    if (k > 1) out += '/';
    out += std::to_string(p.edge(k));
  }
  return out;
}

PathPrefix parse_path(const OrderedBratteliDiagram& d, std::string_view spec) {
  if (spec.empty()) throw ParseError(0, "empty path");
  std::vector<EdgeIndex> edges;
  std::size_t pos = 0;
  while (true) {
    const std::size_t slash = spec.find('/', pos);
    const std::string_view part =
        spec.substr(pos, slash == std::string_view::npos ? spec.npos : slash - pos);
    EdgeIndex value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw ParseError(0, "malformed path component '" + std::string(part) +
                              "' in '" + std::string(spec) + "'");
    }
    const std::size_t k = edges.size() + 1;
    if (k > d.depth()) {
      throw AdjacencyError("path '" + std::string(spec) + "' exceeds truncation depth " +
                           std::to_string(d.depth()));
    }
    if (value >= d.edges(k).size()) {
      throw ParseError(0, "edge index " + std::to_string(value) + " outside E_" +
                              std::to_string(k) + " (size " +
                              std::to_string(d.edges(k).size()) + ")");
    }
    edges.push_back(value);
    if (slash == std::string_view::npos) break;
    pos = slash + 1;
  }
  return PathPrefix(d, std::move(edges));
}

}  // namespace bvm
