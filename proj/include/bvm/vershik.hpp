#pragma once

// Inverse-lexicographic successor and predecessor on path prefixes, and
// finite-depth diagnostics for the extremal path sets.
//
// All subsets of the infinite path space are handled through depth-D prefix
// sets (unions of cylinders), which are outer approximations of the sets they
// stand for. The metric on paths is d(x, y) = 2^-m, m the length of the longest
// common initial run of edges.

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bvm/diagram.hpp"

namespace bvm {

enum class Side { Max, Min };

std::string_view to_string(Side side);

// Outcome of one successor (or predecessor) step. When the step is not
// determined by the prefix (all edges maximal, resp. minimal) there is no
// path.
class SuccessorResult {
 public:
  static SuccessorResult determined(PathPrefix p) { return SuccessorResult(std::move(p)); }
  static SuccessorResult exhausted() { return SuccessorResult(); }

  bool is_determined() const noexcept { return path_.has_value(); }
  bool is_exhausted() const noexcept { return !path_.has_value(); }
  // Throws std::bad_optional_access when exhausted.
  const PathPrefix& path() const { return path_.value(); }

  friend bool operator==(const SuccessorResult&, const SuccessorResult&) = default;

 private:
  SuccessorResult() = default;
  explicit SuccessorResult(PathPrefix p) : path_(std::move(p)) {}
  std::optional<PathPrefix> path_;
};

// Union of the cylinders of a set of prefixes of a common depth.
class CylinderSet {
 public:
  explicit CylinderSet(std::size_t depth) : depth_(depth) {}

  // Throws std::invalid_argument on a depth mismatch. Duplicates are ignored.
  void insert(PathPrefix p);

  std::size_t depth() const noexcept { return depth_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(const PathPrefix& p) const { return members_.count(p) != 0; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

 private:
  std::size_t depth_;
  std::set<PathPrefix> members_;
};

// Inverse-lexicographic comparison. Prefixes are comparable only when they
// have equal depth and the same source; otherwise the result is unordered.
std::partial_ordering compare_inverse_lex(const PathPrefix& a, const PathPrefix& b);

// True iff every edge is the highest- (lowest-) order edge at its source.
// Throws std::invalid_argument on the empty prefix.
bool is_maximal_prefix(const PathPrefix& p);
bool is_minimal_prefix(const PathPrefix& p);
bool is_extremal_prefix(const PathPrefix& p, Side side);

// Next prefix in inverse-lexicographic order with the same depth and source.
// Throws std::invalid_argument on the empty prefix.
SuccessorResult successor(const PathPrefix& p);
SuccessorResult predecessor(const PathPrefix& p);

// Chain of extremal edges from (level k, vertex v) up to the root, as a
// prefix of depth k.
PathPrefix extremal_chain(const OrderedBratteliDiagram& d, std::size_t k,
                          VertexIndex v, Side side);

// Depth-N prefixes with all edges extremal; one per vertex of V_N.
// Throws std::out_of_range unless 1 <= N <= depth.
CylinderSet maximal_prefixes(const OrderedBratteliDiagram& d, std::size_t N);
CylinderSet minimal_prefixes(const OrderedBratteliDiagram& d, std::size_t N);
CylinderSet extremal_prefixes(const OrderedBratteliDiagram& d, std::size_t N,
                              Side side);

// Every prefix of depth N, in lexicographic order of edge indices.
std::vector<PathPrefix> all_prefixes(const OrderedBratteliDiagram& d, std::size_t N);

// Number of depth-K extensions of a vertex at level k (1 for k == K).
std::size_t count_extensions(const OrderedBratteliDiagram& d, std::size_t k,
                             VertexIndex v);

// Semi-decision report on whether a depth-N cylinder lies inside the extremal
// set. A candidate p has every extension down to probe_until still extremal.
// No candidates certifies, to that depth, that no depth-N cylinder lies in
// the extremal set; a candidate is only evidence of interior.
struct InteriorReport {
  Side side = Side::Max;
  std::size_t depth = 0;        // N
  std::size_t probe_depth = 0;  // requested D
  std::size_t probe_until = 0;  // min(N + D, K)
  std::vector<PathPrefix> candidates;
  // Extremal depth-N prefixes whose cylinder holds a single depth-K path.
  std::vector<PathPrefix> isolated;

  bool certified_absent() const noexcept { return candidates.empty(); }
  std::string verdict() const;
};

// Throws std::out_of_range unless 1 <= N and N + 1 <= depth.
InteriorReport interior_witness(const OrderedBratteliDiagram& d, Side side,
                                std::size_t N, std::size_t probe_depth);

struct Orbit {
  std::vector<PathPrefix> prefixes;  // starts with the input
  bool exhausted = false;            // stopped early at an undetermined step
};

// Iterates successor up to `steps` times.
Orbit orbit(const PathPrefix& p, std::size_t steps);

struct ImageDiameter {
  std::size_t n = 0;
  // 2^-m over the determined images, m their common initial run; 0 for at
  // most one distinct image.
  double diameter = 0.0;
  std::optional<std::size_t> common_prefix;  // m; empty when diameter is 0
  std::size_t determined_count = 0;          // distinct determined images
  std::size_t undetermined_count = 0;
};

// Diameter of the n-th successor image of minimal_prefixes(D), n = 0..n_max.
std::vector<ImageDiameter> image_diameter_profile(const OrderedBratteliDiagram& d,
                                                  std::size_t n_max, std::size_t D);

// Longest common initial edge run of a non-empty set of prefixes.
std::size_t common_prefix_length(const std::vector<PathPrefix>& prefixes);

// "i1/i2/.../iN", i_k the index of e_k in the serialized E_k list.
std::string format_path(const PathPrefix& p);
// Throws ParseError on bad syntax, AdjacencyError on a broken chain.
PathPrefix parse_path(const OrderedBratteliDiagram& d, std::string_view spec);

}  // namespace bvm
