#pragma once

// Finite truncations of ordered Bratteli diagrams and finite paths in them.
//
// Level k holds the vertex set V_k (V_0 is the root level). Edges of E_k,
// k >= 1, run from a source in V_k up to a target in V_{k-1}. Edges sharing a
// source are linearly ordered by an explicit order value. Vertex identity is
// the pair (level, index); labels are opaque payload.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bvm {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

struct Edge {
  VertexIndex source = 0;  // index into V_k
  std::size_t order = 0;
  VertexIndex target = 0;  // index into V_{k-1}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Vertex {
  std::optional<std::string> label;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

class OrderedBratteliDiagram {
 public:
  // levels[k] is V_k; edges[k - 1] is E_k, so edges.size() must equal
  // levels.size() - 1. Edge endpoints must index existing vertices, otherwise
  // std::out_of_range is thrown. The axioms (singleton root, coverage, order
  // permutations) are not enforced here; see validate().
  //
  // Edges of each level are stored sorted by (source, order, target); an
  // EdgeIndex always refers to that sorted list.
  OrderedBratteliDiagram(std::vector<std::vector<Vertex>> levels,
                         std::vector<std::vector<Edge>> edges);

  // K, the number of levels below the root.
  std::size_t depth() const noexcept { return levels_.size() - 1; }
  std::size_t level_size(std::size_t k) const;
  std::size_t total_vertices() const noexcept;

  const Vertex& vertex(std::size_t k, VertexIndex v) const;
  const std::optional<std::string>& label(std::size_t k, VertexIndex v) const {
    return vertex(k, v).label;
  }

  // E_k for 1 <= k <= depth().
  std::span<const Edge> edges(std::size_t k) const;
  const Edge& edge(std::size_t k, EdgeIndex e) const;

  // Edges of E_k sourced at v in V_k, ascending by order value.
  std::span<const EdgeIndex> edges_from(std::size_t k, VertexIndex v) const;

  // Edges of E_{k+1} whose target is v in V_k (k < depth()), ascending by
  // (source, order).
  std::span<const EdgeIndex> edges_into(std::size_t k, VertexIndex v) const;

  // Position of edge e among edges_from(k, source(e)).
  std::size_t rank(std::size_t k, EdgeIndex e) const;
  bool is_max_edge(std::size_t k, EdgeIndex e) const;
  bool is_min_edge(std::size_t k, EdgeIndex e) const;

  friend bool operator==(const OrderedBratteliDiagram& a,
                         const OrderedBratteliDiagram& b) {
    return a.levels_ == b.levels_ && a.edges_ == b.edges_;
  }

 private:
  void check_level(std::size_t k) const;
  void check_edge_level(std::size_t k) const;

  std::vector<std::vector<Vertex>> levels_;
  std::vector<std::vector<Edge>> edges_;
  // out_[k-1][v], in_[k][v], rank_[k-1][e]
  std::vector<std::vector<std::vector<EdgeIndex>>> out_;
  std::vector<std::vector<std::vector<EdgeIndex>>> in_;
  std::vector<std::vector<std::size_t>> rank_;
};

// Incremental construction helper used by the catalog and the trapezoid
// builder.
class DiagramBuilder {
 public:
  DiagramBuilder();  // starts with the root level {v_0}

  // Appends level k = depth + 1 with n unlabeled vertices; returns k.
  std::size_t add_level(std::size_t n);
  void set_label(std::size_t k, VertexIndex v, std::string label);
  void add_edge(std::size_t k, VertexIndex source, std::size_t order,
                VertexIndex target);
  OrderedBratteliDiagram build() &&;

 private:
  std::vector<std::vector<Vertex>> levels_;
  std::vector<std::vector<Edge>> edges_;
};

struct Violation {
  enum class Kind {
    RootNotSingleton,
    EmptyLevel,
    UncoveredTarget,  // vertex of V_{k-1} is not the target of any edge in E_k
    NoOutgoingEdge,   // vertex of V_k, k >= 1, sources no edge
    OrderNotPermutation,
  };
  Kind kind;
  std::size_t level = 0;
  std::optional<VertexIndex> vertex;
  std::string message;
};

using ValidationReport = std::vector<Violation>;

// Every violated axiom, in deterministic (level, vertex) order. Empty iff the
// diagram is valid.
ValidationReport validate(const OrderedBratteliDiagram& d);

// Throws ValidationError describing the first few violations.
void require_valid(const OrderedBratteliDiagram& d);

std::string to_string(const Violation& v);

// A finite path e_1..e_N from the root: t(e_1) = v_0, t(e_{k+1}) = s(e_k).
// Holds a non-owning pointer to its diagram, which must outlive it.
class PathPrefix {
 public:
  explicit PathPrefix(const OrderedBratteliDiagram& d) : diagram_(&d) {}
  // edges[k-1] indexes E_k. Throws AdjacencyError on a broken chain or a
  // length beyond the truncation depth, std::out_of_range on a bad index.
  PathPrefix(const OrderedBratteliDiagram& d, std::vector<EdgeIndex> edges);

  const OrderedBratteliDiagram& diagram() const noexcept { return *diagram_; }
  std::size_t depth() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  std::span<const EdgeIndex> edges() const noexcept { return edges_; }

  // e_k for 1 <= k <= depth().
  EdgeIndex edge(std::size_t k) const { return edges_.at(k - 1); }
  const Edge& edge_data(std::size_t k) const {
    return diagram_->edge(k, edge(k));
  }

  // The vertex the path passes at level k: v_0 for k = 0, s(e_k) otherwise.
  VertexIndex vertex_at(std::size_t k) const;
  // Source of the path, the vertex at level depth().
  VertexIndex source() const { return vertex_at(depth()); }

  // First k edges.
  PathPrefix truncated(std::size_t k) const;

  friend bool operator==(const PathPrefix& a, const PathPrefix& b) {
    return a.diagram_ == b.diagram_ && a.edges_ == b.edges_;
  }
  // Plain lexicographic order on edge indices, for use in ordered containers.
  // Not the Vershik order; see compare_inverse_lex().
  friend std::strong_ordering operator<=>(const PathPrefix& a,
                                          const PathPrefix& b) {
    return a.edges_ <=> b.edges_;
  }

  friend PathPrefix extend(const PathPrefix& p, EdgeIndex e);

 private:
  const OrderedBratteliDiagram* diagram_;
  std::vector<EdgeIndex> edges_;
};

// Appends e (an index into E_{N+1}). Throws AdjacencyError if the prefix
// already has the truncation depth or t(e) is not the current source.
PathPrefix extend(const PathPrefix& p, EdgeIndex e);

}  // namespace bvm
