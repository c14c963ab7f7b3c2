#include "bvm/diagram.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bvm/error.hpp"

namespace bvm {

OrderedBratteliDiagram::OrderedBratteliDiagram(
    std::vector<std::vector<Vertex>> levels, std::vector<std::vector<Edge>> edges)
    : levels_(std::move(levels)), edges_(std::move(edges)) {
  if (levels_.empty()) {
    throw std::invalid_argument("diagram needs at least the root level");
  }
  if (edges_.size() + 1 != levels_.size()) {
    throw std::invalid_argument("expected one edge list per level below the root");
  }
  const std::size_t K = depth();
  out_.resize(K);
  in_.resize(K);
  rank_.resize(K);
  for (std::size_t k = 1; k <= K; ++k) {
    auto& list = edges_[k - 1];
    for (const Edge& e : list) {
      if (e.source >= levels_[k].size()) {
        throw std::out_of_range("edge at level " + std::to_string(k) +
                                " has source " + std::to_string(e.source) +
                                " outside V_" + std::to_string(k));
      }
      if (e.target >= levels_[k - 1].size()) {
        throw std::out_of_range("edge at level " + std::to_string(k) +
                                " has target " + std::to_string(e.target) +
                                " outside V_" + std::to_string(k - 1));
      }
    }
    std::stable_sort(list.begin(), list.end());

    out_[k - 1].assign(levels_[k].size(), {});
    in_[k - 1].assign(levels_[k - 1].size(), {});
    rank_[k - 1].assign(list.size(), 0);
    for (EdgeIndex i = 0; i < list.size(); ++i) {
      auto& out = out_[k - 1][list[i].source];
      rank_[k - 1][i] = out.size();
      out.push_back(i);
      in_[k - 1][list[i].target].push_back(i);
    }
  }
}

std::size_t OrderedBratteliDiagram::level_size(std::size_t k) const {
  check_level(k);
  return levels_[k].size();
}

std::size_t OrderedBratteliDiagram::total_vertices() const noexcept {
  std::size_t n = 0;
  for (const auto& l : levels_) n += l.size();
  return n;
}

const Vertex& OrderedBratteliDiagram::vertex(std::size_t k, VertexIndex v) const {
  check_level(k);
  if (v >= levels_[k].size()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside V_" +
                            std::to_string(k));
  }
  return levels_[k][v];
}

std::span<const Edge> OrderedBratteliDiagram::edges(std::size_t k) const {
  check_edge_level(k);
  return edges_[k - 1];
}

const Edge& OrderedBratteliDiagram::edge(std::size_t k, EdgeIndex e) const {
  check_edge_level(k);
  if (e >= edges_[k - 1].size()) {
    throw std::out_of_range("edge " + std::to_string(e) + " outside E_" +
                            std::to_string(k));
  }
  return edges_[k - 1][e];
}

std::span<const EdgeIndex> OrderedBratteliDiagram::edges_from(std::size_t k,
                                                              VertexIndex v) const {
  check_edge_level(k);
  if (v >= levels_[k].size()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside V_" +
                            std::to_string(k));
  }
  return out_[k - 1][v];
}

std::span<const EdgeIndex> OrderedBratteliDiagram::edges_into(std::size_t k,
                                                              VertexIndex v) const {
  if (k >= depth()) {
    throw std::out_of_range("no edges below level " + std::to_string(k));
  }
  if (v >= levels_[k].size()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside V_" +
                            std::to_string(k));
  }
  return in_[k][v];
}

std::size_t OrderedBratteliDiagram::rank(std::size_t k, EdgeIndex e) const {
  edge(k, e);  // range check
  return rank_[k - 1][e];
}

bool OrderedBratteliDiagram::is_max_edge(std::size_t k, EdgeIndex e) const {
  const Edge& ed = edge(k, e);
  return rank_[k - 1][e] + 1 == out_[k - 1][ed.source].size();
}

bool OrderedBratteliDiagram::is_min_edge(std::size_t k, EdgeIndex e) const {
  edge(k, e);
  return rank_[k - 1][e] == 0;
}

void OrderedBratteliDiagram::check_level(std::size_t k) const {
  if (k >= levels_.size()) {
    throw std::out_of_range("level " + std::to_string(k) + " beyond depth " +
                            std::to_string(depth()));
  }
}

void OrderedBratteliDiagram::check_edge_level(std::size_t k) const {
  if (k == 0 || k > depth()) {
    throw std::out_of_range("edge level " + std::to_string(k) +
                            " outside [1, " + std::to_string(depth()) + "]");
  }
}

// DiagramBuilder ------------------------------------------------------------

DiagramBuilder::DiagramBuilder() : levels_(1, std::vector<Vertex>(1)) {}

std::size_t DiagramBuilder::add_level(std::size_t n) {
  levels_.emplace_back(n);
  edges_.emplace_back();
  return levels_.size() - 1;
}

void DiagramBuilder::set_label(std::size_t k, VertexIndex v, std::string label) {
  levels_.at(k).at(v).label = std::move(label);
}

void DiagramBuilder::add_edge(std::size_t k, VertexIndex source, std::size_t order,
                              VertexIndex target) {
  if (k == 0 || k > edges_.size()) {
    throw std::out_of_range("edge level " + std::to_string(k) + " not yet added");
  }
  edges_[k - 1].push_back(Edge{source, order, target});
}

OrderedBratteliDiagram DiagramBuilder::build() && {
  return OrderedBratteliDiagram(std::move(levels_), std::move(edges_));
}

// Validation ----------------------------------------------------------------

ValidationReport validate(const OrderedBratteliDiagram& d) {
  ValidationReport report;
  auto add = [&](Violation::Kind kind, std::size_t level,
                 std::optional<VertexIndex> v, std::string msg) {
    report.push_back(Violation{kind, level, v, std::move(msg)});
  };

  if (d.level_size(0) != 1) {
    add(Violation::Kind::RootNotSingleton, 0, std::nullopt,
        "root not singleton: V_0 has " + std::to_string(d.level_size(0)) +
            " vertices");
  }
  for (std::size_t k = 1; k <= d.depth(); ++k) {
    if (d.level_size(k) == 0) {
      add(Violation::Kind::EmptyLevel, k, std::nullopt,
          "level " + std::to_string(k) + " is empty");
    }
    for (VertexIndex t = 0; t < d.level_size(k - 1); ++t) {
      if (d.edges_into(k - 1, t).empty()) {
        add(Violation::Kind::UncoveredTarget, k - 1, t,
            "vertex " + std::to_string(t) + " of level " + std::to_string(k - 1) +
                " is not the target of any edge");
      }
    }
    for (VertexIndex v = 0; v < d.level_size(k); ++v) {
      auto out = d.edges_from(k, v);
      if (out.empty()) {
        add(Violation::Kind::NoOutgoingEdge, k, v,
            "vertex " + std::to_string(v) + " of level " + std::to_string(k) +
                " is not the source of any edge");
        continue;
      }
      // out is sorted by order, so a permutation of 0..n-1 reads 0,1,2,...
      for (std::size_t i = 0; i < out.size(); ++i) {
        if (d.edge(k, out[i]).order != i) {
          std::ostringstream os;
          os << "order not a permutation at level " << k << " vertex " << v
             << ": {";
          for (std::size_t j = 0; j < out.size(); ++j) {
            os << (j ? "," : "") << d.edge(k, out[j]).order;
          }
          os << "}";
          add(Violation::Kind::OrderNotPermutation, k, v, os.str());
          break;
        }
      }
    }
  }
  return report;
}

void require_valid(const OrderedBratteliDiagram& d) {
  const auto report = validate(d);
  if (report.empty()) return;
  std::string msg = "invalid diagram:";
  for (std::size_t i = 0; i < report.size() && i < 5; ++i) {
    msg += "\n  " + report[i].message;
  }
  if (report.size() > 5) {
    msg += "\n  (" + std::to_string(report.size() - 5) + " more)";
  }
  throw ValidationError(msg);
}

std::string to_string(const Violation& v) { return v.message; }

// PathPrefix ----------------------------------------------------------------

PathPrefix::PathPrefix(const OrderedBratteliDiagram& d, std::vector<EdgeIndex> edges)
    : diagram_(&d) {
  if (edges.size() > d.depth()) {
    throw AdjacencyError("path of length " + std::to_string(edges.size()) +
                         " exceeds truncation depth " + std::to_string(d.depth()));
  }
  edges_.reserve(edges.size());
  PathPrefix& self = *this;
  for (EdgeIndex e : edges) self = extend(self, e);
}

VertexIndex PathPrefix::vertex_at(std::size_t k) const {
  if (k > depth()) {
    throw std::out_of_range("level " + std::to_string(k) + " beyond path depth " +
                            std::to_string(depth()));
  }
  return k == 0 ? 0 : diagram_->edge(k, edges_[k - 1]).source;
}

PathPrefix PathPrefix::truncated(std::size_t k) const {
  if (k > depth()) throw std::out_of_range("truncation beyond path depth");
  PathPrefix p(*diagram_);
  p.edges_.assign(edges_.begin(), edges_.begin() + static_cast<std::ptrdiff_t>(k));
  return p;
}

PathPrefix extend(const PathPrefix& p, EdgeIndex e) {
  const auto& d = p.diagram();
  const std::size_t k = p.depth() + 1;
  if (k > d.depth()) {
    throw AdjacencyError("extension exceeds truncation depth " +
                         std::to_string(d.depth()));
  }
  const Edge& ed = d.edge(k, e);
  if (ed.target != p.source()) {
    throw AdjacencyError("edge " + std::to_string(e) + " of level " +
                         std::to_string(k) + " targets vertex " +
                         std::to_string(ed.target) + ", path ends at vertex " +
                         std::to_string(p.source()));
  }
  PathPrefix out = p;
  out.edges_.push_back(e);
  return out;
}

}  // namespace bvm
