#pragma once

// Small ordered diagrams used as fixtures and exposed by the CLI.
//
// Double edges are ordered 0 = left-drawn. Vertex labels name the drawn
// vertices where the figures name them (u, v, w, ...).

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bvm/diagram.hpp"

namespace bvm {

// |V_k| = 2^k, one edge from each vertex to its parent. Every path is both
// maximal and minimal. Throws std::invalid_argument unless K >= 1.
OrderedBratteliDiagram binary_tree(std::size_t K);

// Dyadic odometer: one vertex per level, two parallel edges ordered 0 < 1.
OrderedBratteliDiagram odometer(std::size_t K);

// |V_k| = 2^k; vertex j of level k hangs under vertex j/2, by a single edge
// for even j and a double edge for odd j.
OrderedBratteliDiagram example_7_1(std::size_t K);

// V_1 = {u, v, w}. Below level 1: a left family doubling under u, a centre
// odometer column under v, a right family doubling under w. Left vertices
// send order 0 to their left parent and order 1 to the centre; right
// vertices send order 0 to the centre and 1 to their right parent.
// Throws std::invalid_argument unless K >= 2.
OrderedBratteliDiagram example_7_2(std::size_t K);

// As example_7_2 with two disjoint centre columns v1, v2. Side vertices
// descending from the first level-2 vertex of their family attach to v1, the
// others to v2. Throws std::invalid_argument unless K >= 2.
OrderedBratteliDiagram example_7_3(std::size_t K);

const std::vector<std::string>& catalog_names();

// Throws std::invalid_argument for an unknown name (message lists the valid
// ones) or an unsupported K.
OrderedBratteliDiagram by_name(std::string_view name, std::size_t K);

}  // namespace bvm
