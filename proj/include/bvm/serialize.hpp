#pragma once

// BVD text format (line based, '#' starts a comment outside quotes):
//
//   BVD 1
//   DEPTH <K>
//   LEVEL <k> <num_vertices>            k = 0..K in order
//   LABEL <k> <vertex> "<escaped text>" optional
//   EDGE <k> <source> <order> <target>  k in [1, K]
//
// Labels escape '\\', '"' and newline as \\, \" and \n.

#include <string>
#include <string_view>

#include "bvm/diagram.hpp"

namespace bvm {

std::string serialize(const OrderedBratteliDiagram& d);

// Throws ParseError (with a line number) on malformed text or dangling vertex
// references, ValidationError when the parsed diagram violates an axiom.
OrderedBratteliDiagram deserialize(std::string_view text);

// Directed graph drawn root-up: every edge points from its source (lower
// level) to its target, labelled with its order value. One rank per level.
std::string to_dot(const OrderedBratteliDiagram& d);

}  // namespace bvm
