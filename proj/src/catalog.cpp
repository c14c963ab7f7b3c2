#include "bvm/catalog.hpp"

#include <stdexcept>

namespace bvm {
namespace {

void require_depth(std::size_t K, std::size_t min, const char* name) {
  if (K < min) {
    throw std::invalid_argument(std::string(name) + " needs depth >= " + std::to_string(min));
  }
}

}  // namespace

OrderedBratteliDiagram binary_tree(std::size_t K) {
  require_depth(K, 1, "binary-tree");
  DiagramBuilder b;
  for (std::size_t k = 1; k <= K; ++k) {
    const std::size_t n = std::size_t{1} << k;
    b.add_level(n);
    for (VertexIndex j = 0; j < n; ++j) b.add_edge(k, j, 0, k == 1 ? 0 : j / 2);
  }
  return std::move(b).build();
}

OrderedBratteliDiagram odometer(std::size_t K) {
  require_depth(K, 1, "odometer");
  DiagramBuilder b;
  for (std::size_t k = 1; k <= K; ++k) {
    b.add_level(1);
    b.add_edge(k, 0, 0, 0);
    b.add_edge(k, 0, 1, 0);
  }
  return std::move(b).build();
}

OrderedBratteliDiagram example_7_1(std::size_t K) {
  require_depth(K, 1, "example-7-1");
  DiagramBuilder b;
  for (std::size_t k = 1; k <= K; ++k) {
    const std::size_t n = std::size_t{1} << k;
    b.add_level(n);
    for (VertexIndex j = 0; j < n; ++j) {
      const VertexIndex parent = k == 1 ? 0 : j / 2;
      b.add_edge(k, j, 0, parent);
      if (j % 2 == 1) b.add_edge(k, j, 1, parent);
    }
  }
  return std::move(b).build();
}

namespace {

// Shared body of the u/v/w diagrams with `centres` centre columns.
// Level k >= 2 lists the left family (2^(k-1) vertices), the centres, then
// the right family.
OrderedBratteliDiagram side_families(std::size_t K, std::size_t centres) {
  DiagramBuilder b;
  b.add_level(2 + centres);
  b.set_label(1, 0, "u");
  b.set_label(1, 1 + centres, "w");
  for (std::size_t c = 0; c < centres; ++c) {
    b.set_label(1, 1 + c, centres == 1 ? "v" : "v" + std::to_string(c + 1));
  }
  for (VertexIndex v = 0; v < 2 + centres; ++v) b.add_edge(1, v, 0, 0);

  // Which centre a side vertex j of level k (k >= 2) hangs under: the
  // level-2 ancestor decides, first half -> centre 0.
  auto centre_of = [&](std::size_t k, VertexIndex j) -> std::size_t {
    if (centres == 1) return 0;
    const std::size_t half = std::size_t{1} << (k - 2);
    return j < half ? 0 : 1;
  };

  for (std::size_t k = 2; k <= K; ++k) {
    const std::size_t n = std::size_t{1} << (k - 1);
    const std::size_t prev_n = k == 2 ? 1 : std::size_t{1} << (k - 2);
    b.add_level(2 * n + centres);
    // Index helpers at level k-1; at level 1 the families are u and w.
    auto left_parent = [&](VertexIndex j) { return k == 2 ? VertexIndex{0} : j / 2; };
    auto right_parent = [&](VertexIndex j) {
      return k == 2 ? VertexIndex{1 + centres} : prev_n + centres + j / 2;
    };
    auto centre_at = [&](std::size_t level, std::size_t c) {
      return level == 1 ? VertexIndex{1 + c} : (std::size_t{1} << (level - 1)) + c;
    };

    for (VertexIndex j = 0; j < n; ++j) {
      const VertexIndex left = j;
      b.add_edge(k, left, 0, left_parent(j));
      b.add_edge(k, left, 1, centre_at(k - 1, centre_of(k, j)));

      const VertexIndex right = n + centres + j;
      b.add_edge(k, right, 0, centre_at(k - 1, centre_of(k, j)));
      b.add_edge(k, right, 1, right_parent(j));
    }
    for (std::size_t c = 0; c < centres; ++c) {
      const VertexIndex v = n + c;
      b.add_edge(k, v, 0, centre_at(k - 1, c));
      b.add_edge(k, v, 1, centre_at(k - 1, c));
    }
  }
  return std::move(b).build();
}

}  // namespace

OrderedBratteliDiagram example_7_2(std::size_t K) {
  require_depth(K, 2, "example-7-2");
  return side_families(K, 1);
}

OrderedBratteliDiagram example_7_3(std::size_t K) {
  require_depth(K, 2, "example-7-3");
  return side_families(K, 2);
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"binary-tree", "odometer", "example-7-1",
                                              "example-7-2", "example-7-3"};
  return names;
}

OrderedBratteliDiagram by_name(std::string_view name, std::size_t K) {
  if (name == "binary-tree") return binary_tree(K);
  if (name == "odometer") return odometer(K);
  if (name == "example-7-1") return example_7_1(K);
  if (name == "example-7-2") return example_7_2(K);
  if (name == "example-7-3") return example_7_3(K);
  std::string valid;
  for (const auto& n : catalog_names()) valid += (valid.empty() ? "" : ", ") + n;
  throw std::invalid_argument("unknown diagram '" + std::string(name) + "'; valid: " + valid);
}

}  // namespace bvm
