#include <doctest.h>

#include <set>
#include <stdexcept>

#include "bvm/catalog.hpp"
#include "bvm/vershik.hpp"

using namespace bvm;

namespace {

// Vertices of level 1 a prefix passes through, by label.
std::string level1_label(const PathPrefix& p) {
  return p.diagram().label(1, p.vertex_at(1)).value_or("?");
}

}  // namespace

TEST_CASE("every catalog diagram validates") {
  for (const auto& name : catalog_names()) {
    for (std::size_t K = 2; K <= 10; ++K) {
      const auto d = by_name(name, K);
      CHECK(validate(d).empty());
      CHECK(maximal_prefixes(d, K).size() == d.level_size(K));
      CHECK(minimal_prefixes(d, K).size() == d.level_size(K));
    }
  }
}

TEST_CASE("constructors reject unsupported depths and names") {
  CHECK_THROWS_AS(binary_tree(0), std::invalid_argument);
  CHECK_THROWS_AS(odometer(0), std::invalid_argument);
  CHECK_THROWS_AS(example_7_2(1), std::invalid_argument);
  CHECK_THROWS_AS(example_7_3(1), std::invalid_argument);
  try {
    by_name("cantor", 3);
    FAIL("expected an error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("example-7-3") != std::string::npos);
  }
}

TEST_CASE("binary tree: every prefix is maximal and minimal") {
  const auto d = binary_tree(5);
  CHECK(d.level_size(5) == 32);
  for (const auto& p : all_prefixes(d, 5)) {
    CHECK(is_maximal_prefix(p));
    CHECK(is_minimal_prefix(p));
    CHECK(successor(p).is_exhausted());
  }
  CHECK(interior_witness(d, Side::Max, 1, 4).candidates.size() == 2);
}

TEST_CASE("odometer orbit runs through all prefixes") {
  const auto d = odometer(6);
  const auto o = orbit(*minimal_prefixes(d, 6).begin(), 1000);
  CHECK(o.prefixes.size() == 64);
  CHECK(o.exhausted);
  CHECK(is_maximal_prefix(o.prefixes.back()));
}

TEST_CASE("example 7.1 shape") {
  const auto d = example_7_1(4);
  CHECK(d.level_size(4) == 16);
  CHECK(d.edges_from(3, 0).size() == 1);
  CHECK(d.edges_from(3, 1).size() == 2);
  CHECK(d.edges_from(1, 1).size() == 2);
  CHECK(interior_witness(example_7_1(6), Side::Max, 1, 2).candidates.empty());
}

TEST_CASE("example 7.2: u is minimal, w is maximal") {
  const std::size_t K = 6;
  const auto d = example_7_2(K);
  CHECK(d.level_size(1) == 3);
  CHECK(d.level_size(4) == 17);
  for (std::size_t N = 1; N <= K; ++N) {
    for (const auto& p : all_prefixes(d, N)) {
      if (level1_label(p) == "u") CHECK(is_minimal_prefix(p));
      if (level1_label(p) == "w") CHECK(is_maximal_prefix(p));
    }
  }
  // Depth-N truncations of the depth-K extremal prefixes through v: one each
  // for N < K. At N = K side vertices may still enter the centre column.
  for (Side side : {Side::Max, Side::Min}) {
    for (std::size_t N = 1; N < K; ++N) {
      std::set<PathPrefix> through_v;
      for (const auto& p : extremal_prefixes(d, K, side)) {
        if (level1_label(p) == "v") through_v.insert(p.truncated(N));
      }
      CHECK(through_v.size() == 1);
    }
  }
  // The maximal prefix through v has no successor within the truncation.
  for (const auto& p : maximal_prefixes(d, K)) {
    if (level1_label(p) == "v") CHECK(successor(p).is_exhausted());
  }
}

TEST_CASE("example 7.3: two centre columns") {
  const std::size_t K = 5;
  const auto d = example_7_3(K);
  CHECK(d.level_size(1) == 4);
  CHECK(d.level_size(3) == 10);
  for (Side side : {Side::Max, Side::Min}) {
    std::set<std::string> centres;
    std::set<PathPrefix> truncated;
    for (const auto& p : extremal_prefixes(d, K, side)) {
      const auto l = level1_label(p);
      if (l == "v1" || l == "v2") {
        truncated.insert(p.truncated(K - 1));
        centres.insert(l);
      }
    }
    CHECK(truncated.size() == 2);
    CHECK(centres.size() == 2);
  }
  const auto wmax = interior_witness(d, Side::Max, 1, 3);
  REQUIRE(wmax.candidates.size() == 1);
  CHECK(level1_label(wmax.candidates[0]) == "w");
  const auto umin = interior_witness(d, Side::Min, 1, 3);
  REQUIRE(umin.candidates.size() == 1);
  CHECK(level1_label(umin.candidates[0]) == "u");
}
