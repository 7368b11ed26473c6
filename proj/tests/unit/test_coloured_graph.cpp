#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "twosym/coloured_graph.hpp"
#include "twosym/six_tuple.hpp"

using namespace twosym;

namespace {

std::vector<std::size_t> class_sizes(const ColouredGraph& g, ColourSet colours) {
  std::vector<std::size_t> sizes;
  for (const auto& c : residues(g, colours).classes) sizes.push_back(c.size());
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

ColouredGraph relabel(const ColouredGraph& g, unsigned seed) {
  std::vector<Vertex> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::mt19937 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::array<Involution, kColourCount> inv;
  for (Colour c = 0; c < kColourCount; ++c) {
    inv[c].resize(perm.size());
    for (Vertex v = 0; v < perm.size(); ++v) inv[c][perm[v]] = perm[g.neighbour(c, v)];
  }
  return ColouredGraph(inv);
}

}  // namespace

TEST_CASE("constructor rejects broken involutions") {
  CHECK_THROWS_AS(ColouredGraph({Involution{0, 1}, {1, 0}, {1, 0}, {1, 0}}), GraphError);
  CHECK_THROWS_AS(ColouredGraph({Involution{1, 2, 0}, {1, 0, 2}, {1, 0, 2}, {1, 0, 2}}), GraphError);
  CHECK_THROWS_AS(ColouredGraph({Involution{1, 0}, {1, 0}, {1, 0}, {1, 0, 3, 2}}), GraphError);
  CHECK_NOTHROW(ColouredGraph({Involution{1, 0}, {1, 0}, {1, 0}, {1, 0}}));
}

TEST_CASE("residue classes match an independent orbit trace") {
  const auto g = build_graph(SixTuple::make(1, 1, 1, 0, 0, 0));
  CHECK(class_sizes(g, ColourSet{0, 1}) == std::vector<std::size_t>{2, 2, 2});

  const auto f = SixTuple::make(1, 1, 3, 2, 0, 2);
  const auto g2 = build_graph(f);
  const auto ref = oracle::gamma({1, 1, 3}, {2, 0, 2});
  CHECK(class_sizes(g2, ColourSet{2, 3}) == oracle::orbit_sizes(ref, {2, 3}));
  CHECK(class_sizes(g2, ColourSet{2, 3}) == std::vector<std::size_t>{6, 2, 2});

  for (auto [h, q] : {std::pair{std::array{2, 2, 4}, std::array{3, 1, 1}},
                      {std::array{1, 3, 5}, std::array{2, 2, 0}},
                      {std::array{3, 3, 3}, std::array{0, 0, 2}}}) {
    const auto gg = build_graph(SixTuple::make(h[0], h[1], h[2], q[0], q[1], q[2]));
    const auto rr = oracle::gamma(h, q);
    for (auto cs : {std::vector<int>{0, 1}, {2, 3}, {0, 2}, {1, 3}, {0, 1, 2}, {1, 2, 3}}) {
      ColourSet set;
      for (int c : cs) set = ColourSet::from_bits(set.bits() | (1u << c));
      CHECK(class_sizes(gg, set) == oracle::orbit_sizes(rr, cs));
    }
  }
}

TEST_CASE("two-colour residues are listed in cycle order") {
  const auto g = build_graph(SixTuple::make(1, 3, 3, 2, 2, 2));
  for (const auto& cycle : residues(g, ColourSet{0, 1}).classes)
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const Vertex next = cycle[(k + 1) % cycle.size()];
      CHECK(g.neighbour(k % 2 == 0 ? 0 : 1, cycle[k]) == next);
    }
}

TEST_CASE("gem, contraction and bipartiteness of small crystallizations") {
  for (const char* text : {"(1,1,1;0,0,0)", "(1,1,3;2,0,2)", "(2,2,2;1,1,3)", "(1,3,3;2,2,2)"}) {
    const auto g = build_graph(parse_tuple(text));
    CHECK(is_connected(g));
    CHECK(is_gem(g));
    CHECK(is_contracted(g));
    CHECK(is_bipartite(g).has_value());
  }
  // Γ(1,1,3;2,0,2) already has one hat-c component per colour.
  const auto g = build_graph(SixTuple::make(1, 1, 3, 2, 0, 2));
  for (Colour c = 0; c < 4; ++c) CHECK(residue_count(g, hat(c)) == 1);
  // A 6-cycle over colours 0/1 with a colour-2 chord between vertices at even
  // distance closes an odd cycle.
  const ColouredGraph odd({Involution{1, 0, 3, 2, 5, 4}, {5, 2, 1, 4, 3, 0}, {2, 4, 0, 5, 1, 3},
                           {1, 0, 3, 2, 5, 4}});
  CHECK_FALSE(is_bipartite(odd).has_value());
}

TEST_CASE("cp-isomorphism is an equivalence and detects relabellings") {
  const auto g = build_graph(SixTuple::make(2, 2, 4, 3, 1, 1));
  CHECK(cp_isomorphic(g, g).has_value());
  const auto h = relabel(g, 7);
  const auto k = relabel(h, 11);
  const auto gh = cp_isomorphic(g, h);
  REQUIRE(gh.has_value());
  for (Colour c = 0; c < 4; ++c)
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      CHECK((*gh)[g.neighbour(c, v)] == h.neighbour(c, (*gh)[v]));
  CHECK(cp_isomorphic(h, g).has_value());
  CHECK(cp_isomorphic(g, k).has_value());
  CHECK_FALSE(cp_isomorphic(g, build_graph(SixTuple::make(2, 2, 4, 1, 1, 1))).has_value());
  CHECK_FALSE(cp_isomorphic(g, build_graph(SixTuple::make(1, 1, 1, 0, 0, 0))).has_value());
}

TEST_CASE("pair swaps recolour edges") {
  const auto g = build_graph(SixTuple::make(1, 1, 5, 0, 0, 2));
  const auto swapped = permute_colours(g, kPairSwaps[1]);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    CHECK(swapped.neighbour(1, v) == g.neighbour(0, v));
    CHECK(swapped.neighbour(0, v) == g.neighbour(1, v));
  }
  const auto iso = isomorphic_up_to_swaps(g, relabel(swapped, 3));
  REQUIRE(iso.has_value());
  CHECK_FALSE(iso->strict());
  CHECK_THROWS_AS(permute_colours(g, {0, 0, 2, 3}), GraphError);
}

TEST_CASE("regular embedding of every small graph has genus two") {
  for (const char* text : {"(1,1,1;0,0,0)", "(1,1,3;2,0,2)", "(2,2,2;1,1,3)"}) {
    const auto g = build_graph(parse_tuple(text));
    CHECK(embedding_euler(g, {0, 2, 1, 3}) == -2);
  }
  CHECK_THROWS_AS(embedding_euler(build_graph(SixTuple()), {0, 1, 1, 3}), GraphError);
}

TEST_CASE("remove_and_weld renumbers survivors and demands closed welds") {
  const auto g = build_graph(SixTuple::make(1, 1, 1, 0, 0, 0));
  const Vertex gone[] = {2};
  CHECK(surviving_index(5, gone) == 4);
  CHECK(surviving_index(1, gone) == 1);
  CHECK_THROWS_AS(remove_and_weld(g, gone, {}), GraphError);
}

TEST_CASE("dot export") {
  const auto dot = to_dot(build_graph(SixTuple()), "g");
  CHECK(dot.find("graph g {") == 0);
  CHECK(dot.find("v0 [label=\"(0,0)\"]") != std::string::npos);
  CHECK(dot.find("v0 -- v1 [color=0, style=solid]") != std::string::npos);
  CHECK(dot.find("style=dotted") != std::string::npos);
}
