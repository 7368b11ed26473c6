#include <doctest.h>

#include "twosym/block.hpp"
#include "twosym/dipole.hpp"
#include "twosym/six_tuple.hpp"
#include "twosym/surgery.hpp"

using namespace twosym;

TEST_CASE("adding then cancelling a dipole restores the graph") {
  const auto g = build_graph(SixTuple::make(1, 3, 3, 2, 2, 2));
  for (ColourSet colours : {ColourSet{0}, ColourSet{0, 1}, ColourSet{2, 3}, ColourSet{0, 1, 2}}) {
    // Split every edge at vertex 5 of a colour outside the dipole: the new
    // vertex y then takes all of them and sits in its own residue.
    std::vector<Vertex> anchors(kColourCount, 0);
    for (Colour c : colours.complement().colours()) anchors[c] = g.neighbour(c, 5);
    const auto bigger = add_dipole(g, colours, anchors);
    REQUIRE(bigger.vertex_count() == g.vertex_count() + 2);
    const Dipole d{static_cast<Vertex>(g.vertex_count()), static_cast<Vertex>(g.vertex_count() + 1),
                   colours};
    CHECK(is_dipole(bigger, d));
    const auto back = cancel_dipole(bigger, d);
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(cp_isomorphic(back, g).has_value());
  }
}

TEST_CASE("dipole cancellation rejects non-dipoles") {
  const auto g = build_graph(SixTuple::make(1, 1, 3, 2, 0, 2));
  // Vertices joined by a 0-edge inside a single {1,2,3}-residue.
  const Dipole d{0, g.neighbour(0, 0), ColourSet{0}};
  CHECK_FALSE(is_dipole(g, d));
  CHECK_THROWS_AS(cancel_dipole(g, d), GraphError);
  for (const auto& found : find_dipoles(g)) CHECK(is_dipole(g, found));
}

TEST_CASE("Γ(f) has no gluing blocks over its own 2-edges") {
  for (const char* text : {"(1,1,3;2,0,2)", "(1,3,3;2,2,2)", "(2,2,2;1,1,3)"})
    CHECK(find_gluing_blocks(build_graph(parse_tuple(text)), 0, 1, 2).empty());
}

TEST_CASE("G(f) carries four gluing blocks and cancelling Γ(h1) restores Γ(f)") {
  for (const char* text : {"(1,3,3;2,2,2)", "(2,2,2;3,1,1)", "(1,1,3;2,0,2)", "(3,1,5;4,2,2)"}) {
    const auto f = parse_tuple(text);
    const auto trace = build_gf(f);
    CHECK(trace.graph.vertex_count() == 2 * static_cast<std::size_t>(f.complexity() + f.h(1)));
    CHECK(find_gluing_blocks(trace.graph, 0, 1, 3).size() == 4);
    CHECK_FALSE(is_contracted(trace.graph));
    CHECK(residue_count(trace.graph, hat(3)) == 2);
    validate_gluing_block(trace.graph, trace.gamma);
    const auto restored = cancel_block(trace.graph, trace.gamma);
    CHECK(cp_isomorphic(restored, build_graph(f)).has_value());
    CHECK(cp_isomorphic(cancel_block_by_dipoles(trace.graph, trace.gamma), restored).has_value());
    CHECK(cp_isomorphic(cancel_block_by_dipoles(trace.graph, trace.theta),
                        cancel_block(trace.graph, trace.theta))
              .has_value());
  }
}

TEST_CASE("coherence of a block with residue orientations") {
  Block b;
  b.side_a = {1, 2};
  b.side_b = {7, 6};
  const Orientation a{0, 1, 2, 3};
  const Orientation forward{5, 6, 7, 8};
  const Orientation backward{8, 7, 6, 5};
  const auto keys = coherent_key_vertices(b, a, forward);
  REQUIRE(keys.has_value());
  CHECK(keys->on_a == 1);
  CHECK(keys->on_b == 6);
  CHECK_FALSE(coherent_key_vertices(b, a, backward).has_value());
}

TEST_CASE("non-gluing blocks are rejected") {
  const auto g = build_graph(SixTuple::make(1, 1, 3, 2, 0, 2));
  Block b;
  b.rung = 3;
  b.side_a = {0};
  b.side_b = {g.neighbour(3, 0)};
  CHECK_THROWS_AS(validate_gluing_block(g, b), GraphError);
  CHECK_THROWS_AS(cancel_block(g, b), GraphError);
}
