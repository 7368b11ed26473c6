#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "twosym/moves.hpp"
#include "twosym/orbits.hpp"
#include "twosym/six_tuple.hpp"

using namespace twosym;

namespace {

SixTuple t(const char* text) { return parse_tuple(text); }

}  // namespace

TEST_CASE("trap witnesses") {
  auto w = is_trap(t("(1,1,3;2,0,2)"));
  REQUIRE(w.has_value());
  CHECK(w->r == 1);
  CHECK(w->s == 3);
  CHECK(w->d == 4);
  CHECK(trap_type(*w) == "1,3");
  CHECK(w->in_t(0));
  CHECK(w->in_t(2));
  CHECK_FALSE(w->in_t(1));
  CHECK(oracle::star_condition(1, 3, 2, 2, 50));

  w = is_trap(t("(1,1,9;0,0,4)"));
  REQUIRE(w.has_value());
  CHECK(trap_type(*w) == "1,9");
  CHECK(oracle::star_condition(w->r, w->s, w->base.q(0), w->base.q(2), 200));

  CHECK_FALSE(is_trap(t("(1,3,3;2,2,2)")).has_value());
  CHECK_FALSE(oracle::star_condition(3, 3, 2, 2, 50));
}

TEST_CASE("minimal tuples and roots") {
  CHECK(is_minimal(t("(2,2,2;1,1,3)")));
  CHECK_FALSE(is_minimal(t("(1,3,3;2,2,2)")));
  CHECK(is_minimal(t("(1,1,3;2,0,2)")));
  CHECK(is_root(t("(1,1,3;2,0,2)")));
  CHECK(is_root(t("(2,2,2;1,1,3)")));
  CHECK_FALSE(is_root(t("(1,3,3;2,2,2)")));
  for (const char* text : {"(2,2,2;1,1,3)", "(1,3,3;2,2,2)", "(1,1,3;2,0,2)"}) {
    CHECK(minimal_closed_form(t(text)) == minimal_by_delta(t(text)));
    CHECK(root_closed_form(t(text)) == root_by_delta(t(text)));
  }
  CHECK_THROWS_AS(is_minimal(t("(2,2,2;3,1,1)")), OrbitError);
  CHECK_THROWS_AS(is_root(t("(1,1,3;0,0,0)")), OrbitError);
}

TEST_CASE("descent") {
  CHECK(minimize(t("(1,3,3;2,2,2)")) == t("(2,2,2;1,1,3)"));
  CHECK(minimize(t("(2,2,2;1,1,3)")) == t("(2,2,2;1,1,3)"));
  CHECK(minimize(t("(3,1,3;2,2,2)")) == t("(2,2,2;1,1,3)"));
}

TEST_CASE("genus-two guard") {
  CHECK_FALSE(passes_genus_two_guard(t("(1,1,3;0,0,2)")));
  CHECK_FALSE(passes_genus_two_guard(SixTuple()));
  CHECK(passes_genus_two_guard(t("(1,3,3;2,2,2)")));
  CHECK(passes_genus_two_guard(t("(1,1,3;2,0,2)")));
}

TEST_CASE("ascent") {
  auto a = ascend_witness(t("(1,3,3;2,2,2)"));
  CHECK(a.tuple == t("(1,3,3;2,2,2)"));
  CHECK(delta(a.tuple) == 2);
  a = ascend_witness(t("(2,2,2;1,1,3)"));
  CHECK(delta(a.tuple) > 0);
  CHECK(complexity(a.tuple) == 6);
  CHECK_THROWS_AS(ascend_witness(t("(1,1,3;2,0,2)")), OrbitError);
  CHECK_THROWS_AS(ascend_witness(t("(1,1,3;0,0,2)")), OrbitError);
}

TEST_CASE("orbit exploration") {
  auto g = explore(t("(1,1,3;2,0,2)"), 30, 10000);
  CHECK(g.closed);
  CHECK_FALSE(g.truncated);
  CHECK(g.nodes.size() == 1);
  CHECK(g.edges.empty());

  g = explore(t("(1,3,3;2,2,2)"), 12, 10000);
  CHECK_FALSE(g.closed);
  for (const char* text : {"(2,2,2;1,1,3)", "(1,3,3;2,2,2)"}) CHECK(g.find(t(text)).has_value());
  bool has6 = false, has7 = false, has9 = false;
  for (const auto& n : g.nodes) {
    has6 |= n.complexity == 6;
    has7 |= n.complexity == 7;
    has9 |= n.complexity == 9;
  }
  CHECK((has6 && has7 && has9));
  for (auto [a, b] : g.edges) CHECK(a < b);

  const auto small = explore(t("(1,3,3;2,2,2)"), 40, 3);
  CHECK(small.truncated);
  CHECK(small.nodes.size() == 3);

  std::ostringstream tsv, dot;
  write_orbit_tsv(tsv, g);
  write_orbit_dot(dot, g);
  CHECK(tsv.str().rfind("# nodes=", 0) == 0);
  CHECK(dot.str().rfind("graph orbit {", 0) == 0);
}
