#include <doctest.h>

#include "twosym/coloured_graph.hpp"
#include "twosym/moves.hpp"
#include "twosym/six_tuple.hpp"

using namespace twosym;

namespace {

SixTuple t(const char* text) { return parse_tuple(text); }

}  // namespace

TEST_CASE("ψ maps") {
  const auto f = t("(1,1,3;2,0,2)");
  CHECK(psi1(f) == t("(1,3,1;0,2,2)"));
  CHECK(psi3(f) == f);
  CHECK(psi2(t("(1,3,3;2,2,2)")) == t("(3,3,1;2,2,2)"));
  CHECK(apply_psi(1, f) == psi1(f));
  CHECK_THROWS_AS(apply_psi(4, f), std::invalid_argument);
  for (const char* text : {"(1,1,3;2,0,2)", "(2,2,2;3,1,1)", "(1,3,5;4,2,6)"}) {
    const auto g = t(text);
    CHECK(psi1(psi1(psi1(g))) == g);
    CHECK(psi2(psi2(g)) == g);
    CHECK(psi3(psi3(g)) == g);
    CHECK(psi1(psi2(g)) == psi2(psi1(psi1(g))));
    CHECK(rotate(g, 2) == psi1(psi1(g)));
  }
}

TEST_CASE("ψ maps preserve the graph up to pair swaps") {
  const auto f = t("(1,1,3;2,0,2)");
  const auto g = build_graph(f);
  CHECK(cp_isomorphic(g, build_graph(psi1(f))).has_value());
  for (int k = 1; k <= 3; ++k) {
    const auto h = t("(1,3,3;2,2,2)");
    CHECK(isomorphic_up_to_swaps(build_graph(h), build_graph(apply_psi(k, h))).has_value());
  }
}

TEST_CASE("σ values and branches") {
  CHECK(sigma(t("(1,3,3;2,2,2)")) == t("(3,1,5;4,2,2)"));
  CHECK(sigma_case(t("(1,3,3;2,2,2)")) == SigmaCase::BetweenH0H2);
  CHECK(sigma(t("(2,2,2;3,1,1)")) == t("(3,1,3;2,2,2)"));
  CHECK(sigma_case(t("(2,2,2;3,1,1)")) == SigmaCase::AboveBoth);
  CHECK(sigma(t("(3,1,3;2,2,2)")) == t("(2,2,2;3,1,1)"));
  CHECK(sigma(t("(1,1,3;2,0,2)")) == t("(1,1,3;2,0,2)"));
  CHECK(sigma_case(t("(2,2,2;1,1,3)")) == SigmaCase::BelowBoth);
  CHECK(sigma_case(t("(1,1,3;0,0,2)")) == SigmaCase::Identity);
  CHECK(sigma(t("(1,1,3;0,0,2)")) == t("(1,1,3;0,0,2)"));
  CHECK(to_string(SigmaCase::AboveBoth).size() > 0);
  CHECK_THROWS_AS(sigma(t("(2,2,2;0,0,0)")), TupleError);
}

TEST_CASE("δ") {
  CHECK(delta(t("(1,3,3;2,2,2)")) == 2);
  CHECK(delta(t("(2,2,2;1,1,3)")) == 1);
  CHECK(delta(t("(1,1,3;0,0,2)")) == 0);
  const auto f = t("(1,3,3;2,2,2)");
  CHECK(delta(psi1(f)) == 2);
  CHECK(delta(psi1(psi1(f))) == -1);
  CHECK(delta_sorted(f) == delta(f));
  CHECK(delta_sorted_rot1(f) == delta(psi1(f)));
  CHECK(delta_sorted_rot2(f) == delta(psi1(psi1(f))));
  for (const char* text : {"(1,3,3;2,2,2)", "(2,2,2;1,1,3)", "(2,2,2;3,1,1)"}) {
    const auto g = t(text);
    CHECK(complexity(sigma(g)) - complexity(g) == delta(g));
  }
}

TEST_CASE("H-orbits") {
  CHECK(h_orbit(SixTuple()).size() == 1);
  CHECK(h_orbit(t("(1,1,3;2,0,2)")) ==
        std::vector<SixTuple>{t("(1,1,3;2,0,2)"), t("(1,3,1;0,2,2)"), t("(3,1,1;2,2,0)")});
  for (const char* text : {"(1,3,3;2,2,2)", "(2,2,2;3,1,1)", "(1,3,5;4,2,6)"})
    CHECK(12 % h_orbit(t(text)).size() == 0);
  CHECK(h_equivalent(t("(2,2,2;3,1,1)"), t("(2,2,2;1,1,3)")));
  CHECK_FALSE(h_equivalent(t("(2,2,2;3,1,1)"), t("(1,3,3;2,2,2)")));
}

TEST_CASE("canonical representatives") {
  CHECK(canonical(t("(2,2,2;3,1,1)")) == t("(2,2,2;1,1,3)"));
  CHECK(canonical(t("(1,3,3;2,2,2)")) == t("(1,3,3;2,2,2)"));
  CHECK(canonical(SixTuple()) == SixTuple());
  for (const char* text : {"(1,3,3;2,2,2)", "(2,2,2;3,1,1)", "(1,3,5;4,2,6)", "(3,1,1;2,2,0)"}) {
    const auto f = t(text);
    const auto c = canonical_choice(f);
    CHECK(c.qualifying == 1);
    CHECK_FALSE(c.warning.has_value());
    CHECK(canonical(c.tuple) == c.tuple);
    for (const auto& g : h_orbit(f)) CHECK(canonical(g) == c.tuple);
  }
}

TEST_CASE("canonical selection falls back when the conditions do not isolate one member") {
  // No member qualifies: none has sorted h with the required q pattern.
  const std::vector<SixTuple> none{t("(3,1,1;2,2,0)"), t("(1,3,1;0,2,2)")};
  REQUIRE_FALSE(satisfies_canonical_conditions(none[0]));
  REQUIRE_FALSE(satisfies_canonical_conditions(none[1]));
  auto c = select_canonical(none);
  CHECK(c.qualifying == 0);
  CHECK(c.warning.has_value());
  CHECK(c.tuple == t("(1,3,1;0,2,2)"));

  // Two qualifying members from different orbits.
  const std::vector<SixTuple> two{t("(2,2,2;1,1,3)"), t("(1,3,3;2,2,2)")};
  c = select_canonical(two);
  CHECK(c.qualifying == 2);
  CHECK(c.warning.has_value());
  CHECK(c.tuple == t("(1,3,3;2,2,2)"));
}

TEST_CASE("Σ neighbours") {
  CHECK(sigma_neighbors(t("(1,1,3;2,0,2)")).empty());
  const auto n = sigma_neighbors(t("(1,3,3;2,2,2)"));
  CHECK(std::find(n.begin(), n.end(), t("(2,2,2;1,1,3)")) != n.end());
  CHECK(n.size() <= 3);
  for (const auto& g : n) CHECK(canonical(g) == g);
}
