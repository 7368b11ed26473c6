#include <doctest.h>

#include <numeric>

#include "twosym/homology.hpp"
#include "twosym/moves.hpp"
#include "twosym/six_tuple.hpp"

using namespace twosym;

namespace {

AbelianGroup h1_of(int h0, int h1_, int h2, int q0, int q1, int q2) {
  return h1(build_graph(SixTuple::make(h0, h1_, h2, q0, q1, q2)));
}

}  // namespace

TEST_CASE("sphere, handle and lens spaces") {
  CHECK(h1_of(1, 1, 1, 0, 0, 0).is_trivial());
  CHECK(h1_of(1, 1, 3, 2, 0, 2) == AbelianGroup::cyclic(0));
  CHECK(h1_of(1, 1, 3, 0, 0, 2) == AbelianGroup::cyclic(2));
  CHECK(h1_of(1, 1, 9, 0, 0, 4) == AbelianGroup::cyclic(5));
  for (int p = 2; p <= 12; ++p)
    for (int q = 1; q < p; ++q)
      if (std::gcd(p, q) == 1) CHECK(h1_of(1, 1, 2 * p - 1, 0, 0, 2 * q) == AbelianGroup::cyclic(p));
}

TEST_CASE("a trap of higher complexity") {
  CHECK(h1_of(1, 1, 5, 2, 0, 2) == AbelianGroup::cyclic(3));
}

TEST_CASE("presentation shape") {
  const auto m = h1_presentation(build_graph(SixTuple::make(1, 3, 3, 2, 2, 2)));
  CHECK(m.cols() == 3);
  CHECK(m.rows() == 4);
}

TEST_CASE("homology is unchanged by σ and the ψ maps") {
  for (const char* text : {"(1,3,3;2,2,2)", "(2,2,2;1,1,3)", "(1,1,5;2,0,2)"}) {
    const auto f = parse_tuple(text);
    const auto expected = h1(build_graph(f));
    CHECK(h1(build_graph(sigma(f))) == expected);
    for (int k = 1; k <= 3; ++k) CHECK(h1(build_graph(apply_psi(k, f))) == expected);
  }
}

TEST_CASE("non-crystallizations are rejected") {
  // A colour-2 chord across a hexagon closes an odd cycle.
  const ColouredGraph odd({Involution{1, 0, 3, 2, 5, 4}, {5, 2, 1, 4, 3, 0}, {2, 4, 0, 5, 1, 3},
                           {1, 0, 3, 2, 5, 4}});
  CHECK_THROWS_AS(h1(odd), HomologyError);
  CHECK_THROWS_AS(h1(build_graph(SixTuple::make(1, 1, 3, 0, 0, 0))), HomologyError);
}
