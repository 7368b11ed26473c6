#include <doctest.h>

#include <sstream>

#include "twosym/catalogue.hpp"
#include "twosym/moves.hpp"
#include "twosym/six_tuple.hpp"

using namespace twosym;

TEST_CASE("small catalogues") {
  CHECK(enumerate_canonical(3) == std::vector<SixTuple>{SixTuple()});
  CHECK(enumerate_canonical(5) == std::vector<SixTuple>{SixTuple(), parse_tuple("(1,1,3;0,0,2)"),
                                                         parse_tuple("(1,1,3;2,0,2)")});
  for (const auto& f : enumerate_canonical(9)) {
    CHECK(is_admissible(f).admissible);
    CHECK(canonical(f) == f);
  }
}

TEST_CASE("enumeration does not depend on the number of workers") {
  const auto one = enumerate_canonical(11, 1);
  CHECK(enumerate_canonical(11, 3) == one);
  CHECK(enumerate_canonical(11, 8) == one);
  CHECK(std::is_sorted(one.begin(), one.end(), catalogue_order));
}

TEST_CASE("every admissible tuple has its canonical form listed") {
  const auto canon = enumerate_canonical(9);
  for (const auto& f : enumerate_admissible(9))
    CHECK(std::find(canon.begin(), canon.end(), canonical(f)) != canon.end());
}

TEST_CASE("records") {
  auto r = classify_record(parse_tuple("(1,1,3;2,0,2)"));
  CHECK(r.trap);
  CHECK(r.trap_type == "1,3");
  CHECK(r.minimal);
  CHECK(r.root);
  CHECK(r.h1 == AbelianGroup::cyclic(0));
  CHECK(r.upsilon == 5);

  r = classify_record(SixTuple());
  CHECK(r.trap);
  CHECK(r.trap_type == "1,1");
  CHECK(r.h1.is_trivial());

  r = classify_record(parse_tuple("(2,2,2;1,1,3)"));
  CHECK_FALSE(r.trap);
  CHECK(r.trap_type.empty());
  CHECK(r.minimal);
  CHECK(r.root);
}

TEST_CASE("catalogue round trip and orbit ids") {
  const auto records = build_catalogue(9, 2);
  std::ostringstream out;
  write_catalogue_tsv(out, records);
  CHECK(out.str().rfind(std::string(kCatalogueHeader) + "\n", 0) == 0);
  std::istringstream in(out.str());
  CHECK(read_catalogue_tsv(in) == records);
  CHECK(build_catalogue(9, 1) == records);

  std::size_t max_id = 0;
  for (const auto& rec : records) {
    CHECK(rec.orbit_id <= max_id + 1);
    max_id = std::max(max_id, rec.orbit_id);
  }
  auto id_of = [&](const char* text) {
    const auto f = parse_tuple(text);
    for (const auto& rec : records)
      if (rec.tuple == f) return rec.orbit_id;
    FAIL("missing " << text);
    return std::size_t{0};
  };
  CHECK(id_of("(1,3,3;2,2,2)") == id_of("(2,2,2;1,1,3)"));
  CHECK(id_of("(1,1,3;2,0,2)") != id_of("(2,2,2;1,1,3)"));

  std::istringstream bad("tuple\tupsilon\n(1,1,1;0,0,0)\t3\n");
  CHECK_THROWS_AS(read_catalogue_tsv(bad), std::invalid_argument);
}
