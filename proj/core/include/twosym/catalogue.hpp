#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "twosym/abelian_group.hpp"
#include "twosym/orbits.hpp"
#include "twosym/six_tuple.hpp"

namespace twosym {

/// All canonical admissible tuples with complexity <= max_complexity, each
/// H-orbit once, in catalogue order (complexity, then lexicographic). The
/// result does not depend on `jobs`, the number of worker threads.
std::vector<SixTuple> enumerate_canonical(int max_complexity, unsigned jobs = 1);

/// Every admissible tuple (any h order) with complexity <= max_complexity,
/// in catalogue order.
std::vector<SixTuple> enumerate_admissible(int max_complexity);

struct CatalogueRecord {
  SixTuple tuple;
  int upsilon = 0;
  bool trap = false;
  /// "r,s" when trap, empty otherwise.
  std::string trap_type;
  bool minimal = false;
  bool root = false;
  AbelianGroup h1;
  std::size_t orbit_id = 0;
  std::vector<std::string> warnings;

  friend bool operator==(const CatalogueRecord&, const CatalogueRecord&) = default;
};

/// Record for a canonical admissible tuple; orbit_id is left at 0.
CatalogueRecord classify_record(const SixTuple& f);

/// Records for enumerate_canonical(max_complexity). Orbit ids number the
/// classes of the relation generated by σ-moves between listed tuples,
/// sequentially in order of first appearance.
std::vector<CatalogueRecord> build_catalogue(int max_complexity, unsigned jobs = 1);

inline constexpr const char* kCatalogueHeader =
    "tuple\tupsilon\ttrap\ttrap_type\tminimal\troot\th1\torbit_id\twarnings";

void write_catalogue_tsv(std::ostream& out, const std::vector<CatalogueRecord>& records);
/// Inverse of write_catalogue_tsv; throws std::invalid_argument on
/// malformed input.
std::vector<CatalogueRecord> read_catalogue_tsv(std::istream& in);

}  // namespace twosym
