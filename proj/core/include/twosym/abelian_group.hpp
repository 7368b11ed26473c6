#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace twosym {

/// Finitely generated abelian group Z^free_rank + Z/t1 + ... + Z/tk with
/// every t > 1 and t_i dividing t_{i+1}.
struct AbelianGroup {
  int free_rank = 0;
  std::vector<std::int64_t> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  /// Product of the torsion coefficients (1 for a torsion-free group).
  std::int64_t torsion_order() const;

  static AbelianGroup trivial() { return {}; }
  static AbelianGroup cyclic(std::int64_t order);  // Z/0 = Z, Z/1 = 0
  /// Canonical form from arbitrary invariant factors (zeros become free rank).
  static AbelianGroup from_invariants(int generators, std::vector<std::int64_t> invariants);

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// `Z^r + Z/d1 + Z/d2`, "Z" for rank one, "0" for the trivial group.
std::string to_string(const AbelianGroup& g);
AbelianGroup parse_abelian_group(std::string_view text);

}  // namespace twosym
