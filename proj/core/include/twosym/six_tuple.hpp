#pragma once

#include <array>
#include <compare>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "twosym/abelian_group.hpp"
#include "twosym/coloured_graph.hpp"

namespace twosym {

/// Conditions a 6-tuple (h0,h1,h2;q0,q1,q2) may violate.
enum class Condition {
  PositiveH,       // (I)   h_i > 0
  HParity,         // (II)  all h_i share parity
  QRange,          // (III) 0 <= q_i < 2 l_i
  QParity,         // (IV)  all q_i share parity
  OddSum,          // (V)   h_i + q_i odd
  ThreeResidues,   // (VI)  exactly three {2,3}-residues
};

std::string condition_name(Condition c);

class TupleError : public std::invalid_argument {
 public:
  /// Malformed text; no tuple condition involved.
  explicit TupleError(const std::string& what) : std::invalid_argument(what) {}
  TupleError(Condition condition, const std::string& what)
      : std::invalid_argument(what), condition_(condition) {}

  std::optional<Condition> condition() const { return condition_; }

 private:
  std::optional<Condition> condition_;
};

/// A 6-tuple satisfying (I)-(IV). Index arithmetic on i is mod 3 and every
/// q_i is kept as its least non-negative residue mod 2 l_i = h_{i-1} + h_i.
class SixTuple {
 public:
  /// (1,1,1;0,0,0), the simplest valid tuple.
  SixTuple() : h_{1, 1, 1}, q_{0, 0, 0} {}
  /// Validates (I)-(IV) on the literal values; throws TupleError naming the
  /// first violated condition.
  static SixTuple make(int h0, int h1, int h2, int q0, int q1, int q2);
  /// As make, but reduces each q_i mod 2 l_i first.
  static SixTuple reduce(int h0, int h1, int h2, long q0, long q1, long q2);

  int h(int i) const { return h_[wrap(i)]; }
  int q(int i) const { return q_[wrap(i)]; }
  /// 2 l_i = h_{i-1} + h_i.
  int modulus(int i) const { return h(i - 1) + h(i); }
  int half_modulus(int i) const { return modulus(i) / 2; }
  int complexity() const { return h_[0] + h_[1] + h_[2]; }

  const std::array<int, 3>& hs() const { return h_; }
  const std::array<int, 3>& qs() const { return q_; }

  friend auto operator<=>(const SixTuple&, const SixTuple&) = default;
  friend bool operator==(const SixTuple&, const SixTuple&) = default;

  static constexpr int wrap(int i) { return ((i % 3) + 3) % 3; }

 private:
  SixTuple(std::array<int, 3> h, std::array<int, 3> q) : h_(h), q_(q) {}
  std::array<int, 3> h_{};
  std::array<int, 3> q_{};
};

/// Orders by complexity, then lexicographically.
bool catalogue_order(const SixTuple& a, const SixTuple& b);

/// Accepts "(h0,h1,h2;q0,q1,q2)" with optional parentheses and whitespace,
/// or six whitespace-separated integers.
SixTuple parse_tuple(std::string_view text);
std::string format_tuple(const SixTuple& f);
std::ostream& operator<<(std::ostream& os, const SixTuple& f);

/// Index of vertex (i, j) of Γ(f); j is reduced mod 2 l_i.
Vertex vertex_index(const SixTuple& f, int i, int j);

/// Γ(f): vertex set ∪_i {i}×Z_{2l_i}, colours 0..3 from ι0, ι1, ι2 and
/// ι3 = ρ ι2 ρ⁻¹ with ρ(i,j) = (i, j+q_i). Labels carry (i, j).
ColouredGraph build_graph(const SixTuple& f);

int complexity(const SixTuple& f);

struct AdmissibilityReport {
  bool admissible = false;
  std::optional<Condition> failed;
  /// Index i at which (V) fails, when it does.
  std::optional<int> odd_sum_index;
  std::size_t residues_23 = 0;

  std::string describe() const;
};

/// (V) and (VI) on top of the (I)-(IV) already guaranteed by SixTuple.
AdmissibilityReport is_admissible(const SixTuple& f);

/// ρ maps colour-2 edges onto colour-3 edges and back, and when every q_i is
/// odd also swaps colours 0 and 1 (otherwise fixes them). The first half holds
/// for every tuple by construction; the way back needs ρ² to commute with ι2,
/// which fails for most tuples (e.g. (2,2,2;3,1,1)).
bool rho_symmetry_check(const SixTuple& f);

/// Expected H1 when two q's vanish: Z/l_k for q_i = q_j = 0 (lens space
/// L(l_k, q_k/2)), trivial when all three vanish; nullopt otherwise.
std::optional<AbelianGroup> lens_expectation(const SixTuple& f);

/// q_i != h_j for all i, j (a consequence of (II) and (V)).
bool q_avoids_h(const SixTuple& f);

}  // namespace twosym
