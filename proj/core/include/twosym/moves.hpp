#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twosym/six_tuple.hpp"

namespace twosym {

/// ψ1 rotates the residues, ψ2 swaps C1 and C2, ψ3 reverses orientations.
SixTuple psi1(const SixTuple& f);
SixTuple psi2(const SixTuple& f);
SixTuple psi3(const SixTuple& f);
/// k in {1,2,3}; throws std::invalid_argument otherwise.
SixTuple apply_psi(int k, const SixTuple& f);
/// ψ1 applied `times` times.
SixTuple rotate(const SixTuple& f, int times);

/// Which branch of the 2-symmetric transformation applies.
enum class SigmaCase {
  Identity,        // q0 = 0
  BelowBoth,       // 0 < q0 < h0, h2
  AboveBoth,       // q0 > h0, h2
  BetweenH0H2,     // h0 < q0 < h2
  BetweenH2H0,     // h2 < q0 < h0
};

std::string to_string(SigmaCase c);

/// Throws TupleError when no branch applies (q0 equals h0 or h2, which an
/// admissible tuple never has).
SigmaCase sigma_case(const SixTuple& f);

/// The 2-symmetric transformation; all new q's are reduced mod the new
/// moduli. Throws TupleError for tuples failing (V), where the branches are
/// not exhaustive. Condition (VI) is not re-checked here.
SixTuple sigma(const SixTuple& f);

/// υ(σ(f)) - υ(f) by the closed-form case split.
int delta(const SixTuple& f);

/// Closed forms of δ(f), δ(ψ1 f), δ(ψ1² f) for tuples with h0 <= h1 <= h2.
int delta_sorted(const SixTuple& f);
int delta_sorted_rot1(const SixTuple& f);
int delta_sorted_rot2(const SixTuple& f);

/// Images of f under ⟨ψ1,ψ2,ψ3⟩ (at most 12), sorted and deduplicated.
std::vector<SixTuple> h_orbit(const SixTuple& f);
bool h_equivalent(const SixTuple& a, const SixTuple& b);

/// The per-member conditions selecting the canonical representative.
bool satisfies_canonical_conditions(const SixTuple& f);

struct CanonicalChoice {
  SixTuple tuple;
  /// Members of the orbit that passed the conditions.
  std::size_t qualifying = 0;
  /// Set when `qualifying != 1` and the fallback was used.
  std::optional<std::string> warning;
};

/// Applies the canonical conditions to `members` (an H-orbit). Exactly one
/// qualifying member is returned as is; otherwise the lexicographically least
/// member with h0 <= h1 <= h2 is returned with a warning.
CanonicalChoice select_canonical(std::span<const SixTuple> members);

CanonicalChoice canonical_choice(const SixTuple& f);
SixTuple canonical(const SixTuple& f);

/// Canonical representatives of σ(ψ1^i f), i = 0,1,2, other than f's own,
/// sorted and deduplicated: f's neighbours in the Σ graph.
std::vector<SixTuple> sigma_neighbors(const SixTuple& f);

}  // namespace twosym
