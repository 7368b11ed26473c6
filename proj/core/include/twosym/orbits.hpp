#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "twosym/moves.hpp"
#include "twosym/six_tuple.hpp"

namespace twosym {

class OrbitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An H-image (r,r,s;q0,0,q2) with r <= s whose q's never leave
/// T = {0, r+1, ..., s-1} when shifted by multiples of d = gcd(q0+q2, r+s).
struct TrapWitness {
  int r = 0;
  int s = 0;
  SixTuple base;
  int d = 0;

  /// Membership in T, for q taken mod r+s.
  bool in_t(long q) const;
};

/// Scans every H-image of matching shape; the first one passing the test
/// (images in increasing order) is returned.
std::optional<TrapWitness> is_trap(const SixTuple& f);

/// "r,s"
std::string trap_type(const TrapWitness& w);

/// Minimality and root tests for canonical admissible tuples. The closed
/// forms are authoritative; debug builds also evaluate the δ-based forms and
/// throw std::logic_error on disagreement. Non-canonical or inadmissible input
/// throws OrbitError.
bool is_minimal(const SixTuple& f);
bool is_root(const SixTuple& f);

/// Closed forms on the three h's and q's.
bool minimal_closed_form(const SixTuple& f);
bool root_closed_form(const SixTuple& f);
/// δ(ψ1^i f) >= 0 for i = 0, 1, 2.
bool minimal_by_delta(const SixTuple& f);
/// δ(ψ1^i f) > 0 whenever σ(ψ1^i f) leaves f's H-orbit.
bool root_by_delta(const SixTuple& f);

/// Repeated descent along any rotation with negative δ; returns a canonical
/// tuple of the same G-orbit passing minimal_by_delta.
SixTuple minimize(const SixTuple& f);

/// No H-image of f has two vanishing q's (such tuples represent lens
/// spaces, S^3 or S^2xS^1, not genus-two manifolds).
bool passes_genus_two_guard(const SixTuple& f);

struct AscentWitness {
  /// Same complexity as the input, same G-orbit, δ(tuple) > 0.
  SixTuple tuple;
  /// How the tuple was reached, e.g. "psi1" or "(psi1 psi2 sigma)^2 psi1 psi2".
  std::string route;
};

/// A tuple of f's G-orbit with f's complexity and positive δ, so that σ of it
/// is strictly more complex. Throws OrbitError for traps, for tuples failing
/// the genus-two guard, and if the search is exhausted.
AscentWitness ascend_witness(const SixTuple& f);

struct OrbitNode {
  SixTuple tuple;
  int complexity = 0;
  /// False for nodes left unexpanded (beyond the complexity bound or cut off
  /// by the node limit).
  bool expanded = false;
};

/// The Σ graph around a tuple: canonical tuples linked by σ-moves.
struct OrbitGraph {
  std::vector<OrbitNode> nodes;
  /// Unordered pairs of node indices, stored once with first < second.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  /// Every node was expanded: the whole G-orbit is listed.
  bool closed = false;
  /// Stopped by the node limit rather than the complexity bound.
  bool truncated = false;

  std::optional<std::size_t> find(const SixTuple& f) const;
};

/// Breadth-first search from canonical(f) over sigma_neighbors. Nodes above
/// `max_complexity` are recorded but not expanded; at most `max_nodes` nodes
/// are recorded.
OrbitGraph explore(const SixTuple& f, int max_complexity, std::size_t max_nodes);

void write_orbit_tsv(std::ostream& out, const OrbitGraph& g);
void write_orbit_dot(std::ostream& out, const OrbitGraph& g);

}  // namespace twosym
