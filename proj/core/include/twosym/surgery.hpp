#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "twosym/block.hpp"
#include "twosym/coloured_graph.hpp"
#include "twosym/moves.hpp"
#include "twosym/six_tuple.hpp"

namespace twosym {

/// Structural failure while building or dissecting G(f): a block that should
/// exist is missing or not unique. Indicates a bug, not bad user input.
class SurgeryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Length and offsets of the block Θ: L rungs, p_i / r_i vertices of the
/// relevant run before / after it.
struct TableValues {
  int length = 0;
  int p1 = 0;
  int p2 = 0;
  int r1 = 0;
  int r2 = 0;
  friend bool operator==(const TableValues&, const TableValues&) = default;
};

/// Values predicted for f by the case split on q0.
TableValues expected_table(const SixTuple& f);

/// p1 != 0 iff r2 == 0, and p2 != 0 iff r1 == 0.
bool table_properties_hold(const TableValues& t);

/// Everything recorded while splitting C0 of Γ(f) and inserting Γ(h1).
struct SurgeryTrace {
  SixTuple base;
  SigmaCase branch = SigmaCase::Identity;
  /// G(f): Γ(f)'s vertices keep their indices; v'_1..v'_h1 then
  /// v''_1..v''_h1 are appended.
  ColouredGraph graph;
  std::vector<Vertex> v_prime;
  std::vector<Vertex> v_second;
  /// The two {0,1}-residues C0 splits into, listed in orientation order.
  Orientation c0_prime;
  Orientation c0_second;
  /// The inserted block (C0' to C0''), its mirror (C1 to C2), the block Θ
  /// (C1 to C0'') and its mirror Θ' (C0' to C2); all rungs of colour 3.
  Block gamma;
  Block gamma_mirror;
  Block theta;
  Block theta_mirror;
  /// Side of Θ lying in C1 and in C0'', rung for rung.
  std::vector<Vertex> theta_on_c1;
  std::vector<Vertex> theta_on_c0_second;
  TableValues expected;
  TableValues measured;
};

/// Builds G(f) and locates its four gluing blocks. Throws TupleError when f
/// is inadmissible or q0 = 0 (Θ is then void) and SurgeryError when a block
/// cannot be located uniquely.
SurgeryTrace build_gf(const SixTuple& f);

struct SigmaVerification {
  SixTuple input;
  SixTuple image;
  /// Cancelling Θ gives a graph isomorphic to Γ(σ(f)) up to the pair
  /// swaps 0<->1, 2<->3 (which do not change the represented manifold);
  /// `strict` records whether the identity relabelling already works.
  bool isomorphic = false;
  bool strict = false;
  std::array<Colour, 4> colours{0, 1, 2, 3};
  bool table_matches = false;
  bool table_properties = false;
  /// Cancelling Γ(h1) gives back Γ(f) exactly (colour-preserving); its
  /// mirror gives back Γ(f) up to the pair swaps.
  bool gamma_restores = false;
  bool mirror_restores = false;
  std::optional<std::string> failure;
  std::optional<SurgeryTrace> trace;

  bool ok() const {
    return !failure && isomorphic && table_matches && table_properties && gamma_restores &&
           mirror_restores;
  }
};

/// Realises σ(f) by surgery on Γ(f) and checks the outcome. Never throws for
/// admissible f with q0 != 0; structural problems land in `failure`.
SigmaVerification verify_sigma_constructively(const SixTuple& f, bool keep_trace = false);

void write_trace(std::ostream& out, const SurgeryTrace& trace);
void write_verification(std::ostream& out, const SigmaVerification& v);

}  // namespace twosym
