#pragma once

#include <stdexcept>

#include "twosym/abelian_group.hpp"
#include "twosym/coloured_graph.hpp"
#include "twosym/smith.hpp"

namespace twosym {

class HomologyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Relation matrix of the abelianised fundamental group of the manifold a
/// bipartite crystallization represents. Columns are the {0,1}-residues;
/// each {2,3}-residue contributes a row holding, per {0,1}-residue, the
/// signed count of its vertices (+1 on bipartition class 0, -1 on class 1).
/// A final row kills the generator of the residue containing vertex 0.
///
/// Throws HomologyError unless g is a bipartite contracted gem.
IntMatrix h1_presentation(const ColouredGraph& g);

/// Cokernel of h1_presentation in canonical form.
AbelianGroup h1(const ColouredGraph& g);

}  // namespace twosym
