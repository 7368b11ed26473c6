#pragma once

#include <optional>
#include <vector>

#include "twosym/coloured_graph.hpp"

namespace twosym {

/// A ({p,q},r)-block: two parallel runs of consecutive vertices in distinct
/// {p,q}-residues, joined rung by rung by r-edges. side_a[i] and side_b[i]
/// are r-adjacent and the i-th side edges on both sides share a colour.
struct Block {
  Colour p = 0;
  Colour q = 1;
  Colour rung = 3;
  std::vector<Vertex> side_a;
  std::vector<Vertex> side_b;
  /// Rungs close up around two whole residues; such a block has no corners.
  bool closed = false;

  std::size_t length() const { return side_a.size(); }
  std::array<Vertex, 4> corners() const {
    return {side_a.front(), side_a.back(), side_b.front(), side_b.back()};
  }
  bool contains(Vertex v) const;
};

/// Cyclic vertex order of an oriented residue.
using Orientation = std::vector<Vertex>;

struct KeyVertices {
  Vertex on_a;
  Vertex on_b;
};

/// Key-vertices when `b` is coherent with the orientations of the residues
/// holding side_a and side_b: if side_a runs v' -> w' along its orientation,
/// side_b must run w'' -> v''; the key-vertices are v' and w''. A block of
/// length 1 is always coherent with both vertices as keys.
std::optional<KeyVertices> coherent_key_vertices(const Block& b, const Orientation& residue_a,
                                                 const Orientation& residue_b);

/// All maximal ({p,q},r)-blocks whose sides lie in distinct {p,q}-residues
/// and in distinct components of the hat-r subgraph.
std::vector<Block> find_gluing_blocks(const ColouredGraph& g, Colour p, Colour q, Colour r);

/// Throws GraphError unless `b` is a (non-closed) gluing block of `g`.
void validate_gluing_block(const ColouredGraph& g, const Block& b);

/// Deletes the block and welds the hanging edges of equal colour at
/// r-adjacent block vertices. Result has |V(g)| - 2h vertices, survivors
/// renumbered as in remove_and_weld.
ColouredGraph cancel_block(const ColouredGraph& g, const Block& b);

/// The same cancellation performed as a chain of dipole cancellations along
/// the rungs in side order (type 1 then type 2 dipoles).
ColouredGraph cancel_block_by_dipoles(const ColouredGraph& g, const Block& b);

}  // namespace twosym
