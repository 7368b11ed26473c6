#pragma once

#include <vector>

#include "twosym/coloured_graph.hpp"

namespace twosym {

/// Two vertices joined by 1 to 3 edges whose colours form `colours`, lying in
/// distinct residues over the complementary colours.
struct Dipole {
  Vertex x;
  Vertex y;
  ColourSet colours;

  int type() const { return colours.size(); }
};

bool is_dipole(const ColouredGraph& g, const Dipole& d);

std::vector<Dipole> find_dipoles(const ColouredGraph& g);

/// Removes x and y and welds, for every colour outside d.colours, the former
/// partners of x and y. Survivors are renumbered as in remove_and_weld.
/// Throws GraphError when `d` is not a dipole of `g`.
ColouredGraph cancel_dipole(const ColouredGraph& g, const Dipole& d);

/// Inverse of cancel_dipole: splits the c-edges {a, ι_c(a)} for c outside
/// `colours` and inserts a dipole between the halves. Both new vertices are
/// appended (indices n and n+1). `anchors[c]` names the edge to split for
/// each colour c not in `colours`; two anchors may not share an edge.
ColouredGraph add_dipole(const ColouredGraph& g, ColourSet colours,
                         const std::vector<Vertex>& anchors);

}  // namespace twosym
