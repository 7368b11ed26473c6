#include "twosym/dipole.hpp"

#include <algorithm>

namespace twosym {

namespace {

ColourSet joining_colours(const ColouredGraph& g, Vertex x, Vertex y) {
  ColourSet joined;
  for (Colour c = 0; c < kColourCount; ++c)
    if (g.neighbour(c, x) == y) joined = ColourSet::from_bits(joined.bits() | (1u << c));
  return joined;
}

}  // namespace

bool is_dipole(const ColouredGraph& g, const Dipole& d) {
  const std::size_t n = g.vertex_count();
  if (d.x >= n || d.y >= n || d.x == d.y) return false;
  if (d.type() < 1 || d.type() > 3) return false;
  if (joining_colours(g, d.x, d.y) != d.colours) return false;
  const auto rest = residues(g, d.colours.complement());
  return rest.class_of[d.x] != rest.class_of[d.y];
}

std::vector<Dipole> find_dipoles(const ColouredGraph& g) {
  std::vector<Dipole> out;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    std::vector<Vertex> seen;
    for (Colour c = 0; c < kColourCount; ++c) {
      const Vertex y = g.neighbour(c, x);
      if (y < x || std::find(seen.begin(), seen.end(), y) != seen.end()) continue;
      seen.push_back(y);
      Dipole d{x, y, joining_colours(g, x, y)};
      if (is_dipole(g, d)) out.push_back(d);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Dipole& a, const Dipole& b) { return std::pair(a.x, a.y) < std::pair(b.x, b.y); });
  return out;
}

ColouredGraph cancel_dipole(const ColouredGraph& g, const Dipole& d) {
  if (!is_dipole(g, d))
    throw GraphError("cancel_dipole: {" + std::to_string(d.x) + "," + std::to_string(d.y) +
                     "} is not a dipole");
  std::vector<Weld> welds;
  for (Colour c : d.colours.complement().colours())
    welds.push_back({c, g.neighbour(c, d.x), g.neighbour(c, d.y)});
  const Vertex removed[2] = {d.x, d.y};
  return remove_and_weld(g, removed, welds);
}

ColouredGraph add_dipole(const ColouredGraph& g, ColourSet colours,
                         const std::vector<Vertex>& anchors) {
  if (colours.size() < 1 || colours.size() > 3)
    throw GraphError("add_dipole: dipole type must be 1, 2 or 3");
  if (anchors.size() != kColourCount) throw GraphError("add_dipole: need one anchor per colour");
  const std::size_t n = g.vertex_count();
  const Vertex x = static_cast<Vertex>(n);
  const Vertex y = static_cast<Vertex>(n + 1);

  auto inv = g.involutions();
  for (auto& column : inv) column.resize(n + 2);
  auto labels = g.labels();
  labels.resize(n + 2);

  for (Colour c = 0; c < kColourCount; ++c) {
    if (colours.contains(c)) {
      inv[c][x] = y;
      inv[c][y] = x;
      continue;
    }
    const Vertex a = anchors[c];
    if (a >= n) throw GraphError("add_dipole: anchor out of range");
    const Vertex b = g.neighbour(c, a);
    inv[c][a] = x;
    inv[c][x] = a;
    inv[c][b] = y;
    inv[c][y] = b;
  }
  return ColouredGraph(std::move(inv), std::move(labels));
}

}  // namespace twosym
