#include "twosym/coloured_graph.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace twosym {

std::string to_string(const VertexLabel& label) {
  if (const auto* grid = std::get_if<GridLabel>(&label))
    return "(" + std::to_string(grid->residue) + "," + std::to_string(grid->index) + ")";
  if (const auto* tag = std::get_if<TagLabel>(&label)) return tag->name;
  return "";
}

ColouredGraph::ColouredGraph(std::array<Involution, kColourCount> involutions,
                             std::vector<VertexLabel> labels)
    : involutions_(std::move(involutions)), labels_(std::move(labels)) {
  const std::size_t n = involutions_[0].size();
  if (n == 0) throw GraphError("coloured graph must have at least one vertex");
  for (Colour c = 0; c < kColourCount; ++c) {
    const auto& inv = involutions_[c];
    if (inv.size() != n) throw GraphError("involution sizes differ across colours");
    for (Vertex v = 0; v < n; ++v) {
      const Vertex w = inv[v];
      if (w >= n)
        throw GraphError("colour " + std::to_string(c) + ": vertex " + std::to_string(v) +
                         " maps out of range");
      if (w == v)
        throw GraphError("colour " + std::to_string(c) + ": fixed point at vertex " +
                         std::to_string(v));
      if (inv[w] != v)
        throw GraphError("colour " + std::to_string(c) + ": map is not an involution at vertex " +
                         std::to_string(v));
    }
  }
  if (labels_.empty()) labels_.resize(n);
  if (labels_.size() != n) throw GraphError("label table size differs from vertex count");
}

std::optional<Vertex> ColouredGraph::find_label(const VertexLabel& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

ResiduePartition residues(const ColouredGraph& g, ColourSet colours) {
  if (colours.empty()) throw GraphError("residues: colour set must be nonempty");
  const std::size_t n = g.vertex_count();
  const auto cols = colours.colours();
  constexpr auto unset = static_cast<std::size_t>(-1);

  ResiduePartition out;
  out.colours = colours;
  out.class_of.assign(n, unset);

  for (Vertex start = 0; start < n; ++start) {
    if (out.class_of[start] != unset) continue;
    const std::size_t id = out.classes.size();
    std::vector<Vertex> members;
    if (cols.size() == 2) {
      // Alternate the two involutions to walk the bicoloured cycle.
      Vertex v = start;
      int step = 0;
      do {
        out.class_of[v] = id;
        members.push_back(v);
        v = g.neighbour(cols[step % 2], v);
        ++step;
      } while (v != start);
    } else {
      std::vector<Vertex> stack{start};
      out.class_of[start] = id;
      while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        members.push_back(v);
        for (Colour c : cols) {
          const Vertex w = g.neighbour(c, v);
          if (out.class_of[w] == unset) {
            out.class_of[w] = id;
            stack.push_back(w);
          }
        }
      }
      std::sort(members.begin(), members.end());
    }
    out.classes.push_back(std::move(members));
  }
  return out;
}

std::size_t residue_count(const ColouredGraph& g, ColourSet colours) {
  return residues(g, colours).count();
}

bool is_connected(const ColouredGraph& g) { return residue_count(g, ColourSet::all()) == 1; }

std::optional<std::vector<int>> is_bipartite(const ColouredGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> side(n, -1);
  for (Vertex root = 0; root < n; ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Colour c = 0; c < kColourCount; ++c) {
        const Vertex w = g.neighbour(c, v);
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

bool is_gem(const ColouredGraph& g) {
  for (Colour c = 0; c < kColourCount; ++c) {
    const ColourSet three = hat(c);
    const auto comps = residues(g, three);
    const auto cols = three.colours();
    // Faces of each 3-residue: its bicoloured cycles over the three pairs.
    std::vector<long> faces(comps.count(), 0);
    for (std::size_t a = 0; a < cols.size(); ++a) {
      for (std::size_t b = a + 1; b < cols.size(); ++b) {
        const auto cycles = residues(g, ColourSet{cols[a], cols[b]});
        for (const auto& cycle : cycles.classes) ++faces[comps.class_of[cycle.front()]];
      }
    }
    for (std::size_t k = 0; k < comps.count(); ++k) {
      const long v = static_cast<long>(comps.classes[k].size());
      const long e = 3 * v / 2;
      if (v - e + faces[k] != 2) return false;
    }
  }
  return true;
}

bool is_contracted(const ColouredGraph& g) {
  for (Colour c = 0; c < kColourCount; ++c)
    if (residue_count(g, hat(c)) != 1) return false;
  return true;
}

std::optional<std::vector<Vertex>> cp_isomorphic(const ColouredGraph& g1,
                                                 const ColouredGraph& g2) {
  const std::size_t n = g1.vertex_count();
  if (n != g2.vertex_count()) return std::nullopt;
  if (!is_connected(g1)) throw GraphError("cp_isomorphic: first graph is not connected");

  constexpr Vertex unset = static_cast<Vertex>(-1);
  std::vector<Vertex> map(n);
  std::vector<Vertex> inverse(n);
  std::vector<Vertex> stack;

  for (Vertex target = 0; target < n; ++target) {
    std::fill(map.begin(), map.end(), unset);
    std::fill(inverse.begin(), inverse.end(), unset);
    map[0] = target;
    inverse[target] = 0;
    stack.assign(1, 0);
    bool ok = true;
    while (ok && !stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Colour c = 0; c < kColourCount && ok; ++c) {
        const Vertex w = g1.neighbour(c, v);
        const Vertex image = g2.neighbour(c, map[v]);
        if (map[w] == unset) {
          if (inverse[image] != unset) {
            ok = false;
          } else {
            map[w] = image;
            inverse[image] = w;
            stack.push_back(w);
          }
        } else if (map[w] != image) {
          ok = false;
        }
      }
    }
    if (ok) return map;
  }
  return std::nullopt;
}

ColouredGraph permute_colours(const ColouredGraph& g, const std::array<Colour, 4>& perm) {
  std::array<Colour, 4> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<Colour, 4>{0, 1, 2, 3})
    throw GraphError("permute_colours: not a permutation of 0..3");
  std::array<Involution, kColourCount> inv;
  for (Colour c = 0; c < kColourCount; ++c) inv[perm[c]] = g.involutions()[c];
  return ColouredGraph(std::move(inv), g.labels());
}

std::optional<SwapIsomorphism> isomorphic_up_to_swaps(const ColouredGraph& g1,
                                                      const ColouredGraph& g2) {
  for (const auto& perm : kPairSwaps)
    if (auto map = cp_isomorphic(g1, permute_colours(g2, perm)))
      return SwapIsomorphism{perm, std::move(*map)};
  return std::nullopt;
}

int embedding_euler(const ColouredGraph& g, const std::array<Colour, 4>& order) {
  std::array<Colour, 4> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<Colour, 4>{0, 1, 2, 3})
    throw GraphError("embedding_euler: order must be a permutation of 0..3");
  const long v = static_cast<long>(g.vertex_count());
  const long e = 2 * v;
  long f = 0;
  for (int k = 0; k < 4; ++k)
    f += static_cast<long>(residue_count(g, ColourSet{order[k], order[(k + 1) % 4]}));
  return static_cast<int>(v - e + f);
}

Vertex surviving_index(Vertex old_index, std::span<const Vertex> removed_sorted) {
  const auto below = std::lower_bound(removed_sorted.begin(), removed_sorted.end(), old_index) -
                     removed_sorted.begin();
  return old_index - static_cast<Vertex>(below);
}

ColouredGraph remove_and_weld(const ColouredGraph& g, std::span<const Vertex> removed,
                              std::span<const Weld> welds) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> gone(removed.begin(), removed.end());
  std::sort(gone.begin(), gone.end());
  gone.erase(std::unique(gone.begin(), gone.end()), gone.end());
  if (gone.size() >= n) throw GraphError("remove_and_weld: nothing would survive");

  std::vector<char> is_gone(n, 0);
  for (Vertex v : gone) is_gone.at(v) = 1;

  constexpr Vertex unset = static_cast<Vertex>(-1);
  std::array<std::vector<Vertex>, kColourCount> partner;
  for (Colour c = 0; c < kColourCount; ++c) {
    partner[c].assign(n, unset);
    for (Vertex v = 0; v < n; ++v)
      if (!is_gone[v] && !is_gone[g.neighbour(c, v)]) partner[c][v] = g.neighbour(c, v);
  }
  for (const Weld& w : welds) {
    if (is_gone[w.a] || is_gone[w.b])
      throw GraphError("remove_and_weld: weld touches a removed vertex");
    if (partner[w.colour][w.a] != unset || partner[w.colour][w.b] != unset)
      throw GraphError("remove_and_weld: weld onto a vertex that is not hanging");
    partner[w.colour][w.a] = w.b;
    partner[w.colour][w.b] = w.a;
  }

  std::array<Involution, kColourCount> inv;
  std::vector<VertexLabel> labels;
  labels.reserve(n - gone.size());
  for (Colour c = 0; c < kColourCount; ++c) inv[c].reserve(n - gone.size());
  for (Vertex v = 0; v < n; ++v) {
    if (is_gone[v]) continue;
    labels.push_back(g.label(v));
    for (Colour c = 0; c < kColourCount; ++c) {
      if (partner[c][v] == unset)
        throw GraphError("remove_and_weld: hanging edge of colour " + std::to_string(c) +
                         " left at vertex " + std::to_string(v));
      inv[c].push_back(surviving_index(partner[c][v], gone));
    }
  }
  return ColouredGraph(std::move(inv), std::move(labels));
}

void write_dot(std::ostream& out, const ColouredGraph& g, const std::string& name) {
  static constexpr const char* kStyle[kColourCount] = {"solid", "dashed", "bold", "dotted"};
  out << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    out << "  v" << v << " [label=\"" << to_string(g.label(v)) << "\"];\n";
  for (Colour c = 0; c < kColourCount; ++c)
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      const Vertex w = g.neighbour(c, v);
      if (v < w)
        out << "  v" << v << " -- v" << w << " [color=" << c << ", style=" << kStyle[c]
            << "];\n";
    }
  out << "}\n";
}

std::string to_dot(const ColouredGraph& g, const std::string& name) {
  std::ostringstream os;
  write_dot(os, g, name);
  return os.str();
}

}  // namespace twosym
