#include "twosym/block.hpp"

#include <algorithm>
#include <map>

#include "twosym/dipole.hpp"

namespace twosym {

bool Block::contains(Vertex v) const {
  return std::find(side_a.begin(), side_a.end(), v) != side_a.end() ||
         std::find(side_b.begin(), side_b.end(), v) != side_b.end();
}

namespace {

std::optional<std::size_t> position(const Orientation& cycle, Vertex v) {
  auto it = std::find(cycle.begin(), cycle.end(), v);
  if (it == cycle.end()) return std::nullopt;
  return static_cast<std::size_t>(it - cycle.begin());
}

// +1 if `side` follows the cycle orientation, -1 if it runs against it.
std::optional<int> direction(const std::vector<Vertex>& side, const Orientation& cycle) {
  const std::size_t len = cycle.size();
  int dir = 0;
  for (std::size_t i = 0; i + 1 < side.size(); ++i) {
    auto a = position(cycle, side[i]);
    auto b = position(cycle, side[i + 1]);
    if (!a || !b) return std::nullopt;
    int step = 0;
    if ((*a + 1) % len == *b)
      step = 1;
    else if ((*b + 1) % len == *a)
      step = -1;
    else
      return std::nullopt;
    if (dir != 0 && step != dir) return std::nullopt;
    dir = step;
  }
  return dir;
}

}  // namespace

std::optional<KeyVertices> coherent_key_vertices(const Block& b, const Orientation& residue_a,
                                                 const Orientation& residue_b) {
  if (b.length() == 1) return KeyVertices{b.side_a.front(), b.side_b.front()};
  const auto da = direction(b.side_a, residue_a);
  const auto db = direction(b.side_b, residue_b);
  if (!da || !db) return std::nullopt;
  // Side a runs v' -> w' along its orientation; side b must run w'' -> v''.
  if (*da != -*db) return std::nullopt;
  if (*da == 1) return KeyVertices{b.side_a.front(), b.side_b.back()};
  return KeyVertices{b.side_a.back(), b.side_b.front()};
}

std::vector<Block> find_gluing_blocks(const ColouredGraph& g, Colour p, Colour q, Colour r) {
  const auto pq = residues(g, ColourSet{p, q});
  const auto hat_r = residues(g, hat(r));

  // Rungs: r-edges joining distinct {p,q}-residues in distinct hat-r components.
  auto is_rung = [&](Vertex u, Vertex w) {
    return g.neighbour(r, u) == w && pq.class_of[u] != pq.class_of[w] &&
           hat_r.class_of[u] != hat_r.class_of[w];
  };

  std::vector<char> used(g.vertex_count(), 0);
  std::vector<Block> blocks;

  for (Vertex start = 0; start < g.vertex_count(); ++start) {
    const Vertex partner = g.neighbour(r, start);
    if (used[start] || !is_rung(start, partner)) continue;

    // Consecutive rungs follow one side edge of the same colour on both sides.
    auto step = [&](Vertex u, Vertex w, Colour c) -> std::optional<std::pair<Vertex, Vertex>> {
      const Vertex nu = g.neighbour(c, u);
      const Vertex nw = g.neighbour(c, w);
      if (is_rung(nu, nw)) return std::pair(nu, nw);
      return std::nullopt;
    };
    // Runs away from the starting rung, first edge coloured `first`.
    auto run = [&](Colour first, bool& wrapped) {
      std::vector<std::pair<Vertex, Vertex>> out;
      Vertex u = start, w = partner;
      Colour c = first;
      while (auto next = step(u, w, c)) {
        if (next->first == start) {
          wrapped = true;
          break;
        }
        u = next->first;
        w = next->second;
        out.push_back(*next);
        c = (c == p) ? q : p;
      }
      return out;
    };

    Block b;
    b.p = p;
    b.q = q;
    b.rung = r;
    bool wrapped = false;
    const auto forward = run(p, wrapped);
    std::vector<std::pair<Vertex, Vertex>> backward;
    if (!wrapped) backward = run(q, wrapped);
    b.closed = wrapped;
    for (auto it = backward.rbegin(); it != backward.rend(); ++it) {
      b.side_a.push_back(it->first);
      b.side_b.push_back(it->second);
    }
    b.side_a.push_back(start);
    b.side_b.push_back(partner);
    for (const auto& [a, v] : forward) {
      b.side_a.push_back(a);
      b.side_b.push_back(v);
    }
    for (Vertex v : b.side_a) used[v] = used[g.neighbour(r, v)] = 1;

    // Normalise: side_a holds the smallest corner, listed first.
    const auto corners = b.corners();
    const Vertex least = *std::min_element(corners.begin(), corners.end());
    if (least == b.side_b.front() || least == b.side_b.back()) std::swap(b.side_a, b.side_b);
    if (b.side_a.back() < b.side_a.front()) {
      std::reverse(b.side_a.begin(), b.side_a.end());
      std::reverse(b.side_b.begin(), b.side_b.end());
    }
    blocks.push_back(std::move(b));
  }
  return blocks;
}

void validate_gluing_block(const ColouredGraph& g, const Block& b) {
  if (b.closed) throw GraphError("block closes around whole residues; it has no corners");
  if (b.length() == 0 || b.side_a.size() != b.side_b.size())
    throw GraphError("block sides must be nonempty and of equal length");
  const ColourSet pq{b.p, b.q};
  if (b.p == b.q || pq.contains(b.rung)) throw GraphError("block colours must be distinct");
  const auto pq_res = residues(g, pq);
  const auto hat_r = residues(g, hat(b.rung));
  const std::size_t h = b.length();
  for (std::size_t i = 0; i < h; ++i) {
    const Vertex a = b.side_a[i], v = b.side_b[i];
    if (g.neighbour(b.rung, a) != v) throw GraphError("block rung is not an r-edge");
    if (pq_res.class_of[a] != pq_res.class_of[b.side_a.front()] ||
        pq_res.class_of[v] != pq_res.class_of[b.side_b.front()])
      throw GraphError("block side leaves its {p,q}-residue");
    if (i + 1 < h) {
      bool matched = false;
      for (Colour c : {b.p, b.q})
        if (g.neighbour(c, a) == b.side_a[i + 1] && g.neighbour(c, v) == b.side_b[i + 1])
          matched = true;
      if (!matched) throw GraphError("block side edges do not match in colour");
    }
  }
  if (pq_res.class_of[b.side_a.front()] == pq_res.class_of[b.side_b.front()])
    throw GraphError("block sides lie in the same {p,q}-residue");
  if (hat_r.class_of[b.side_a.front()] == hat_r.class_of[b.side_b.front()])
    throw GraphError("block sides lie in the same hat-r component: not a gluing block");
  std::vector<Vertex> all = b.side_a;
  all.insert(all.end(), b.side_b.begin(), b.side_b.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw GraphError("block vertices are not distinct");
}

ColouredGraph cancel_block(const ColouredGraph& g, const Block& b) {
  validate_gluing_block(g, b);
  const std::size_t h = b.length();
  std::map<Vertex, std::size_t> index_a, index_b;
  for (std::size_t i = 0; i < h; ++i) {
    index_a[b.side_a[i]] = i;
    index_b[b.side_b[i]] = i;
  }

  std::vector<Weld> welds;
  for (std::size_t i = 0; i < h; ++i) {
    for (Colour c = 0; c < kColourCount; ++c) {
      if (c == b.rung) continue;
      const Vertex x = g.neighbour(c, b.side_a[i]);
      const Vertex y = g.neighbour(c, b.side_b[i]);
      const bool x_in = b.contains(x), y_in = b.contains(y);
      if (!x_in && !y_in) {
        welds.push_back({c, x, y});
        continue;
      }
      // Both ends inside: must be a pair of matching side edges.
      auto ia = index_a.find(x);
      auto ib = index_b.find(y);
      if (!x_in || !y_in || ia == index_a.end() || ib == index_b.end() ||
          ia->second != ib->second)
        throw GraphError("cancel_block: block vertex carries a non-block edge into the block");
    }
  }
  std::vector<Vertex> removed = b.side_a;
  removed.insert(removed.end(), b.side_b.begin(), b.side_b.end());
  return remove_and_weld(g, removed, welds);
}

ColouredGraph cancel_block_by_dipoles(const ColouredGraph& g, const Block& b) {
  validate_gluing_block(g, b);
  ColouredGraph current = g;
  std::vector<Vertex> side_a = b.side_a;
  std::vector<Vertex> side_b = b.side_b;
  for (std::size_t i = 0; i < side_a.size(); ++i) {
    const Vertex x = side_a[i], y = side_b[i];
    ColourSet joined;
    for (Colour c = 0; c < kColourCount; ++c)
      if (current.neighbour(c, x) == y) joined = ColourSet::from_bits(joined.bits() | (1u << c));
    current = cancel_dipole(current, Dipole{x, y, joined});
    const Vertex gone[2] = {std::min(x, y), std::max(x, y)};
    for (std::size_t k = i + 1; k < side_a.size(); ++k) {
      side_a[k] = surviving_index(side_a[k], gone);
      side_b[k] = surviving_index(side_b[k], gone);
    }
  }
  return current;
}

}  // namespace twosym
