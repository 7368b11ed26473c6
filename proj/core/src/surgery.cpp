#include "twosym/surgery.hpp"

#include <algorithm>
#include <ostream>

namespace twosym {

TableValues expected_table(const SixTuple& f) {
  const int h0 = f.h(0), h2 = f.h(2), q0 = f.q(0);
  switch (sigma_case(f)) {
    case SigmaCase::Identity: break;
    case SigmaCase::BelowBoth: return {q0, 0, 0, h0 - q0, h2 - q0};
    case SigmaCase::AboveBoth: return {h0 + h2 - q0, q0 - h2, q0 - h0, 0, 0};
    case SigmaCase::BetweenH0H2: return {h0, 0, q0 - h0, 0, h2 - q0};
    case SigmaCase::BetweenH2H0: return {h2, q0 - h2, 0, h0 - q0, 0};
  }
  throw TupleError(format_tuple(f) + ": q0 = 0, the block is void");
}

bool table_properties_hold(const TableValues& t) {
  return ((t.p1 != 0) == (t.r2 == 0)) && ((t.p2 != 0) == (t.r1 == 0));
}

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

struct Builder {
  std::array<Involution, kColourCount> inv;

  void link(Colour c, Vertex a, Vertex b) {
    inv[c][a] = b;
    inv[c][b] = a;
  }
};

const GridLabel& grid(const ColouredGraph& g, Vertex v) {
  const auto* label = std::get_if<GridLabel>(&g.label(v));
  if (!label) throw SurgeryError("expected a vertex of the original graph, got " +
                                 to_string(g.label(v)));
  return *label;
}

}  // namespace

SurgeryTrace build_gf(const SixTuple& f) {
  const auto report = is_admissible(f);
  if (!report.admissible) throw TupleError(*report.failed, report.describe());
  if (f.q(0) == 0) throw TupleError(format_tuple(f) + ": q0 = 0, the block is void");

  const int h0 = f.h(0), h1 = f.h(1);
  const ColouredGraph base = build_graph(f);
  const auto n = static_cast<Vertex>(base.vertex_count());
  auto at = [&](int i, int j) { return vertex_index(f, i, j); };

  Builder b{base.involutions()};
  for (auto& inv : b.inv) inv.resize(n + 2 * h1);
  std::vector<VertexLabel> labels = base.labels();

  SurgeryTrace t{f, sigma_case(f), {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}};
  for (int i = 1; i <= h1; ++i) {
    t.v_prime.push_back(n + i - 1);
    labels.push_back(TagLabel{"v'" + std::to_string(i)});
  }
  for (int i = 1; i <= h1; ++i) {
    t.v_second.push_back(n + h1 + i - 1);
    labels.push_back(TagLabel{"v''" + std::to_string(i)});
  }
  auto vp = [&](int i) { return t.v_prime[i - 1]; };
  auto vs = [&](int i) { return t.v_second[i - 1]; };

  // Every endpoint of a deleted edge is relinked below, so the deletions
  // (C1-C2 2-edges, the 1-edge (0,-1)(0,0) and the edge a) are implicit.
  const Colour gamma_a = h0 % 2 == 1 ? 0 : 1;
  for (int i = 1; i <= h1; ++i) {
    b.link(3, vp(i), vs(i));
    b.link(2, at(1, i - 1), vp(i));
    b.link(2, at(2, -i), vs(i));
  }
  for (int k = 1; k < h1; ++k) {
    b.link((k - 1) % 2, vp(k), vp(k + 1));
    b.link((k - 1) % 2, vs(k), vs(k + 1));
  }
  b.link(1, at(0, 0), vp(1));
  b.link(1, at(0, -1), vs(1));
  b.link(gamma_a, at(0, h0 - 1), vp(h1));
  b.link(gamma_a, at(0, h0), vs(h1));

  try {
    t.graph = ColouredGraph(std::move(b.inv), std::move(labels));
  } catch (const GraphError& e) {
    throw SurgeryError(std::string("G(f) is not a proper 4-coloured graph: ") + e.what());
  }
  if (residue_count(t.graph, hat(3)) != 2)
    throw SurgeryError("G(f) without colour 3 should have exactly two components");

  for (int j = 0; j < h0; ++j) t.c0_prime.push_back(at(0, j));
  for (int i = h1; i >= 1; --i) t.c0_prime.push_back(vp(i));
  for (int j = h0; j < f.modulus(0); ++j) t.c0_second.push_back(at(0, j));
  for (int i = 1; i <= h1; ++i) t.c0_second.push_back(vs(i));

  const auto cycles = residues(t.graph, ColourSet{0, 1});
  if (cycles.count() != 4) throw SurgeryError("G(f) should have four {0,1}-residues");
  const std::size_t c0p = cycles.class_of[vp(1)];
  const std::size_t c0s = cycles.class_of[vs(1)];
  const std::size_t c1 = cycles.class_of[at(1, 0)];
  const std::size_t c2 = cycles.class_of[at(2, 0)];
  for (Vertex v : t.c0_prime)
    if (cycles.class_of[v] != c0p) throw SurgeryError("C0' is not a single residue");
  for (Vertex v : t.c0_second)
    if (cycles.class_of[v] != c0s) throw SurgeryError("C0'' is not a single residue");

  t.gamma = Block{0, 1, 3, t.v_prime, t.v_second, false};
  validate_gluing_block(t.graph, t.gamma);

  // Locate the blocks joining each pair of residues; each must be unique.
  const auto blocks = find_gluing_blocks(t.graph, 0, 1, 3);
  auto locate = [&](std::size_t x, std::size_t y, const char* name) {
    std::optional<Block> found;
    for (const Block& blk : blocks) {
      const std::size_t a = cycles.class_of[blk.side_a.front()];
      const std::size_t c = cycles.class_of[blk.side_b.front()];
      if ((a == x && c == y) || (a == y && c == x)) {
        if (found) throw SurgeryError(std::string("block ") + name + " is not unique");
        found = blk;
      }
    }
    if (!found) throw SurgeryError(std::string("block ") + name + " not found");
    return *found;
  };
  t.gamma_mirror = locate(c1, c2, "C1-C2");
  t.theta = locate(c1, c0s, "theta");
  t.theta_mirror = locate(c0p, c2, "theta'");

  const bool a_on_c1 = cycles.class_of[t.theta.side_a.front()] == c1;
  t.theta_on_c1 = a_on_c1 ? t.theta.side_a : t.theta.side_b;
  t.theta_on_c0_second = a_on_c1 ? t.theta.side_b : t.theta.side_a;

  // Offsets along C1 from (1, q1+h1) and along C0'' from (0, h0).
  int k_min = f.modulus(1), k_max = -1, j_min = f.modulus(0), j_max = -1;
  for (Vertex v : t.theta_on_c1) {
    const int k = mod(grid(t.graph, v).index - f.q(1) - h1, f.modulus(1));
    k_min = std::min(k_min, k);
    k_max = std::max(k_max, k);
  }
  for (Vertex v : t.theta_on_c0_second) {
    const int j = grid(t.graph, v).index;
    j_min = std::min(j_min, j);
    j_max = std::max(j_max, j);
  }
  t.measured = {static_cast<int>(t.theta.length()), k_min, j_min - h0, h0 - 1 - k_max,
                h0 + f.h(2) - 1 - j_max};
  t.expected = expected_table(f);
  return t;
}

SigmaVerification verify_sigma_constructively(const SixTuple& f, bool keep_trace) {
  SigmaVerification v{f, f, false, false, {0, 1, 2, 3}, false, false, false, false,
                      std::nullopt, std::nullopt};
  try {
    v.image = sigma(f);
    SurgeryTrace t = build_gf(f);
    const ColouredGraph original = build_graph(f);
    v.table_matches = t.measured == t.expected;
    v.table_properties = table_properties_hold(t.measured);
    v.gamma_restores = cp_isomorphic(cancel_block(t.graph, t.gamma), original).has_value();
    v.mirror_restores =
        isomorphic_up_to_swaps(cancel_block(t.graph, t.gamma_mirror), original).has_value();
    const ColouredGraph reduced = cancel_block(t.graph, t.theta);
    if (auto iso = isomorphic_up_to_swaps(reduced, build_graph(v.image))) {
      v.isomorphic = true;
      v.strict = iso->strict();
      v.colours = iso->colours;
    }
    if (keep_trace) v.trace = std::move(t);
  } catch (const std::exception& e) {
    v.failure = e.what();
  }
  return v;
}

namespace {

void write_vertices(std::ostream& out, const ColouredGraph& g, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    out << (i ? " " : "") << to_string(g.label(vs[i]));
}

void write_block(std::ostream& out, const ColouredGraph& g, const char* name, const Block& b) {
  out << "block " << name << " length=" << b.length() << "\n  side_a: ";
  write_vertices(out, g, b.side_a);
  out << "\n  side_b: ";
  write_vertices(out, g, b.side_b);
  out << "\n";
}

void write_table(std::ostream& out, const char* name, const TableValues& t) {
  out << name << " L=" << t.length << " p1=" << t.p1 << " p2=" << t.p2 << " r1=" << t.r1
      << " r2=" << t.r2 << "\n";
}

}  // namespace

void write_trace(std::ostream& out, const SurgeryTrace& t) {
  out << "tuple " << format_tuple(t.base) << "\n";
  out << "case " << to_string(t.branch) << "\n";
  out << "vertices " << t.graph.vertex_count() << "\n";
  out << "C0' ";
  write_vertices(out, t.graph, t.c0_prime);
  out << "\nC0'' ";
  write_vertices(out, t.graph, t.c0_second);
  out << "\n";
  write_block(out, t.graph, "gamma", t.gamma);
  write_block(out, t.graph, "gamma_mirror", t.gamma_mirror);
  write_block(out, t.graph, "theta", t.theta);
  write_block(out, t.graph, "theta_mirror", t.theta_mirror);
  write_table(out, "expected", t.expected);
  write_table(out, "measured", t.measured);
}

void write_verification(std::ostream& out, const SigmaVerification& v) {
  if (v.trace) write_trace(out, *v.trace);
  out << "sigma " << format_tuple(v.input) << " -> " << format_tuple(v.image) << "\n";
  out << "table " << (v.table_matches ? "match" : "MISMATCH") << "\n";
  out << "properties " << (v.table_properties ? "hold" : "FAIL") << "\n";
  out << "gamma_restores " << (v.gamma_restores ? "yes" : "no") << "\n";
  out << "mirror_restores " << (v.mirror_restores ? "yes" : "no") << "\n";
  out << "isomorphic " << (v.isomorphic ? "yes" : "no");
  if (v.isomorphic)
    out << " colours=" << v.colours[0] << v.colours[1] << v.colours[2] << v.colours[3]
        << (v.strict ? " (colour-preserving)" : " (after swapping a colour pair)");
  out << "\n";
  if (v.failure) out << "failure " << *v.failure << "\n";
  out << "result " << (v.ok() ? "ok" : "FAIL") << "\n";
}

}  // namespace twosym
