#include "twosym/orbits.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <ostream>
#include <set>

namespace twosym {

namespace {

void require_canonical_admissible(const SixTuple& f) {
  if (!is_admissible(f).admissible)
    throw OrbitError(format_tuple(f) + " is not admissible");
  if (canonical(f) != f)
    throw OrbitError(format_tuple(f) + " is not canonical (canonical form is " +
                     format_tuple(canonical(f)) + ")");
}

int mod(long a, long m) { return static_cast<int>(((a % m) + m) % m); }

}  // namespace

bool TrapWitness::in_t(long q) const {
  const int x = mod(q, r + s);
  return x == 0 || (x > r && x < s);
}

std::optional<TrapWitness> is_trap(const SixTuple& f) {
  for (const SixTuple& g : h_orbit(f)) {
    if (g.h(0) != g.h(1) || g.h(0) > g.h(2) || g.q(1) != 0) continue;
    TrapWitness w{g.h(0), g.h(2), g, 0};
    const int m = w.r + w.s;
    const long q0 = g.q(0), q2 = g.q(2);
    w.d = std::gcd(static_cast<int>(q0 + q2), m);
    bool ok = true;
    for (long k = 0; ok && k < m / w.d; ++k) ok = w.in_t(q0 + k * w.d) && w.in_t(q2 + k * w.d);
    if (ok) return w;
  }
  return std::nullopt;
}

std::string trap_type(const TrapWitness& w) {
  return std::to_string(w.r) + "," + std::to_string(w.s);
}

bool minimal_closed_form(const SixTuple& f) {
  const int h0 = f.h(0), h1 = f.h(1), h2 = f.h(2), q2 = f.q(2);
  return q2 < h0 || q2 > h1 + h2 - h0 || (h0 == h1 && h1 < q2 && q2 < h2);
}

bool root_closed_form(const SixTuple& f) {
  if (!minimal_closed_form(f)) return false;
  const int h0 = f.h(0), h1 = f.h(1), h2 = f.h(2);
  const int q0 = f.q(0), q1 = f.q(1), q2 = f.q(2);
  const int m = f.modulus(0);
  const int half = (h0 + h2) / 2;
  const bool a = h0 == h1 && h1 < q2 && q2 < h2 && q2 != mod(-q0, m) && q2 != half &&
                 (q1 != 0 || q2 != mod(half - q0, m));
  const bool b = h0 == h1 && h1 < q0 && q0 < h2 && q0 != mod(-q2, m) && q0 != half &&
                 (q1 != 0 || q0 != mod(half - q2, m));
  return !a && !b;
}

bool minimal_by_delta(const SixTuple& f) {
  for (int i = 0; i < 3; ++i)
    if (delta(rotate(f, i)) < 0) return false;
  return true;
}

bool root_by_delta(const SixTuple& f) {
  const auto orbit = h_orbit(f);
  for (int i = 0; i < 3; ++i) {
    const SixTuple g = rotate(f, i);
    const bool stays = std::binary_search(orbit.begin(), orbit.end(), sigma(g));
    if (!stays && delta(g) <= 0) return false;
  }
  return true;
}

bool is_minimal(const SixTuple& f) {
  require_canonical_admissible(f);
  const bool closed = minimal_closed_form(f);
#ifndef NDEBUG
  if (closed != minimal_by_delta(f))
    throw std::logic_error("minimality forms disagree on " + format_tuple(f));
#endif
  return closed;
}

bool is_root(const SixTuple& f) {
  require_canonical_admissible(f);
  const bool closed = root_closed_form(f);
#ifndef NDEBUG
  if (closed != root_by_delta(f))
    throw std::logic_error("root forms disagree on " + format_tuple(f));
#endif
  return closed;
}

SixTuple minimize(const SixTuple& f) {
  SixTuple current = canonical(f);
  for (;;) {
    bool moved = false;
    for (int i = 0; i < 3 && !moved; ++i) {
      const SixTuple g = rotate(current, i);
      if (delta(g) < 0) {
        current = canonical(sigma(g));
        moved = true;
      }
    }
    if (!moved) return current;
  }
}

bool passes_genus_two_guard(const SixTuple& f) {
  const auto zeros = [](const SixTuple& g) {
    return (g.q(0) == 0) + (g.q(1) == 0) + (g.q(2) == 0);
  };
  for (const SixTuple& g : h_orbit(f))
    if (zeros(g) >= 2) return false;
  return true;
}

AscentWitness ascend_witness(const SixTuple& f) {
  if (auto w = is_trap(f)) throw OrbitError(format_tuple(f) + " is a trap of type " + trap_type(*w));
  if (!passes_genus_two_guard(f))
    throw OrbitError(format_tuple(f) + " has an H-image with two vanishing q's");

  // Work on a representative with h0 <= h1 <= h2.
  SixTuple base = f;
  std::string prefix;
  for (const SixTuple& g : h_orbit(f))
    if (g.h(0) <= g.h(1) && g.h(1) <= g.h(2)) {
      if (!(f.h(0) <= f.h(1) && f.h(1) <= f.h(2))) {
        base = g;
        prefix = "H-image " + format_tuple(g);
      }
      break;
    }
  auto route = [&](const std::string& step) {
    return prefix.empty() ? step : step + " of " + prefix;
  };

  if (delta(base) > 0) return {base, route("identity")};
  if (base.q(1) != 0 && delta(psi1(base)) > 0) return {psi1(base), route("psi1")};
  if (base.q(1) == 0 && base.h(0) == base.h(1)) {
    const TrapWitness shape{base.h(0), base.h(2), base, 0};
    if (delta(rotate(base, 2)) > 0) return {rotate(base, 2), route("psi1^2")};
    const int m = shape.r + shape.s;
    const int d = std::gcd(base.q(0) + base.q(2), m);
    const auto step = [](const SixTuple& g) { return psi1(psi2(sigma(g))); };
    SixTuple a = base, b = psi1(psi2(base));
    for (int k = 1; k <= m / d; ++k) {
      a = step(a);
      b = step(b);
      const std::string power = "(psi1 psi2 sigma)^" + std::to_string(k);
      if (a.complexity() == base.complexity() && delta(a) > 0) return {a, route(power)};
      if (b.complexity() == base.complexity() && delta(b) > 0)
        return {b, route(power + " psi1 psi2")};
    }
  }
  throw OrbitError("no ascending tuple found for " + format_tuple(f));
}

std::optional<std::size_t> OrbitGraph::find(const SixTuple& f) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].tuple == f) return i;
  return std::nullopt;
}

OrbitGraph explore(const SixTuple& f, int max_complexity, std::size_t max_nodes) {
  OrbitGraph out;
  std::map<SixTuple, std::size_t> index;
  std::deque<std::size_t> queue;
  auto add = [&](const SixTuple& g) -> std::optional<std::size_t> {
    if (auto it = index.find(g); it != index.end()) return it->second;
    if (out.nodes.size() >= max_nodes) {
      out.truncated = true;
      return std::nullopt;
    }
    index.emplace(g, out.nodes.size());
    out.nodes.push_back({g, g.complexity(), false});
    queue.push_back(out.nodes.size() - 1);
    return out.nodes.size() - 1;
  };

  std::set<std::pair<std::size_t, std::size_t>> edges;
  if (max_nodes > 0) add(canonical(f));
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    if (out.nodes[i].complexity > max_complexity) continue;
    out.nodes[i].expanded = true;
    const SixTuple here = out.nodes[i].tuple;
    for (const SixTuple& g : sigma_neighbors(here)) {
      if (auto j = add(g)) edges.insert({std::min(i, *j), std::max(i, *j)});
      else out.nodes[i].expanded = false;
    }
  }
  out.edges.assign(edges.begin(), edges.end());
  out.closed = std::all_of(out.nodes.begin(), out.nodes.end(),
                           [](const OrbitNode& n) { return n.expanded; });
  return out;
}

void write_orbit_tsv(std::ostream& out, const OrbitGraph& g) {
  out << "# nodes=" << g.nodes.size() << " edges=" << g.edges.size()
      << " closed=" << (g.closed ? "yes" : "no") << " truncated=" << (g.truncated ? "yes" : "no")
      << "\n";
  out << "node\ttuple\tupsilon\texpanded\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    out << i << "\t" << format_tuple(g.nodes[i].tuple) << "\t" << g.nodes[i].complexity << "\t"
        << (g.nodes[i].expanded ? "yes" : "no") << "\n";
  out << "edge\tfrom\tto\n";
  for (const auto& [a, b] : g.edges) out << "edge\t" << a << "\t" << b << "\n";
}

void write_orbit_dot(std::ostream& out, const OrbitGraph& g) {
  out << "graph orbit {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    out << "  n" << i << " [label=\"" << format_tuple(g.nodes[i].tuple) << "\\nυ="
        << g.nodes[i].complexity << "\"" << (g.nodes[i].expanded ? "" : ", style=dashed")
        << "];\n";
  for (const auto& [a, b] : g.edges) out << "  n" << a << " -- n" << b << ";\n";
  out << "}\n";
}

}  // namespace twosym
