#include "twosym/homology.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace twosym {

std::int64_t AbelianGroup::torsion_order() const {
  std::int64_t product = 1;
  for (auto t : torsion) product *= t;
  return product;
}

AbelianGroup AbelianGroup::cyclic(std::int64_t order) {
  if (order == 0) return {1, {}};
  return from_invariants(1, {order});
}

AbelianGroup AbelianGroup::from_invariants(int generators, std::vector<std::int64_t> invariants) {
  AbelianGroup g;
  std::vector<std::int64_t> nonzero;
  for (auto d : invariants)
    if (d != 0) nonzero.push_back(d < 0 ? -d : d);
  g.free_rank = generators - static_cast<int>(nonzero.size());
  if (g.free_rank < 0) throw std::invalid_argument("more invariants than generators");
  // Pairwise (gcd, lcm) until the list is a divisibility chain.
  for (std::size_t i = 0; i < nonzero.size(); ++i)
    for (std::size_t j = i + 1; j < nonzero.size(); ++j) {
      const auto a = nonzero[i], b = nonzero[j];
      const auto gcd = std::gcd(a, b);
      nonzero[i] = gcd;
      nonzero[j] = a / gcd * b;
    }
  for (auto d : nonzero)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

std::string to_string(const AbelianGroup& g) {
  if (g.is_trivial()) return "0";
  std::vector<std::string> parts;
  if (g.free_rank == 1) parts.push_back("Z");
  if (g.free_rank > 1) parts.push_back("Z^" + std::to_string(g.free_rank));
  for (auto t : g.torsion) parts.push_back("Z/" + std::to_string(t));
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
  return out;
}

AbelianGroup parse_abelian_group(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s == "0") return AbelianGroup::trivial();
  AbelianGroup g;
  std::vector<std::int64_t> torsion;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const auto plus = s.find('+', pos);
    const std::string part = s.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
    try {
      if (part == "Z") {
        g.free_rank += 1;
      } else if (part.rfind("Z^", 0) == 0) {
        g.free_rank += std::stoi(part.substr(2));
      } else if (part.rfind("Z/", 0) == 0) {
        torsion.push_back(std::stoll(part.substr(2)));
      } else {
        throw std::invalid_argument(part);
      }
    } catch (const std::logic_error&) {
      throw std::invalid_argument("malformed group signature \"" + std::string(text) + "\"");
    }
    if (plus == std::string::npos) break;
    pos = plus + 1;
  }
  const int rank = g.free_rank;
  g = AbelianGroup::from_invariants(static_cast<int>(torsion.size()), torsion);
  g.free_rank += rank;
  return g;
}

IntMatrix h1_presentation(const ColouredGraph& g) {
  const auto side = is_bipartite(g);
  if (!side) throw HomologyError("h1: graph is not bipartite (non-orientable)");
  if (!is_gem(g)) throw HomologyError("h1: graph is not a gem (some 3-residue is not a sphere)");
  if (!is_contracted(g)) throw HomologyError("h1: graph is not contracted");

  const auto gens = residues(g, ColourSet{0, 1});
  const auto rels = residues(g, ColourSet{2, 3});
  IntMatrix m(rels.count() + 1, gens.count());
  for (std::size_t r = 0; r < rels.count(); ++r)
    for (Vertex v : rels.classes[r]) m(r, gens.class_of[v]) += (*side)[v] == 0 ? 1 : -1;
  m(rels.count(), gens.class_of[0]) = 1;
  return m;
}

AbelianGroup h1(const ColouredGraph& g) {
  const IntMatrix m = h1_presentation(g);
  return AbelianGroup::from_invariants(static_cast<int>(m.cols()), smith_normal_form(m));
}

}  // namespace twosym
