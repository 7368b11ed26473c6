#include "twosym/suites.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

#include "twosym/block.hpp"
#include "twosym/catalogue.hpp"
#include "twosym/homology.hpp"
#include "twosym/moves.hpp"
#include "twosym/orbits.hpp"
#include "twosym/surgery.hpp"

namespace twosym {

namespace {

class Checker {
 public:
  explicit Checker(SuiteReport& r) : report_(r) {}

  void expect(bool ok, const SixTuple& f, const std::string& what) {
    ++report_.checked;
    if (!ok) report_.failures.push_back(format_tuple(f) + ": " + what);
  }

 private:
  SuiteReport& report_;
};

void laws(SuiteReport& r) {
  Checker c(r);
  std::size_t strict_lemma4 = 0, lemma4_total = 0;
  const std::array<std::function<SixTuple(const SixTuple&)>, 4> h_prime{
      [](const SixTuple& x) { return x; }, psi2, psi3,
      [](const SixTuple& x) { return psi2(psi3(x)); }};
  for (const SixTuple& f : enumerate_admissible(r.bound)) {
    c.expect(psi1(psi1(psi1(f))) == f, f, "psi1^3 != id");
    c.expect(psi2(psi2(f)) == f, f, "psi2^2 != id");
    c.expect(psi3(psi3(f)) == f, f, "psi3^2 != id");
    c.expect(psi2(psi3(f)) == psi3(psi2(f)), f, "psi2 psi3 != psi3 psi2");
    c.expect(psi1(psi3(f)) == psi3(psi1(f)), f, "psi1 psi3 != psi3 psi1");
    c.expect(psi1(psi2(f)) == psi2(psi1(psi1(f))), f, "psi1 psi2 != psi2 psi1^2");

    const SixTuple s = sigma(f);
    c.expect(sigma(s) == f, f, "sigma^2 != id");
    c.expect(sigma(psi2(f)) == psi2(s), f, "sigma psi2 != psi2 sigma");
    c.expect(sigma(psi3(f)) == psi3(s), f, "sigma psi3 != psi3 sigma");
    c.expect(is_admissible(s).admissible, f, "sigma(f) inadmissible");
    c.expect(s.complexity() - f.complexity() == delta(f), f, "complexity change != delta");

    // Conjugating by elements of <psi2, psi3> commutes with σ on every rotation.
    for (int e = 0; e < 3; ++e) {
      const SixTuple g = rotate(f, e);
      for (const auto& h : h_prime) c.expect(sigma(h(g)) == h(sigma(g)), f, "sigma h' != h' sigma");
    }

    const auto graph = build_graph(f);
    for (int k = 1; k <= 3; ++k) {
      const SixTuple g = apply_psi(k, f);
      c.expect(is_admissible(g).admissible, f, "psi" + std::to_string(k) + " breaks admissibility");
      const auto iso = isomorphic_up_to_swaps(graph, build_graph(g));
      c.expect(iso.has_value(), f, "graph of psi" + std::to_string(k) + " image not isomorphic");
      ++lemma4_total;
      if (iso && iso->strict()) ++strict_lemma4;
    }

    if (f.h(0) <= f.h(1) && f.h(1) <= f.h(2)) {
      c.expect(delta_sorted(f) == delta(f), f, "sorted delta form");
      c.expect(delta_sorted_rot1(f) == delta(psi1(f)), f, "sorted delta form after psi1");
      c.expect(delta_sorted_rot2(f) == delta(rotate(f, 2)), f, "sorted delta form after psi1^2");
    }
  }
  r.notes.push_back("psi images colour-preserving isomorphic: " + std::to_string(strict_lemma4) +
                    "/" + std::to_string(lemma4_total) +
                    " (the rest after swapping 0<->1 or 2<->3)");
}

void sigma_constructive(SuiteReport& r) {
  Checker c(r);
  std::size_t strict = 0, total = 0;
  for (const SixTuple& f : enumerate_admissible(r.bound)) {
    if (f.q(0) == 0) continue;
    const auto v = verify_sigma_constructively(f);
    std::string why = v.failure.value_or("");
    if (!v.isomorphic) why += " result not isomorphic to graph of sigma(f)";
    if (!v.table_matches) why += " block offsets differ from table";
    if (!v.table_properties) why += " offset properties fail";
    if (!v.gamma_restores) why += " inserted block does not cancel back";
    if (!v.mirror_restores) why += " mirror block does not cancel back";
    c.expect(v.ok(), f, why);
    ++total;
    strict += v.strict;
  }
  r.notes.push_back("surgeries " + std::to_string(total) + ", colour-preserving " +
                    std::to_string(strict) + ", after a pair swap " +
                    std::to_string(total - strict));
}

void homology_invariance(SuiteReport& r) {
  Checker c(r);
  std::size_t lens = 0;
  for (const SixTuple& f : enumerate_admissible(r.bound)) {
    const AbelianGroup base = h1(build_graph(f));
    const SixTuple s = sigma(f);
    c.expect(h1(build_graph(s)) == base, f, "H1 changes under sigma");
    c.expect(s.complexity() == f.complexity() + delta(f), f, "complexity change != delta");
    for (int k = 1; k <= 3; ++k)
      c.expect(h1(build_graph(apply_psi(k, f))) == base, f,
               "H1 changes under psi" + std::to_string(k));
    if (auto expected = lens_expectation(f)) {
      ++lens;
      c.expect(base.free_rank == expected->free_rank &&
                   base.torsion_order() == expected->torsion_order(),
               f, "H1 " + to_string(base) + " differs from lens expectation " + to_string(*expected));
    }
    // Surgery pipelines on the smaller tuples.
    if (f.q(0) != 0 && f.complexity() <= std::min(r.bound, 9)) {
      const SurgeryTrace t = build_gf(f);
      c.expect(h1(cancel_block(t.graph, t.theta)) == base, f, "H1 changes under block cancellation");
      c.expect(h1(cancel_block_by_dipoles(t.graph, t.theta)) == base, f,
               "H1 changes under dipole cancellation");
    }
  }
  r.notes.push_back("tuples with two vanishing q's checked against lens orders: " +
                    std::to_string(lens));
}

void minimality_agreement(SuiteReport& r) {
  Checker c(r);
  std::size_t minimal = 0, roots = 0;
  for (const SixTuple& f : enumerate_canonical(r.bound)) {
    const bool m = minimal_closed_form(f), root = root_closed_form(f);
    c.expect(m == minimal_by_delta(f), f, "minimality forms disagree");
    c.expect(root == root_by_delta(f), f, "root forms disagree");
    minimal += m;
    roots += root;
  }
  r.notes.push_back("minimal " + std::to_string(minimal) + ", roots " + std::to_string(roots));
}

void trap_closure(SuiteReport& r) {
  Checker c(r);
  std::size_t traps = 0, ascended = 0, guarded = 0;
  for (const SixTuple& f : enumerate_canonical(r.bound)) {
    if (auto w = is_trap(f)) {
      ++traps;
      const OrbitGraph g = explore(f, 4 * r.bound, 100000);
      c.expect(g.closed, f, "trap orbit exploration did not close");
      for (const auto& node : g.nodes) c.expect(is_trap(node.tuple).has_value(), f, "trap orbit reaches non-trap " + format_tuple(node.tuple));
      for (int i = 0; i < 3; ++i) {
        const SixTuple s = sigma(rotate(f, i));
        const auto w2 = is_trap(s);
        c.expect(w2 && w2->r == w->r && w2->s == w->s, f,
                 "sigma changes trap type at rotation " + std::to_string(i));
      }
      continue;
    }
    const OrbitGraph g = explore(f, r.bound, 2000);
    for (const auto& node : g.nodes)
      c.expect(!is_trap(node.tuple), f, "non-trap orbit reaches trap " + format_tuple(node.tuple));
    if (!passes_genus_two_guard(f)) {
      ++guarded;
      continue;
    }
    try {
      const AscentWitness a = ascend_witness(f);
      c.expect(delta(a.tuple) > 0 && a.tuple.complexity() == f.complexity(), f,
               "ascent witness has delta <= 0 or wrong complexity");
      ++ascended;
    } catch (const std::exception& e) {
      c.expect(false, f, e.what());
    }
  }
  r.notes.push_back("traps " + std::to_string(traps) + ", ascended " + std::to_string(ascended) +
                    ", excluded by genus-two guard " + std::to_string(guarded));
}

void genus_embedding(SuiteReport& r) {
  Checker c(r);
  for (const SixTuple& f : enumerate_admissible(r.bound)) {
    const ColouredGraph g = build_graph(f);
    c.expect(embedding_euler(g, {0, 2, 1, 3}) == -2, f, "embedding is not of genus two");
    c.expect(is_gem(g), f, "not a gem");
    c.expect(is_contracted(g), f, "not contracted");
    c.expect(is_bipartite(g).has_value(), f, "not bipartite");
    c.expect(residue_count(g, ColourSet{2, 3}) == 3, f, "{2,3}-residues != 3");
  }
}

void canonical_uniqueness(SuiteReport& r) {
  Checker c(r);
  std::set<SixTuple> seen;
  std::size_t orbits = 0, ambiguous = 0;
  for (const SixTuple& f : enumerate_admissible(r.bound)) {
    if (seen.count(f)) continue;
    const auto orbit = h_orbit(f);
    seen.insert(orbit.begin(), orbit.end());
    ++orbits;
    const auto choice = select_canonical(orbit);
    ++r.checked;
    if (choice.qualifying != 1) {
      ++ambiguous;
      r.notes.push_back("ambiguous orbit of " + format_tuple(f) + ": " + *choice.warning);
    }
    for (const SixTuple& g : orbit) c.expect(canonical(g) == choice.tuple, g, "canonical form not constant on orbit");
    c.expect(canonical(choice.tuple) == choice.tuple, f, "canonical form not idempotent");
  }
  r.notes.push_back("orbits " + std::to_string(orbits) + ", ambiguous " + std::to_string(ambiguous));
}

void catalogue_smoke(SuiteReport& r) {
  Checker c(r);
  const std::vector<SixTuple> expected{SixTuple::make(1, 1, 1, 0, 0, 0),
                                       SixTuple::make(1, 1, 3, 0, 0, 2),
                                       SixTuple::make(1, 1, 3, 2, 0, 2)};
  const auto got = enumerate_canonical(r.bound);
  if (r.bound == 5) c.expect(got == expected, expected.front(), "catalogue at 5 differs from the expected three tuples");
  for (const SixTuple& f : got) {
    c.expect(is_admissible(f).admissible, f, "listed tuple inadmissible");
    c.expect(canonical(f) == f, f, "listed tuple not canonical");
  }
  r.notes.push_back("canonical tuples " + std::to_string(got.size()));
}

struct SuiteEntry {
  int bound;
  void (*run)(SuiteReport&);
};

const std::map<std::string, SuiteEntry, std::less<>>& registry() {
  static const std::map<std::string, SuiteEntry, std::less<>> suites{
      {"laws", {13, laws}},
      {"sigma-constructive", {11, sigma_constructive}},
      {"homology-invariance", {13, homology_invariance}},
      {"minimality-agreement", {15, minimality_agreement}},
      {"trap-closure", {13, trap_closure}},
      {"genus-embedding", {13, genus_embedding}},
      {"canonical-uniqueness", {13, canonical_uniqueness}},
      {"catalogue-smoke", {5, catalogue_smoke}},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "laws",         "sigma-constructive", "homology-invariance", "minimality-agreement",
      "trap-closure", "genus-embedding",    "canonical-uniqueness", "catalogue-smoke"};
  return names;
}

int default_bound(std::string_view name) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown suite \"" + std::string(name) + "\"");
  return it->second.bound;
}

SuiteReport run_suite(std::string_view name, int bound) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown suite \"" + std::string(name) + "\"");
  SuiteReport r;
  r.name = std::string(name);
  r.bound = bound > 0 ? bound : it->second.bound;
  it->second.run(r);
  return r;
}

void write_report(std::ostream& out, const SuiteReport& r, std::size_t max_failures) {
  out << "suite " << r.name << " bound=" << r.bound << " checks=" << r.checked
      << " failures=" << r.failures.size() << " " << (r.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& note : r.notes) out << "  note: " << note << "\n";
  for (std::size_t i = 0; i < r.failures.size() && i < max_failures; ++i)
    out << "  fail: " << r.failures[i] << "\n";
  if (r.failures.size() > max_failures)
    out << "  ... " << r.failures.size() - max_failures << " more\n";
}

}  // namespace twosym
