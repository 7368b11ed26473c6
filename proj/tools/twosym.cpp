// Command-line front end for 6-tuple crystallizations of genus-two
// 3-manifolds: moves, classification, orbit exploration, catalogues and
// verification suites.

#include <fstream>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twosym/catalogue.hpp"
#include "twosym/homology.hpp"
#include "twosym/moves.hpp"
#include "twosym/orbits.hpp"
#include "twosym/six_tuple.hpp"
#include "twosym/suites.hpp"
#include "twosym/surgery.hpp"

namespace {

using namespace twosym;

enum ExitCode { kOk = 0, kUsage = 1, kInvalid = 2, kSuiteFailed = 3 };

// A tuple given either as one "(h0,h1,h2;q0,q1,q2)" word or as six integers.
SixTuple tuple_from_words(const std::vector<std::string>& words) {
  const std::string text = std::accumulate(
      words.begin(), words.end(), std::string{},
      [](std::string acc, const std::string& w) { return acc.empty() ? w : acc + " " + w; });
  return parse_tuple(text);
}

void add_tuple(CLI::App* cmd, std::vector<std::string>& words) {
  cmd->add_option("tuple", words, "6-tuple as \"(h0,h1,h2;q0,q1,q2)\" or six integers")
      ->required();
}

void require_admissible(const SixTuple& f) {
  const auto report = is_admissible(f);
  if (!report.admissible) throw TupleError(*report.failed, report.describe());
}

int cmd_check(const SixTuple& f) {
  const auto report = is_admissible(f);
  std::cout << format_tuple(f) << "\n" << report.describe() << "\n";
  return report.admissible ? kOk : kInvalid;
}

int cmd_sigma(const SixTuple& f, bool trace) {
  require_admissible(f);
  const SixTuple s = sigma(f);
  if (!trace) {
    std::cout << format_tuple(s) << "\n";
    return kOk;
  }
  std::cout << "input " << format_tuple(f) << "\n";
  std::cout << "case " << to_string(sigma_case(f)) << "\n";
  std::cout << "delta " << delta(f) << "\n";
  std::cout << "output " << format_tuple(s) << "\n";
  if (f.q(0) != 0) write_trace(std::cout, build_gf(f));
  return kOk;
}

int cmd_verify_sigma(const SixTuple& f, bool trace) {
  require_admissible(f);
  const auto v = verify_sigma_constructively(f, trace);
  write_verification(std::cout, v);
  return v.ok() ? kOk : kInvalid;
}

int cmd_canonical(const SixTuple& f) {
  const auto choice = canonical_choice(f);
  if (choice.warning) std::cerr << "warning: " << *choice.warning << "\n";
  std::cout << format_tuple(choice.tuple) << "\n";
  return kOk;
}

int cmd_classify(const SixTuple& input) {
  require_admissible(input);
  const SixTuple f = canonical(input);
  const CatalogueRecord r = classify_record(f);
  std::cout << "tuple " << format_tuple(f) << "\n";
  if (f != input) std::cout << "input " << format_tuple(input) << "\n";
  std::cout << "upsilon " << r.upsilon << "\n";
  if (auto w = is_trap(f)) {
    std::cout << "trap yes\ntrap_type " << trap_type(*w) << "\ntrap_base " << format_tuple(w->base)
              << "\ntrap_d " << w->d << "\n";
  } else {
    std::cout << "trap no\n";
  }
  std::cout << "minimal " << (r.minimal ? "yes" : "no") << "\n";
  std::cout << "root " << (r.root ? "yes" : "no") << "\n";
  std::cout << "delta " << delta(f) << " " << delta(rotate(f, 1)) << " " << delta(rotate(f, 2))
            << "\n";
  std::cout << "genus_two_guard " << (passes_genus_two_guard(f) ? "pass" : "fail") << "\n";
  std::cout << "h1 " << to_string(r.h1) << "\n";
  for (const auto& w : r.warnings) std::cout << "warning " << w << "\n";
  return kOk;
}

int cmd_orbit(const SixTuple& f, int max_complexity, std::size_t max_nodes,
              const std::string& format) {
  require_admissible(f);
  const OrbitGraph g = explore(f, max_complexity, max_nodes);
  if (format == "dot")
    write_orbit_dot(std::cout, g);
  else
    write_orbit_tsv(std::cout, g);
  return kOk;
}

int cmd_minimize(const SixTuple& f) {
  require_admissible(f);
  const SixTuple m = minimize(f);
  std::cout << format_tuple(m) << "\n";
  return kOk;
}

int cmd_catalogue(int max_complexity, const std::string& out_path, unsigned jobs) {
  const auto records = build_catalogue(max_complexity, jobs);
  if (out_path == "-") {
    write_catalogue_tsv(std::cout, records);
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write " + out_path);
    write_catalogue_tsv(out, records);
  }
  std::size_t traps = 0, guarded_traps = 0, roots = 0, minimal = 0;
  for (const auto& r : records) {
    traps += r.trap;
    guarded_traps += r.trap && passes_genus_two_guard(r.tuple);
    roots += r.root;
    minimal += r.minimal;
  }
  std::cerr << "canonical " << records.size() << " minimal " << minimal << " roots " << roots
            << " traps " << traps << " traps_passing_genus_two_guard " << guarded_traps << "\n";
  return kOk;
}

int cmd_verify(const std::string& suite, int bound) {
  const SuiteReport r = run_suite(suite, bound);
  write_report(std::cout, r);
  return r.passed() ? kOk : kSuiteFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-symmetric transformations on 6-tuples of genus-two crystallizations"};
  app.require_subcommand(1);

  std::vector<std::string> words;
  bool trace = false;
  std::string format = "tsv";
  int max_complexity = 0;
  std::size_t max_nodes = 10000;
  std::string out_path = "-";
  unsigned jobs = 1;
  int psi_index = 1;
  std::string suite;
  int bound = 0;

  auto* check = app.add_subcommand("check", "report conditions (I)-(VI) for a tuple");
  add_tuple(check, words);

  auto* graph = app.add_subcommand("graph", "print the 4-coloured graph of a tuple");
  add_tuple(graph, words);
  graph->add_option("--format", format, "output format")->check(CLI::IsMember({"dot"}))->default_val("dot");

  auto* sig = app.add_subcommand("sigma", "apply the 2-symmetric transformation");
  add_tuple(sig, words);
  sig->add_flag("--trace", trace, "show the case split and the surgery blocks");

  auto* vsig = app.add_subcommand("verify-sigma", "realise sigma by block surgery and compare graphs");
  add_tuple(vsig, words);
  vsig->add_flag("--trace", trace, "dump the surgery trace");

  auto* can = app.add_subcommand("canonical", "canonical representative of the H-orbit");
  add_tuple(can, words);

  auto* psi = app.add_subcommand("psi", "apply psi1, psi2 or psi3");
  psi->add_option("k", psi_index, "which map")->required()->check(CLI::Range(1, 3));
  add_tuple(psi, words);

  auto* cls = app.add_subcommand("classify", "trap, minimality, root and H1 of the canonical form");
  add_tuple(cls, words);

  auto* orb = app.add_subcommand("orbit", "explore the sigma-move graph around a tuple");
  add_tuple(orb, words);
  orb->add_option("--max-complexity", max_complexity, "do not expand beyond this complexity")
      ->required();
  orb->add_option("--max-nodes", max_nodes, "node limit")->default_val(10000);
  orb->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"tsv", "dot"}))
      ->default_val("tsv");

  auto* mini = app.add_subcommand("minimize", "descend to a minimal canonical tuple");
  add_tuple(mini, words);

  auto* cat = app.add_subcommand("catalogue", "classify every canonical tuple up to a complexity");
  cat->add_option("--max-complexity", max_complexity, "complexity bound")
      ->required()
      ->check(CLI::Range(3, 99));
  cat->add_option("--out", out_path, "TSV output file, - for stdout")->default_val("-");
  cat->add_option("--jobs", jobs, "worker threads")->default_val(1)->check(CLI::Range(1, 256));

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  ver->add_option("--bound", bound, "complexity bound (default: the suite's own)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*ver) return cmd_verify(suite, bound);
    if (*cat) return cmd_catalogue(max_complexity, out_path, jobs);

    const SixTuple f = tuple_from_words(words);
    if (*check) return cmd_check(f);
    if (*graph) {
      write_dot(std::cout, build_graph(f), "gamma");
      return kOk;
    }
    if (*sig) return cmd_sigma(f, trace);
    if (*vsig) return cmd_verify_sigma(f, trace);
    if (*can) return cmd_canonical(f);
    if (*psi) {
      std::cout << format_tuple(apply_psi(psi_index, f)) << "\n";
      return kOk;
    }
    if (*cls) return cmd_classify(f);
    if (*orb) return cmd_orbit(f, max_complexity, max_nodes, format);
    if (*mini) return cmd_minimize(f);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kUsage;
}
