#include "twosym/catalogue.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "twosym/disjoint_set.hpp"
#include "twosym/homology.hpp"

namespace twosym {

namespace {

struct HTriple {
  int h0, h1, h2;
};

// Sorted h-triples of equal parity, in catalogue order.
std::vector<HTriple> h_triples(int max_complexity) {
  std::vector<HTriple> out;
  for (int u = 3; u <= max_complexity; ++u)
    for (int h0 = 1; 3 * h0 <= u; ++h0)
      for (int h1 = h0; h0 + 2 * h1 <= u; ++h1) {
        const int h2 = u - h0 - h1;
        if (h0 % 2 == h1 % 2 && h1 % 2 == h2 % 2) out.push_back({h0, h1, h2});
      }
  return out;
}

std::vector<SixTuple> canonical_with_hs(const HTriple& t) {
  std::vector<SixTuple> out;
  const int m0 = t.h2 + t.h0, m1 = t.h0 + t.h1, m2 = t.h1 + t.h2;
  const int start = 1 - t.h0 % 2;  // h_i + q_i odd
  for (int q0 = start; q0 < m0; q0 += 2)
    for (int q1 = start; q1 < m1; q1 += 2)
      for (int q2 = start; q2 < m2; q2 += 2) {
        const SixTuple f = SixTuple::make(t.h0, t.h1, t.h2, q0, q1, q2);
        if (!satisfies_canonical_conditions(f)) continue;
        if (canonical(f) != f) continue;
        if (is_admissible(f).admissible) out.push_back(f);
      }
  return out;
}

}  // namespace

std::vector<SixTuple> enumerate_canonical(int max_complexity, unsigned jobs) {
  const auto tasks = h_triples(max_complexity);
  std::vector<std::vector<SixTuple>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = canonical_with_hs(tasks[i]);
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < n; ++k) pool.emplace_back(worker);
  }
  // Tasks are in catalogue order and each task's output is lexicographic.
  std::vector<SixTuple> out;
  for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
  return out;
}

std::vector<SixTuple> enumerate_admissible(int max_complexity) {
  std::vector<SixTuple> out;
  for (int u = 3; u <= max_complexity; ++u)
    for (int h0 = 1; h0 <= u - 2; ++h0)
      for (int h1 = 1; h0 + h1 <= u - 1; ++h1) {
        const int h2 = u - h0 - h1;
        if (h0 % 2 != h1 % 2 || h1 % 2 != h2 % 2) continue;
        const int start = 1 - h0 % 2;
        for (int q0 = start; q0 < h2 + h0; q0 += 2)
          for (int q1 = start; q1 < h0 + h1; q1 += 2)
            for (int q2 = start; q2 < h1 + h2; q2 += 2) {
              const SixTuple f = SixTuple::make(h0, h1, h2, q0, q1, q2);
              if (is_admissible(f).admissible) out.push_back(f);
            }
      }
  return out;
}

CatalogueRecord classify_record(const SixTuple& f) {
  CatalogueRecord r;
  r.tuple = f;
  r.upsilon = f.complexity();
  const auto choice = canonical_choice(f);
  if (choice.warning) r.warnings.push_back(*choice.warning);
  if (auto w = is_trap(f)) {
    r.trap = true;
    r.trap_type = trap_type(*w);
  }
  r.minimal = is_minimal(f);
  r.root = is_root(f);
  r.h1 = h1(build_graph(f));
  return r;
}

std::vector<CatalogueRecord> build_catalogue(int max_complexity, unsigned jobs) {
  const auto tuples = enumerate_canonical(max_complexity, jobs);
  std::vector<CatalogueRecord> records(tuples.size());
  std::vector<std::vector<SixTuple>> neighbours(tuples.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tuples.size(); i = next++) {
      records[i] = classify_record(tuples[i]);
      neighbours[i] = sigma_neighbors(tuples[i]);
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tuples.size())));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < n; ++k) pool.emplace_back(worker);
  }

  std::map<SixTuple, std::size_t> index;
  for (std::size_t i = 0; i < tuples.size(); ++i) index.emplace(tuples[i], i);
  DisjointSet classes(tuples.size());
  for (std::size_t i = 0; i < tuples.size(); ++i)
    for (const SixTuple& g : neighbours[i])
      if (auto it = index.find(g); it != index.end()) classes.unite(i, it->second);

  std::map<std::size_t, std::size_t> ids;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    const auto [it, fresh] = ids.emplace(classes.find(i), ids.size());
    records[i].orbit_id = it->second;
  }
  return records;
}

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

bool parse_yes_no(const std::string& s) {
  if (s == "yes") return true;
  if (s == "no") return false;
  throw std::invalid_argument("expected yes/no, got \"" + s + "\"");
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

void write_catalogue_tsv(std::ostream& out, const std::vector<CatalogueRecord>& records) {
  out << kCatalogueHeader << "\n";
  for (const auto& r : records) {
    out << format_tuple(r.tuple) << "\t" << r.upsilon << "\t" << yes_no(r.trap) << "\t"
        << r.trap_type << "\t" << yes_no(r.minimal) << "\t" << yes_no(r.root) << "\t"
        << to_string(r.h1) << "\t" << r.orbit_id << "\t";
    for (std::size_t i = 0; i < r.warnings.size(); ++i) out << (i ? "; " : "") << r.warnings[i];
    out << "\n";
  }
}

std::vector<CatalogueRecord> read_catalogue_tsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCatalogueHeader)
    throw std::invalid_argument("catalogue header missing or unexpected");
  std::vector<CatalogueRecord> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split(line, '\t');
    if (fields.size() != 9)
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 9 fields");
    CatalogueRecord r;
    r.tuple = parse_tuple(fields[0]);
    r.upsilon = std::stoi(fields[1]);
    r.trap = parse_yes_no(fields[2]);
    r.trap_type = fields[3];
    r.minimal = parse_yes_no(fields[4]);
    r.root = parse_yes_no(fields[5]);
    r.h1 = parse_abelian_group(fields[6]);
    r.orbit_id = std::stoul(fields[7]);
    if (!fields[8].empty()) {
      std::size_t pos = 0;
      for (;;) {
        const auto cut = fields[8].find("; ", pos);
        r.warnings.push_back(fields[8].substr(pos, cut - pos));
        if (cut == std::string::npos) break;
        pos = cut + 2;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace twosym
