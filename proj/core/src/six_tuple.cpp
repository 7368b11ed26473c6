#include "twosym/six_tuple.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <vector>

namespace twosym {

std::string condition_name(Condition c) {
  switch (c) {
    case Condition::PositiveH: return "(I)";
    case Condition::HParity: return "(II)";
    case Condition::QRange: return "(III)";
    case Condition::QParity: return "(IV)";
    case Condition::OddSum: return "(V)";
    case Condition::ThreeResidues: return "(VI)";
  }
  return "(?)";
}

namespace {

long positive_mod(long a, long m) { return ((a % m) + m) % m; }

std::string literal(int h0, int h1, int h2, long q0, long q1, long q2) {
  std::ostringstream os;
  os << "(" << h0 << "," << h1 << "," << h2 << ";" << q0 << "," << q1 << "," << q2 << ")";
  return os.str();
}

}  // namespace

SixTuple SixTuple::make(int h0, int h1, int h2, int q0, int q1, int q2) {
  const std::array<int, 3> h{h0, h1, h2};
  const std::array<int, 3> q{q0, q1, q2};
  const std::string text = literal(h0, h1, h2, q0, q1, q2);
  for (int i = 0; i < 3; ++i)
    if (h[i] <= 0)
      throw TupleError(Condition::PositiveH, text + " violates (I): h" + std::to_string(i) +
                                                 " must be positive");
  if ((h0 - h1) % 2 != 0 || (h1 - h2) % 2 != 0)
    throw TupleError(Condition::HParity, text + " violates (II): h's differ in parity");
  for (int i = 0; i < 3; ++i) {
    const int m = h[wrap(i - 1)] + h[i];
    if (q[i] < 0 || q[i] >= m)
      throw TupleError(Condition::QRange, text + " violates (III): q" + std::to_string(i) +
                                              " must lie in [0," + std::to_string(m) + ")");
  }
  if ((q0 - q1) % 2 != 0 || (q1 - q2) % 2 != 0)
    throw TupleError(Condition::QParity, text + " violates (IV): q's differ in parity");
  return SixTuple(h, q);
}

SixTuple SixTuple::reduce(int h0, int h1, int h2, long q0, long q1, long q2) {
  if (h0 <= 0 || h1 <= 0 || h2 <= 0)
    throw TupleError(Condition::PositiveH, literal(h0, h1, h2, q0, q1, q2) + " violates (I)");
  return make(h0, h1, h2, static_cast<int>(positive_mod(q0, h2 + h0)),
              static_cast<int>(positive_mod(q1, h0 + h1)),
              static_cast<int>(positive_mod(q2, h1 + h2)));
}

bool catalogue_order(const SixTuple& a, const SixTuple& b) {
  if (a.complexity() != b.complexity()) return a.complexity() < b.complexity();
  return a < b;
}

SixTuple parse_tuple(std::string_view text) {
  std::string cleaned;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) cleaned.push_back(ch);
  const bool structured = cleaned.find_first_of("(),;") != std::string::npos;

  std::vector<long> values;
  auto read_number = [&](std::string_view token) {
    long value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc{} || ptr != last)
      throw TupleError("malformed tuple \"" + std::string(text) + "\": bad integer \"" +
                       std::string(token) + "\"");
    values.push_back(value);
  };

  if (structured) {
    std::string_view body = cleaned;
    if (!body.empty() && body.front() == '(') {
      if (body.back() != ')')
        throw TupleError("malformed tuple \"" + std::string(text) + "\": unbalanced parentheses");
      body = body.substr(1, body.size() - 2);
    }
    const auto semi = body.find(';');
    if (semi == std::string_view::npos || body.find(';', semi + 1) != std::string_view::npos)
      throw TupleError("malformed tuple \"" + std::string(text) +
                       "\": expected (h0,h1,h2;q0,q1,q2)");
    for (std::string_view half : {body.substr(0, semi), body.substr(semi + 1)}) {
      std::size_t begin = 0;
      int count = 0;
      while (true) {
        const auto comma = half.find(',', begin);
        read_number(half.substr(begin, comma == std::string_view::npos ? half.npos : comma - begin));
        ++count;
        if (comma == std::string_view::npos) break;
        begin = comma + 1;
      }
      if (count != 3)
        throw TupleError("malformed tuple \"" + std::string(text) +
                         "\": expected three values on each side of ';'");
    }
  } else {
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) read_number(token);
    if (values.size() != 6)
      throw TupleError("malformed tuple \"" + std::string(text) + "\": expected six integers");
  }
  for (long v : values)
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
      throw TupleError("malformed tuple \"" + std::string(text) + "\": value out of range");
  return SixTuple::make(static_cast<int>(values[0]), static_cast<int>(values[1]),
                        static_cast<int>(values[2]), static_cast<int>(values[3]),
                        static_cast<int>(values[4]), static_cast<int>(values[5]));
}

std::string format_tuple(const SixTuple& f) {
  return literal(f.h(0), f.h(1), f.h(2), f.q(0), f.q(1), f.q(2));
}

std::ostream& operator<<(std::ostream& os, const SixTuple& f) { return os << format_tuple(f); }

Vertex vertex_index(const SixTuple& f, int i, int j) {
  i = SixTuple::wrap(i);
  Vertex offset = 0;
  for (int k = 0; k < i; ++k) offset += static_cast<Vertex>(f.modulus(k));
  return offset + static_cast<Vertex>(positive_mod(j, f.modulus(i)));
}

ColouredGraph build_graph(const SixTuple& f) {
  const std::size_t n = 2 * static_cast<std::size_t>(f.complexity());
  std::array<Involution, kColourCount> inv;
  for (auto& column : inv) column.resize(n);
  std::vector<VertexLabel> labels(n);

  // ι2 per residue i: the first h_i vertices go to C_{i+1}, the rest to C_{i-1}.
  auto iota2 = [&](int i, int j) -> std::pair<int, int> {
    if (j < f.h(i)) return {SixTuple::wrap(i + 1), -j - 1};
    return {SixTuple::wrap(i - 1), f.modulus(i) - j - 1};
  };

  for (int i = 0; i < 3; ++i) {
    const int m = f.modulus(i);
    for (int j = 0; j < m; ++j) {
      const Vertex v = vertex_index(f, i, j);
      labels[v] = GridLabel{i, j};
      const int sign = (j % 2 == 0) ? 1 : -1;
      inv[0][v] = vertex_index(f, i, j + sign);
      inv[1][v] = vertex_index(f, i, j - sign);
      const auto [i2, j2] = iota2(i, j);
      inv[2][v] = vertex_index(f, i2, j2);
      // ι3 = ρ ι2 ρ⁻¹
      const int pre = static_cast<int>(positive_mod(j - f.q(i), m));
      const auto [i3, j3] = iota2(i, pre);
      inv[3][v] = vertex_index(f, i3, j3 + f.q(i3));
    }
  }
  // The constructor re-checks that every map is a fixed-point-free involution.
  return ColouredGraph(std::move(inv), std::move(labels));
}

int complexity(const SixTuple& f) { return f.complexity(); }

std::string AdmissibilityReport::describe() const {
  std::ostringstream os;
  if (admissible) {
    os << "admissible";
  } else if (failed == Condition::OddSum) {
    os << "inadmissible: (V) fails, h" << odd_sum_index.value_or(-1) << "+q"
       << odd_sum_index.value_or(-1) << " is even";
  } else {
    os << "inadmissible: (VI) fails";
  }
  os << " ({2,3}-residues: " << residues_23 << ")";
  return os.str();
}

AdmissibilityReport is_admissible(const SixTuple& f) {
  AdmissibilityReport report;
  report.residues_23 = residue_count(build_graph(f), ColourSet{2, 3});
  for (int i = 0; i < 3; ++i) {
    if ((f.h(i) + f.q(i)) % 2 == 0) {
      report.failed = Condition::OddSum;
      report.odd_sum_index = i;
      return report;
    }
  }
  if (report.residues_23 != 3) {
    report.failed = Condition::ThreeResidues;
    return report;
  }
  report.admissible = true;
  return report;
}

bool rho_symmetry_check(const SixTuple& f) {
  const ColouredGraph g = build_graph(f);
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> rho(n);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < f.modulus(i); ++j)
      rho[vertex_index(f, i, j)] = vertex_index(f, i, j + f.q(i));

  const bool odd = f.q(0) % 2 == 1;
  const std::array<Colour, kColourCount> image = odd ? std::array<Colour, 4>{1, 0, 3, 2}
                                                     : std::array<Colour, 4>{0, 1, 3, 2};
  for (Vertex v = 0; v < n; ++v)
    for (Colour c = 0; c < kColourCount; ++c)
      if (rho[g.neighbour(c, v)] != g.neighbour(image[c], rho[v])) return false;
  return true;
}

std::optional<AbelianGroup> lens_expectation(const SixTuple& f) {
  int zeros = 0;
  int nonzero = -1;
  for (int i = 0; i < 3; ++i) {
    if (f.q(i) == 0)
      ++zeros;
    else
      nonzero = i;
  }
  if (zeros == 3) return AbelianGroup::trivial();
  if (zeros == 2) return AbelianGroup::cyclic(f.half_modulus(nonzero));
  return std::nullopt;
}

bool q_avoids_h(const SixTuple& f) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (f.q(i) == f.h(j)) return false;
  return true;
}

}  // namespace twosym
