#include "twosym/moves.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace twosym {

SixTuple psi1(const SixTuple& f) {
  return SixTuple::reduce(f.h(1), f.h(2), f.h(0), f.q(1), f.q(2), f.q(0));
}

SixTuple psi2(const SixTuple& f) {
  return SixTuple::reduce(f.h(2), f.h(1), f.h(0), f.q(0), f.q(2), f.q(1));
}

SixTuple psi3(const SixTuple& f) {
  return SixTuple::reduce(f.h(0), f.h(1), f.h(2), -f.q(0), -f.q(1), -f.q(2));
}

SixTuple apply_psi(int k, const SixTuple& f) {
  switch (k) {
    case 1: return psi1(f);
    case 2: return psi2(f);
    case 3: return psi3(f);
    default: throw std::invalid_argument("psi index must be 1, 2 or 3");
  }
}

SixTuple rotate(const SixTuple& f, int times) {
  SixTuple out = f;
  for (int i = 0; i < ((times % 3) + 3) % 3; ++i) out = psi1(out);
  return out;
}

std::string to_string(SigmaCase c) {
  switch (c) {
    case SigmaCase::Identity: return "q0=0";
    case SigmaCase::BelowBoth: return "0<q0<h0,h2";
    case SigmaCase::AboveBoth: return "q0>h0,h2";
    case SigmaCase::BetweenH0H2: return "h0<q0<h2";
    case SigmaCase::BetweenH2H0: return "h2<q0<h0";
  }
  return "?";
}

SigmaCase sigma_case(const SixTuple& f) {
  const int h0 = f.h(0), h2 = f.h(2), q0 = f.q(0);
  if (q0 == 0) return SigmaCase::Identity;
  if (q0 < h0 && q0 < h2) return SigmaCase::BelowBoth;
  if (q0 > h0 && q0 > h2) return SigmaCase::AboveBoth;
  if (h0 < q0 && q0 < h2) return SigmaCase::BetweenH0H2;
  if (h2 < q0 && q0 < h0) return SigmaCase::BetweenH2H0;
  throw TupleError(Condition::OddSum,
                   format_tuple(f) + ": q0 coincides with h0 or h2, sigma is undefined");
}

SixTuple sigma(const SixTuple& f) {
  const long h0 = f.h(0), h1 = f.h(1), h2 = f.h(2);
  const long q0 = f.q(0), q1 = f.q(1), q2 = f.q(2);
  for (int i = 0; i < 3; ++i)
    if ((f.h(i) + f.q(i)) % 2 == 0)
      throw TupleError(Condition::OddSum, format_tuple(f) + " violates (V); sigma needs it");
  switch (sigma_case(f)) {
    case SigmaCase::Identity:
      return f;
    case SigmaCase::BelowBoth:
      return SixTuple::reduce(h0 + h1 - q0, q0, h2 + h1 - q0, h0 + h1 + h2 - 2 * q0,
                              q0 + q1 + h1, q0 + q2 + h1);
    case SigmaCase::AboveBoth:
      return SixTuple::reduce(q0 + h1 - h2, h0 + h2 - q0, q0 + h1 - h0, h1, q0 + q1 - h2,
                              q0 + q2 - h0);
    case SigmaCase::BetweenH0H2:
      return SixTuple::reduce(h1, h0, h1 + h2 - h0, h1 + h2 - q0, q1, 2 * q0 + q2 + h1 - h0);
    case SigmaCase::BetweenH2H0:
      return SixTuple::reduce(h1 + h0 - h2, h2, h1, h1 + h0 - q0, 2 * q0 + q1 + h1 - h2, q2);
  }
  return f;
}

int delta(const SixTuple& f) {
  const int h0 = f.h(0), h1 = f.h(1), h2 = f.h(2), q0 = f.q(0);
  switch (sigma_case(f)) {
    case SigmaCase::Identity: return 0;
    case SigmaCase::BelowBoth: return h1 - q0;
    case SigmaCase::AboveBoth: return q0 + h1 - h0 - h2;
    case SigmaCase::BetweenH0H2: return h1 - h0;
    case SigmaCase::BetweenH2H0: return h1 - h2;
  }
  return 0;
}

namespace {

void require_sorted(const SixTuple& f) {
  if (!(f.h(0) <= f.h(1) && f.h(1) <= f.h(2)))
    throw std::invalid_argument("closed-form delta needs h0 <= h1 <= h2");
}

}  // namespace

int delta_sorted(const SixTuple& f) {
  require_sorted(f);
  const int h0 = f.h(0), h1 = f.h(1), h2 = f.h(2), q0 = f.q(0);
  if (q0 == 0) return 0;
  if (q0 < h0) return h1 - q0;
  if (q0 < h2) return h1 - h0;
  return q0 + h1 - h0 - h2;
}

int delta_sorted_rot1(const SixTuple& f) {
  require_sorted(f);
  const int h0 = f.h(0), h1 = f.h(1), h2 = f.h(2), q1 = f.q(1);
  if (q1 == 0) return 0;
  if (q1 < h0) return h2 - q1;
  if (q1 < h1) return h2 - h0;
  return q1 + h2 - h1 - h0;
}

int delta_sorted_rot2(const SixTuple& f) {
  require_sorted(f);
  const int h0 = f.h(0), h1 = f.h(1), h2 = f.h(2), q2 = f.q(2);
  if (q2 == 0) return 0;
  if (q2 < h1) return h0 - q2;
  if (q2 < h2) return h0 - h1;
  return q2 + h0 - h2 - h1;
}

std::vector<SixTuple> h_orbit(const SixTuple& f) {
  std::set<SixTuple> seen{f};
  std::vector<SixTuple> frontier{f};
  while (!frontier.empty()) {
    const SixTuple x = frontier.back();
    frontier.pop_back();
    for (const SixTuple& y : {psi1(x), psi2(x), psi3(x)})
      if (seen.insert(y).second) frontier.push_back(y);
  }
  return {seen.begin(), seen.end()};
}

bool h_equivalent(const SixTuple& a, const SixTuple& b) {
  const auto orbit = h_orbit(a);
  return std::binary_search(orbit.begin(), orbit.end(), b);
}

bool satisfies_canonical_conditions(const SixTuple& f) {
  const int h0 = f.h(0), h1 = f.h(1), h2 = f.h(2);
  const int q0 = f.q(0), q1 = f.q(1), q2 = f.q(2);
  const int m0 = f.modulus(0);
  const int l0 = f.half_modulus(0), l1 = f.half_modulus(1), l2 = f.half_modulus(2);
  // Negation as an upper bound lives in 1..2l, so -0 is 2l.
  auto neg_bound = [](int q, int m) { return m - q; };
  auto neg = [](int q, int m) { return (m - q) % m; };

  if (!(h0 <= h1 && h1 <= h2)) return false;                          // (a)
  if (q0 > l0) return false;                                          // (b)
  const bool q0_fixed = q0 == 0 || q0 == l0;
  if (q0_fixed && q1 > l1) return false;                              // (c)
  if (q0_fixed && (q1 == 0 || q1 == l1) && q2 > l2) return false;     // (d)
  // When h0 = h1 (resp. h1 = h2) the moduli of q0 and q2 (resp. q1) agree.
  if (h0 == h1) {
    if (!(q0 <= q2 && q2 <= neg_bound(q0, m0))) return false;         // (e)
    if (q2 == neg(q0, m0) && q1 > h1) return false;                   // (f)
  }
  if (h1 == h2) {
    if (!(q0 <= q1 && q1 <= neg_bound(q0, m0))) return false;         // (g)
    if (q1 == neg(q0, m0) && q2 > h2) return false;                   // (h)
  }
  if (h0 == h1 && h1 == h2) {
    if (q1 > q2) return false;                                        // (i)
    if (q0_fixed && q2 > neg_bound(q1, m0)) return false;
  }
  return true;
}

CanonicalChoice select_canonical(std::span<const SixTuple> members) {
  if (members.empty()) throw std::invalid_argument("select_canonical: empty orbit");
  CanonicalChoice choice{members.front(), 0, std::nullopt};
  std::optional<SixTuple> found;
  for (const SixTuple& g : members) {
    if (!satisfies_canonical_conditions(g)) continue;
    ++choice.qualifying;
    if (!found || g < *found) found = g;
  }
  if (choice.qualifying == 1) {
    choice.tuple = *found;
    return choice;
  }

  std::optional<SixTuple> fallback;
  for (const SixTuple& g : members) {
    const bool sorted = g.h(0) <= g.h(1) && g.h(1) <= g.h(2);
    if (sorted && (!fallback || g < *fallback)) fallback = g;
  }
  if (!fallback) fallback = *std::min_element(members.begin(), members.end());
  choice.tuple = *fallback;
  choice.warning = "canonical conditions matched " + std::to_string(choice.qualifying) +
                   " orbit members; using lexicographic fallback " + format_tuple(*fallback);
  return choice;
}

CanonicalChoice canonical_choice(const SixTuple& f) {
  const auto orbit = h_orbit(f);
  return select_canonical(orbit);
}

SixTuple canonical(const SixTuple& f) { return canonical_choice(f).tuple; }

std::vector<SixTuple> sigma_neighbors(const SixTuple& f) {
  const SixTuple self = canonical(f);
  std::set<SixTuple> out;
  for (int i = 0; i < 3; ++i) {
    const SixTuple image = canonical(sigma(rotate(f, i)));
    if (image != self) out.insert(image);
  }
  return {out.begin(), out.end()};
}

}  // namespace twosym
