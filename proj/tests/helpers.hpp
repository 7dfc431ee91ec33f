#ifndef LSF_TESTS_HELPERS_HPP
#define LSF_TESTS_HELPERS_HPP

#include <cstdint>
#include <vector>

#include "lsf/braid.hpp"
#include "lsf/laurent.hpp"

namespace lsf::testutil {

// Deterministic 64-bit LCG so every property test is reproducible.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 16;
  }
  std::int64_t range(std::int64_t lo, std::int64_t hi) {  // inclusive
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

inline KnotPoly1 random_poly1(Rng& rng, int max_terms = 5, int max_exp = 4, int max_coeff = 4) {
  std::vector<std::pair<std::int64_t, Int>> terms;
  const int k = static_cast<int>(rng.range(0, max_terms));
  for (int i = 0; i < k; ++i)
    terms.emplace_back(rng.range(-max_exp, max_exp), Int(rng.range(-max_coeff, max_coeff)));
  return KnotPoly1::from_terms(terms);
}

inline LinkPoly2 random_poly2(Rng& rng, int max_terms = 5, int max_exp = 3, int max_coeff = 4) {
  std::vector<std::tuple<std::int64_t, std::int64_t, Int>> terms;
  const int k = static_cast<int>(rng.range(0, max_terms));
  for (int i = 0; i < k; ++i)
    terms.emplace_back(rng.range(-max_exp, max_exp), rng.range(-max_exp, max_exp),
                       Int(rng.range(-max_coeff, max_coeff)));
  return LinkPoly2::from_terms(terms);
}

// The L7a5 = B(22,5) two-variable Alexander polynomial (x+y-1)(xy-x-y),
// a two-bridge link with linking number one and positive y-breadth.
inline LinkPoly2 l7a5_poly() {
  const LinkPoly2 f1 = LinkPoly2::from_terms({{1, 0, 1}, {0, 1, 1}, {0, 0, -1}});
  const LinkPoly2 f2 = LinkPoly2::from_terms({{1, 1, 1}, {1, 0, -1}, {0, 1, -1}});
  return f1 * f2;
}

// Whitehead link polynomial -xy + x + y - 1 (linking number zero).
inline LinkPoly2 whitehead_poly() {
  return LinkPoly2::from_terms({{1, 1, -1}, {1, 0, 1}, {0, 1, 1}, {0, 0, -1}});
}

// Local full twist on the first r strands, embedded in a wider braid.
inline braid::BraidWord local_full_twist(int strands, int r, int sign) {
  braid::BraidWord out;
  out.strands = strands;
  if (r >= 2) {
    const braid::BraidWord ft = braid::full_twist(r);
    for (int rep = 0; rep < 1; ++rep)
      for (int l : ft.letters) out.letters.push_back(sign * l);
  }
  return out;
}

inline braid::BraidWord concat(const braid::BraidWord& a, const braid::BraidWord& b) {
  braid::BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

}  // namespace lsf::testutil

#endif
