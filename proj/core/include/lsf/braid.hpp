#ifndef LSF_BRAID_HPP
#define LSF_BRAID_HPP

#include <cstdint>
#include <vector>

#include "lsf/laurent.hpp"

namespace lsf::braid {

// Braid word on a fixed strand count; letter +-i stands for sigma_i^{+-1},
// 1 <= i <= strands-1.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  bool operator==(const BraidWord& o) const {
    return strands == o.strands && letters == o.letters;
  }
};

void validate(const BraidWord& w);  // throws Error on out-of-range letters

bool is_positive(const BraidWord& w);  // every letter positive (empty counts)
bool is_negative(const BraidWord& w);
BraidWord mirror(const BraidWord& w);

// Permutation of {0,...,strands-1} induced by the word: start position ->
// end position of each strand.
std::vector<int> word_permutation(const BraidWord& w);

int closure_components(const BraidWord& w);

// Seifert genus of the closure of a positive (or all-negative) braid whose
// closure is a knot: (1 - strands + length)/2.
std::int64_t genus_positive(const BraidWord& w);

enum class ReduceTag { Reduced, Split, Irreducible };

struct ReduceResult {
  ReduceTag tag;
  BraidWord word;  // the fully reduced word when tag == Reduced
};

// Markov-style reduction of a positive (or all-negative) word: an absent
// generator signals a split closure; a generator occurring exactly once is
// deleted and the adjacent strands merge. Closure type is preserved.
ReduceResult reduce(const BraidWord& w);

// Alexander polynomial of the closure (a knot) via the reduced Burau
// representation, normalized. Works for words of mixed sign.
KnotPoly1 burau_alexander(const BraidWord& w);

// Two-variable Alexander polynomial of (closure) union (braid axis), for
// words whose closure is a knot; x is the knot meridian, y the axis
// meridian, and the linking number equals the strand count.
LinkPoly2 axis_link_poly(const BraidWord& w);

// Closed form (t^{pq}-1)(t-1)/((t^p-1)(t^q-1)) for the torus knot T(p,q).
KnotPoly1 torus_alexander(std::int64_t p, std::int64_t q);

struct CensusEntry {
  std::int64_t genus;
  KnotPoly1 alexander;
  BraidWord word;
};

// All knots of genus exactly N realized as closures of positive braids:
// braid index runs up to 2N+1, words are enumerated modulo cyclic rotation,
// reversal and index reflection, destabilizable and split words are skipped,
// and entries are deduplicated by (genus, normalized Alexander polynomial).
// The result is deterministic and independent of the worker count.
std::vector<CensusEntry> enumerate_genus(std::int64_t N, int jobs = 1);

// (sigma_1 ... sigma_{q-1})^p on q strands; negative letters when p < 0.
BraidWord torus_braid(std::int64_t p, std::int64_t q);

// Positive permutation-braid presentation of T(p,q) on p+q strands
// (p, q >= 1): the q strands shift forward by p over the p strands shifting
// back by q. Its axis realizes the twisting circle of the twisted torus
// construction for p > 0.
BraidWord staircase_braid(std::int64_t p, std::int64_t q);

BraidWord full_twist(int strands);  // (sigma_1 ... sigma_{n-1})^n

// Braid word whose closure is the n-twist T_{p,q,n} of T(p,q) along the
// seiferter c+. Sign contract: p > 0 gives a positive word iff n >= 0 and a
// negative word iff n <= -1; p < 0 gives a negative word for n <= 0 and a
// single-signed word for n in {1,2} according to the 2q-vs-|p| split.
// Throws OutOfProvenRange for p < 0, n >= 3.
BraidWord twisted_torus_braid(std::int64_t p, std::int64_t q, std::int64_t n);

}  // namespace lsf::braid

#endif
