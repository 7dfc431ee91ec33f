#ifndef LSF_SEIFERT_HPP
#define LSF_SEIFERT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lsf/intmath.hpp"

namespace lsf::seifert {

// Normalized Seifert invariants over S^2: integer obstruction b and
// exceptional fiber ratios sorted ascending, each strictly in (0,1).
// A single degenerate (infinite) fiber is recorded by the flag.
struct SeifertForm {
  Int b = 0;
  std::vector<Rational> ratios;
  bool degenerate = false;

  bool operator==(const SeifertForm& o) const {
    return b == o.b && ratios == o.ratios && degenerate == o.degenerate;
  }
  std::string str() const;
};

// Fold integer parts into b, drop regular (integral) fibers, sort. A nullopt
// entry is an infinite fiber; two of them raise TooManyDegenerate.
SeifertForm normalize(const Int& b, const std::vector<std::optional<Rational>>& raw);

// |H1| of the non-degenerate form, 0 encoding an infinite group.
Int h1_order(const SeifertForm& f);

struct JNWitness {
  Int a;
  Int k;
  bool operator==(const JNWitness& o) const { return a == o.a && k == o.k; }
};

// Smallest-k (then smallest-a) pair with 0 < a < k coprime, a <= k/2, and
// (r_1,...,r_{s-2}, r_{s-1}, r_s) < (1/k,...,1/k, a/k, (k-a)/k) strictly
// componentwise. Input sorted ascending with all entries in (0,1), s >= 3.
std::optional<JNWitness> jn_witness(const std::vector<Rational>& sorted_ratios);

enum class Verdict { LSpace, NotLSpace };

inline const char* to_string(Verdict v) {
  return v == Verdict::LSpace ? "LSpace" : "NotLSpace";
}

struct LSpaceResult {
  Verdict verdict;
  int branch = 0;  // 1, 2, 3: the matching non-L-space branch; 0 otherwise
  std::optional<JNWitness> witness;
  std::string certificate;
};

// Decision procedure for L-spaces among Seifert fibered spaces over S^2.
LSpaceResult is_lspace(const SeifertForm& f);

// One-parameter family Y_n = S^2(b; r_1,...,r_{s-1}, (n u + w)/(n t + v)).
struct SeifertFamily {
  Int b = 0;
  std::vector<Rational> base_ratios;  // each strictly in (0,1)
  Int t = 0, u = 0, v = 0, w = 0;     // t w - u v = +-1
};

void validate(const SeifertFamily& fam);  // throws Error on a bad family

SeifertForm family_member(const SeifertFamily& fam, std::int64_t n);
SeifertForm family_limit(const SeifertFamily& fam);

struct VerdictRun {
  std::int64_t lo, hi;  // inclusive
  Verdict verdict;
};

struct FamilyReport {
  std::vector<VerdictRun> runs;               // cover the window, ascending
  std::vector<std::int64_t> degenerate_members;
  Verdict limit;
  Verdict left_tail;    // exact eventual verdict as n -> -infinity
  Verdict right_tail;   // exact eventual verdict as n -> +infinity
  std::optional<std::int64_t> left_threshold;   // window prefix matching left_tail
  std::optional<std::int64_t> right_threshold;  // window suffix matching right_tail
  bool left_stable = false;
  bool right_stable = false;
  std::optional<bool> dichotomy;  // set when the family has >= 4 total fibers
  bool unstable_window = false;   // neither tail reached inside the window
};

// Window sweep plus exact tail/limit classification. Member verdicts are
// computed data-parallel over n when jobs > 1; output does not depend on jobs.
FamilyReport classify_family(const SeifertFamily& fam, std::int64_t n_min,
                             std::int64_t n_max, int jobs = 1);

}  // namespace lsf::seifert

#endif
