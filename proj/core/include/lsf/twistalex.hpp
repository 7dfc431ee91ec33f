#ifndef LSF_TWISTALEX_HPP
#define LSF_TWISTALEX_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "lsf/laurent.hpp"

namespace lsf::twistalex {

// Outcome of checking the Torres conditions and the breadth parity for a
// candidate two-variable link polynomial with linking number omega.
// Failures are reported, never thrown.
struct TorresReport {
  bool t1 = false;      // Delta(x,y) = x^m y^n Delta(x^-1, y^-1)
  bool t2 = false;      // specializations against both components
  bool t3 = false;      // Delta(1,1) = +-omega
  bool parity = false;  // br_x == br_y == omega - 1 (mod 2)
  std::int64_t witness_m = 0;  // valid when t1 holds
  std::int64_t witness_n = 0;
  bool pass() const { return t1 && t2 && t3 && parity; }
};

TorresReport torres_verify(const LinkPoly2& delta2, std::int64_t omega,
                           const KnotPoly1& delta_c = KnotPoly1::one(),
                           const std::optional<KnotPoly1>& delta_k = std::nullopt);

// Transport of the link polynomial under n twists: y -> x^{-n|omega|} y.
LinkPoly2 twist_link(const LinkPoly2& delta2, std::int64_t omega, std::int64_t n);

// Alexander polynomial of the twisted knot K_n, normalized. Requires
// |omega| >= 1; an InexactDivision signals that delta2 was not genuine link
// data for this omega.
KnotPoly1 twist_knot(const LinkPoly2& delta2, std::int64_t omega, std::int64_t n);

// Floor-at-zero lower bound for the Seifert genus of K_n.
std::int64_t genus_lower_bound(const LinkPoly2& delta2, std::int64_t omega, std::int64_t n);

enum class FamilyTag {
  LinkingZero = 1,    // omega == 0: genera bounded
  MeridianLike = 2,   // |omega| == 1 and y-breadth zero: polynomial frozen
  GenusUnbounded = 3  // genus grows linearly in |n|
};

struct FamilyCase {
  FamilyTag tag;
  std::int64_t y_breadth = 0;
  std::int64_t slope = 0;       // asymptotic breadth growth per twist, |omega| * y_breadth
  std::int64_t constant = 0;    // br(Delta(t, t^{-n|omega|})) = slope * n + constant for n >> 0
};

// Trichotomy for the twist family; input must pass torres_verify with
// delta_c = 1 (unknotted twisting circle), else InvalidLinkData.
FamilyCase classify_family(const LinkPoly2& delta2, std::int64_t omega);

struct WindowResult {
  std::vector<std::int64_t> admissible;  // ascending
  bool unbounded = false;                // Case 1/2: the obstruction is vacuous
};

// All n in [n_min, n_max] that survive the necessary L-space surgery
// condition |r0 + n omega^2| >= br(Delta(t, t^{-n omega})) - omega.
WindowResult lspace_window(const LinkPoly2& delta2, std::int64_t omega,
                           const Rational& r0, std::int64_t n_min, std::int64_t n_max);

// Coefficient test for Alexander polynomials of L-space knots: the symmetric
// representative has coefficients +-1, strictly alternating, +1 at both ends.
bool os_candidate_check(const KnotPoly1& delta);

// Every candidate polynomial of degree span exactly 2*genus, duplicate-free,
// in a fixed deterministic order.
std::vector<KnotPoly1> enumerate_candidates(std::int64_t genus);

struct StaircaseGenerator {
  std::int64_t alexander;
  std::int64_t maslov;
  bool operator==(const StaircaseGenerator& o) const {
    return alexander == o.alexander && maslov == o.maslov;
  }
};

// Knot Floer homology of an L-space knot from its Alexander polynomial: one
// rank-1 generator per nonzero coefficient. Throws NotACandidate.
std::vector<StaircaseGenerator> staircase(const KnotPoly1& delta);

struct SlopeGenusReport {
  bool slope_at_least_2g_minus_1 = false;  // r >= 2g - 1
  bool genus_at_most_half = false;         // g <= (1 + |r|)/2
};

SlopeGenusReport slope_genus_bounds(std::int64_t g, const Rational& r);

}  // namespace lsf::twistalex

#endif
