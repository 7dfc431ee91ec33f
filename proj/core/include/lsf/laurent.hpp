#ifndef LSF_LAURENT_HPP
#define LSF_LAURENT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lsf/errors.hpp"
#include "lsf/intmath.hpp"

namespace lsf {

// One-variable integer Laurent polynomial, sparse, no stored zero
// coefficients. The empty term map is the zero polynomial. Values are
// immutable after construction in spirit: all operations return new values.
class KnotPoly1 {
 public:
  using Terms = std::map<std::int64_t, Int>;

  KnotPoly1() = default;
  static KnotPoly1 zero() { return KnotPoly1(); }
  static KnotPoly1 one() { return monomial(0, 1); }
  static KnotPoly1 monomial(std::int64_t e, Int c);
  static KnotPoly1 from_terms(const std::vector<std::pair<std::int64_t, Int>>& terms);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  Int coeff(std::int64_t e) const;
  std::int64_t min_exp() const;  // throws ZeroPolynomial
  std::int64_t max_exp() const;  // throws ZeroPolynomial

  // max exponent minus min exponent; empty optional encodes -infinity.
  std::optional<std::int64_t> breadth() const;

  KnotPoly1 operator-() const;
  KnotPoly1 operator+(const KnotPoly1& o) const;
  KnotPoly1 operator-(const KnotPoly1& o) const;
  KnotPoly1 operator*(const KnotPoly1& o) const;
  bool operator==(const KnotPoly1& o) const { return terms_ == o.terms_; }
  bool operator!=(const KnotPoly1& o) const { return terms_ != o.terms_; }

  KnotPoly1 shifted(std::int64_t e) const;  // multiply by t^e
  KnotPoly1 reversed() const;               // t -> t^{-1}
  Int eval_one() const;                     // value at t = 1

  // Canonical representative of the unit-equivalence class: minimum exponent
  // zero and lowest coefficient positive. Throws ZeroPolynomial.
  KnotPoly1 normalized_unit() const;
  bool unit_equivalent(const KnotPoly1& o) const;

  std::string str() const;  // human-readable, for diagnostics

 private:
  void add_term(std::int64_t e, const Int& c);
  Terms terms_;
};

// (t^w - 1)/(t - 1) = 1 + t + ... + t^{w-1} for w >= 0.
KnotPoly1 cyclotomic_quotient(std::int64_t w);

// Exact quotient num/den; throws InexactDivision if the remainder is nonzero,
// ZeroPolynomial if den == 0.
KnotPoly1 divide_exact(const KnotPoly1& num, const KnotPoly1& den);

// Two-variable integer Laurent polynomial with the same storage discipline.
class LinkPoly2 {
 public:
  using Key = std::pair<std::int64_t, std::int64_t>;  // (xExp, yExp)
  using Terms = std::map<Key, Int>;

  LinkPoly2() = default;
  static LinkPoly2 zero() { return LinkPoly2(); }
  static LinkPoly2 one() { return monomial(0, 0, 1); }
  static LinkPoly2 monomial(std::int64_t xe, std::int64_t ye, Int c);
  static LinkPoly2 from_terms(const std::vector<std::tuple<std::int64_t, std::int64_t, Int>>& terms);
  static LinkPoly2 from_knot_poly(const KnotPoly1& p);  // x-only embedding

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  Int coeff(std::int64_t xe, std::int64_t ye) const;

  std::optional<std::int64_t> breadth_x() const;
  std::optional<std::int64_t> breadth_y() const;
  std::int64_t min_exp_x() const;
  std::int64_t max_exp_x() const;
  std::int64_t min_exp_y() const;
  std::int64_t max_exp_y() const;

  LinkPoly2 operator-() const;
  LinkPoly2 operator+(const LinkPoly2& o) const;
  LinkPoly2 operator-(const LinkPoly2& o) const;
  LinkPoly2 operator*(const LinkPoly2& o) const;
  bool operator==(const LinkPoly2& o) const { return terms_ == o.terms_; }
  bool operator!=(const LinkPoly2& o) const { return terms_ != o.terms_; }

  LinkPoly2 shifted(std::int64_t xe, std::int64_t ye) const;
  LinkPoly2 reversed() const;  // x -> x^{-1}, y -> y^{-1}

  // Monomial substitution x -> x^a y^b, y -> x^c y^d; like terms combine.
  LinkPoly2 substitute_monomial(std::pair<std::int64_t, std::int64_t> x_image,
                                std::pair<std::int64_t, std::int64_t> y_image) const;

  // x -> t^xPow, y -> t^yPow.
  KnotPoly1 specialize(std::int64_t x_pow, std::int64_t y_pow) const;

  Int eval_one_one() const;  // value at (1, 1)

  // Coefficient of y^ye as a polynomial in x (used for the breadth growth
  // constant of a twist family).
  KnotPoly1 y_slice(std::int64_t ye) const;

  KnotPoly1 as_knot_poly() const;  // requires breadth_y == 0 (after y-shift)

  LinkPoly2 normalized_unit() const;  // throws ZeroPolynomial
  bool unit_equivalent(const LinkPoly2& o) const;

  std::string str() const;

 private:
  void add_term(std::int64_t xe, std::int64_t ye, const Int& c);
  Terms terms_;
};

}  // namespace lsf

#endif
