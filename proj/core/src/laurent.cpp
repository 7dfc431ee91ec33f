#include "lsf/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace lsf {

// ---------------------------------------------------------------- KnotPoly1

KnotPoly1 KnotPoly1::monomial(std::int64_t e, Int c) {
  KnotPoly1 p;
  if (c != 0) p.terms_[e] = std::move(c);
  return p;
}

KnotPoly1 KnotPoly1::from_terms(const std::vector<std::pair<std::int64_t, Int>>& terms) {
  KnotPoly1 p;
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

void KnotPoly1::add_term(std::int64_t e, const Int& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Int KnotPoly1::coeff(std::int64_t e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

std::int64_t KnotPoly1::min_exp() const {
  if (terms_.empty()) throw ZeroPolynomial();
  return terms_.begin()->first;
}

std::int64_t KnotPoly1::max_exp() const {
  if (terms_.empty()) throw ZeroPolynomial();
  return terms_.rbegin()->first;
}

std::optional<std::int64_t> KnotPoly1::breadth() const {
  if (terms_.empty()) return std::nullopt;
  return max_exp() - min_exp();
}

KnotPoly1 KnotPoly1::operator-() const {
  KnotPoly1 p;
  for (const auto& [e, c] : terms_) p.terms_[e] = -c;
  return p;
}

KnotPoly1 KnotPoly1::operator+(const KnotPoly1& o) const {
  KnotPoly1 p = *this;
  for (const auto& [e, c] : o.terms_) p.add_term(e, c);
  return p;
}

KnotPoly1 KnotPoly1::operator-(const KnotPoly1& o) const {
  KnotPoly1 p = *this;
  for (const auto& [e, c] : o.terms_) p.add_term(e, -c);
  return p;
}

KnotPoly1 KnotPoly1::operator*(const KnotPoly1& o) const {
  KnotPoly1 p;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) p.add_term(e1 + e2, c1 * c2);
  return p;
}

KnotPoly1 KnotPoly1::shifted(std::int64_t e) const {
  KnotPoly1 p;
  for (const auto& [e1, c] : terms_) p.terms_[e1 + e] = c;
  return p;
}

KnotPoly1 KnotPoly1::reversed() const {
  KnotPoly1 p;
  for (const auto& [e, c] : terms_) p.terms_[-e] = c;
  return p;
}

Int KnotPoly1::eval_one() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

KnotPoly1 KnotPoly1::normalized_unit() const {
  if (terms_.empty()) throw ZeroPolynomial();
  KnotPoly1 p = shifted(-min_exp());
  if (p.terms_.begin()->second < 0) p = -p;
  return p;
}

bool KnotPoly1::unit_equivalent(const KnotPoly1& o) const {
  if (is_zero() || o.is_zero()) return is_zero() == o.is_zero();
  return normalized_unit() == o.normalized_unit();
}

std::string KnotPoly1::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Int& c = it->second;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Int a = c < 0 ? Int(-c) : c;
    if (a != 1 || it->first == 0) os << a.str();
    if (it->first != 0) {
      if (a != 1) os << "*";
      os << "t";
      if (it->first != 1) os << "^" << it->first;
    }
  }
  return os.str();
}

KnotPoly1 cyclotomic_quotient(std::int64_t w) {
  if (w < 0) throw Error("cyclotomic_quotient needs w >= 0");
  KnotPoly1 p;
  std::vector<std::pair<std::int64_t, Int>> terms;
  for (std::int64_t i = 0; i < w; ++i) terms.emplace_back(i, 1);
  return KnotPoly1::from_terms(terms);
}

KnotPoly1 divide_exact(const KnotPoly1& num, const KnotPoly1& den) {
  if (den.is_zero()) throw ZeroPolynomial();
  if (num.is_zero()) return KnotPoly1::zero();
  // Shift both to ordinary polynomials, divide by the leading term, and
  // reapply the exponent offset at the end.
  const std::int64_t shift = num.min_exp() - den.min_exp();
  KnotPoly1 r = num.shifted(-num.min_exp());
  KnotPoly1 d = den.shifted(-den.min_exp());
  const std::int64_t ddeg = d.max_exp();
  const Int dlead = d.coeff(ddeg);
  KnotPoly1 q;
  while (!r.is_zero()) {
    const std::int64_t rdeg = r.max_exp();
    if (rdeg < ddeg) throw InexactDivision();
    const Int rlead = r.coeff(rdeg);
    if (rlead % dlead != 0) throw InexactDivision();
    const KnotPoly1 term = KnotPoly1::monomial(rdeg - ddeg, rlead / dlead);
    q = q + term;
    r = r - term * d;
  }
  return q.shifted(shift);
}

// ---------------------------------------------------------------- LinkPoly2

LinkPoly2 LinkPoly2::monomial(std::int64_t xe, std::int64_t ye, Int c) {
  LinkPoly2 p;
  if (c != 0) p.terms_[{xe, ye}] = std::move(c);
  return p;
}

LinkPoly2 LinkPoly2::from_terms(const std::vector<std::tuple<std::int64_t, std::int64_t, Int>>& terms) {
  LinkPoly2 p;
  for (const auto& [xe, ye, c] : terms) p.add_term(xe, ye, c);
  return p;
}

LinkPoly2 LinkPoly2::from_knot_poly(const KnotPoly1& p) {
  LinkPoly2 q;
  for (const auto& [e, c] : p.terms()) q.terms_[{e, 0}] = c;
  return q;
}

void LinkPoly2::add_term(std::int64_t xe, std::int64_t ye, const Int& c) {
  if (c == 0) return;
  Key k{xe, ye};
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Int LinkPoly2::coeff(std::int64_t xe, std::int64_t ye) const {
  auto it = terms_.find({xe, ye});
  return it == terms_.end() ? Int(0) : it->second;
}

std::int64_t LinkPoly2::min_exp_x() const {
  if (terms_.empty()) throw ZeroPolynomial();
  std::int64_t m = terms_.begin()->first.first;
  for (const auto& [k, c] : terms_) m = std::min(m, k.first);
  return m;
}

std::int64_t LinkPoly2::max_exp_x() const {
  if (terms_.empty()) throw ZeroPolynomial();
  std::int64_t m = terms_.begin()->first.first;
  for (const auto& [k, c] : terms_) m = std::max(m, k.first);
  return m;
}

std::int64_t LinkPoly2::min_exp_y() const {
  if (terms_.empty()) throw ZeroPolynomial();
  std::int64_t m = terms_.begin()->first.second;
  for (const auto& [k, c] : terms_) m = std::min(m, k.second);
  return m;
}

std::int64_t LinkPoly2::max_exp_y() const {
  if (terms_.empty()) throw ZeroPolynomial();
  std::int64_t m = terms_.begin()->first.second;
  for (const auto& [k, c] : terms_) m = std::max(m, k.second);
  return m;
}

std::optional<std::int64_t> LinkPoly2::breadth_x() const {
  if (terms_.empty()) return std::nullopt;
  return max_exp_x() - min_exp_x();
}

std::optional<std::int64_t> LinkPoly2::breadth_y() const {
  if (terms_.empty()) return std::nullopt;
  return max_exp_y() - min_exp_y();
}

LinkPoly2 LinkPoly2::operator-() const {
  LinkPoly2 p;
  for (const auto& [k, c] : terms_) p.terms_[k] = -c;
  return p;
}

LinkPoly2 LinkPoly2::operator+(const LinkPoly2& o) const {
  LinkPoly2 p = *this;
  for (const auto& [k, c] : o.terms_) p.add_term(k.first, k.second, c);
  return p;
}

LinkPoly2 LinkPoly2::operator-(const LinkPoly2& o) const {
  LinkPoly2 p = *this;
  for (const auto& [k, c] : o.terms_) p.add_term(k.first, k.second, -c);
  return p;
}

LinkPoly2 LinkPoly2::operator*(const LinkPoly2& o) const {
  LinkPoly2 p;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_)
      p.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
  return p;
}

LinkPoly2 LinkPoly2::shifted(std::int64_t xe, std::int64_t ye) const {
  LinkPoly2 p;
  for (const auto& [k, c] : terms_) p.terms_[{k.first + xe, k.second + ye}] = c;
  return p;
}

LinkPoly2 LinkPoly2::reversed() const {
  LinkPoly2 p;
  for (const auto& [k, c] : terms_) p.terms_[{-k.first, -k.second}] = c;
  return p;
}

LinkPoly2 LinkPoly2::substitute_monomial(std::pair<std::int64_t, std::int64_t> x_image,
                                         std::pair<std::int64_t, std::int64_t> y_image) const {
  LinkPoly2 p;
  for (const auto& [k, c] : terms_) {
    const std::int64_t i = k.first, j = k.second;
    p.add_term(i * x_image.first + j * y_image.first,
               i * x_image.second + j * y_image.second, c);
  }
  return p;
}

KnotPoly1 LinkPoly2::specialize(std::int64_t x_pow, std::int64_t y_pow) const {
  std::vector<std::pair<std::int64_t, Int>> terms;
  terms.reserve(terms_.size());
  for (const auto& [k, c] : terms_)
    terms.emplace_back(k.first * x_pow + k.second * y_pow, c);
  return KnotPoly1::from_terms(terms);
}

Int LinkPoly2::eval_one_one() const {
  Int s = 0;
  for (const auto& [k, c] : terms_) s += c;
  return s;
}

KnotPoly1 LinkPoly2::y_slice(std::int64_t ye) const {
  std::vector<std::pair<std::int64_t, Int>> terms;
  for (const auto& [k, c] : terms_)
    if (k.second == ye) terms.emplace_back(k.first, c);
  return KnotPoly1::from_terms(terms);
}

KnotPoly1 LinkPoly2::as_knot_poly() const {
  if (is_zero()) return KnotPoly1::zero();
  if (breadth_y() != std::optional<std::int64_t>(0))
    throw Error("as_knot_poly requires y-breadth zero");
  return y_slice(min_exp_y());
}

LinkPoly2 LinkPoly2::normalized_unit() const {
  if (terms_.empty()) throw ZeroPolynomial();
  LinkPoly2 p = shifted(-min_exp_x(), -min_exp_y());
  if (p.terms_.begin()->second < 0) p = -p;
  return p;
}

bool LinkPoly2::unit_equivalent(const LinkPoly2& o) const {
  if (is_zero() || o.is_zero()) return is_zero() == o.is_zero();
  return normalized_unit() == o.normalized_unit();
}

std::string LinkPoly2::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Int a = c < 0 ? Int(-c) : c;
    const bool has_var = k.first != 0 || k.second != 0;
    if (a != 1 || !has_var) os << a.str();
    if (k.first != 0) {
      os << "x";
      if (k.first != 1) os << "^" << k.first;
    }
    if (k.second != 0) {
      os << "y";
      if (k.second != 1) os << "^" << k.second;
    }
  }
  return os.str();
}

}  // namespace lsf
