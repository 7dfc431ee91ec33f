#ifndef LSF_INTMATH_HPP
#define LSF_INTMATH_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "lsf/errors.hpp"

namespace lsf {

// Arbitrary-precision signed integer. Exponents stay machine ints; every
// coefficient, matrix entry and rational component is exact.
using Int = boost::multiprecision::cpp_int;

inline Int gcd_int(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

inline int sign_of(const Int& a) { return a < 0 ? -1 : (a > 0 ? 1 : 0); }

// Exact rational with positive denominator, always reduced.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Int n) : num_(std::move(n)), den_(1) {}  // NOLINT: implicit by design
  Rational(long long n) : num_(n), den_(1) {}       // NOLINT
  Rational(long n) : num_(n), den_(1) {}            // NOLINT
  Rational(int n) : num_(n), den_(1) {}             // NOLINT
  Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw Error("rational with zero denominator");
    reduce();
  }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return sign_of(num_); }

  Int floor() const {
    Int q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }
  Int ceil() const {
    Int q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
  }
  Rational frac() const { return *this - Rational(floor()); }

  Rational operator-() const { return Rational(-num_, den_, nocheck{}); }
  Rational operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Rational operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  Rational operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw Error("rational division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
  }
  Rational reciprocal() const {
    if (num_ == 0) throw Error("reciprocal of zero");
    return Rational(den_, num_);
  }
  Rational abs() const { return num_ < 0 ? -*this : *this; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }
  bool operator<=(const Rational& o) const { return num_ * o.den_ <= o.num_ * den_; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

 private:
  struct nocheck {};
  Rational(Int n, Int d, nocheck) : num_(std::move(n)), den_(std::move(d)) {}
  void reduce() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = gcd_int(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }
  Int num_, den_;
};

}  // namespace lsf

#endif
