#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace diraceig {

/// Exact rational number. Always stored in lowest terms with denominator > 0;
/// no operation rounds.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // implicit: integers embed in the rationals
  Rational(long num, long den) { assign(mpz_class(num), mpz_class(den)); }
  Rational(const mpz_class& num, const mpz_class& den) { assign(num, den); }

  /// Accepts "p" or "p/q"; throws std::invalid_argument on anything else.
  static Rational parse(std::string_view text);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  /// "p" when integral, "p/q" otherwise.
  std::string str() const;
  double approx() const { return v_.get_d(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.v_ = -a.v_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend Rational abs(const Rational& a) {
    Rational r;
    r.v_ = abs(a.v_);
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  void assign(const mpz_class& num, const mpz_class& den);
  mpq_class v_;
};

/// Truncated decimal expansion of sqrt(x), `digits` places after the point.
/// Exact up to the truncation: floor(sqrt(x) * 10^digits) formatted as a string.
std::string sqrt_decimal(const Rational& x, int digits);

}  // namespace diraceig
