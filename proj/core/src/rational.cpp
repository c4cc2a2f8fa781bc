#include "diraceig/rational.hpp"

#include <ostream>

namespace diraceig {

void Rational::assign(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
      return Rational(mpz_class(std::string(text)), mpz_class(1));
    return Rational(mpz_class(std::string(text.substr(0, slash))),
                    mpz_class(std::string(text.substr(slash + 1))));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational: cannot parse \"" + std::string(text) + "\"");
  }
}

std::string Rational::str() const {
  std::string s = v_.get_num().get_str();
  if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::string sqrt_decimal(const Rational& x, int digits) {
  if (x.sign() < 0) throw std::domain_error("sqrt_decimal: negative argument");
  if (digits < 0) throw std::invalid_argument("sqrt_decimal: negative digit count");
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  // floor(sqrt(p/q) 10^d) = isqrt(floor(p 10^(2d) / q)), sqrt being monotone
  mpz_class scaled = x.num() * pow10 * pow10 / x.den();
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  std::string s = root.get_str();
  if (static_cast<int>(s.size()) <= digits)
    s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return s;
}

}  // namespace diraceig
