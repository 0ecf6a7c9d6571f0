#include "vmvt/rational.hpp"

#include <ostream>

#include "vmvt/errors.hpp"

namespace vmvt {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvalidParams("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw InvalidParams("division by zero rational");
  q_ /= o.q_;
  return *this;
}

BigInt Rational::floor() const {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return out;
}

std::string Rational::str() const { return q_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw InvalidParams("not a rational: '" + text + "'");
  }
}

BigInt ipow(const BigInt& base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

BigInt ipow(long base, unsigned long exp) { return ipow(BigInt(base), exp); }

}  // namespace vmvt
