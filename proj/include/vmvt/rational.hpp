#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace vmvt {

using BigInt = mpz_class;

/// Exact signed rational, always held in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long v) : q_(v) {}  // NOLINT: implicit from integers is intended
  Rational(int v) : q_(v) {}   // NOLINT
  explicit Rational(const BigInt& v) : q_(v) {}
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// Largest integer not exceeding the value.
  BigInt floor() const;
  /// Lossy; for display and diagnostics only.
  double to_double() const { return q_.get_d(); }
  /// "n" for integers, "n/d" otherwise.
  std::string str() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.q_ = -a.q_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return q_; }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Parses "n", "-n" or "n/d".
Rational parse_rational(const std::string& text);

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

BigInt ipow(const BigInt& base, unsigned long exp);
BigInt ipow(long base, unsigned long exp);

}  // namespace vmvt
