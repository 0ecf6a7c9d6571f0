#pragma once

#include <map>
#include <string>
#include <vector>

#include "vmvt/rational.hpp"

namespace vmvt {

/// Sparse multivariate polynomial with integer coefficients in variables x1..xd.
class IntPoly {
 public:
  using Monomial = std::vector<int>;

  explicit IntPoly(int nvars = 1) : nvars_(nvars) {}
  static IntPoly constant(int nvars, const BigInt& c);
  static IntPoly variable(int nvars, int index);  // 0-based

  int nvars() const { return nvars_; }
  int degree() const;  // total degree; 0 for the zero polynomial
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, BigInt>& terms() const { return terms_; }
  /// Coefficient of x1^e (univariate view).
  BigInt coeff(int e) const;

  IntPoly derivative(int index) const;
  /// Value mod `modulus`, in [0, modulus).
  long eval_mod(const std::vector<long>& x, long modulus) const;
  std::string str() const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly pow(unsigned e) const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void add_term(const Monomial& mono, const BigInt& c);

  int nvars_;
  std::map<Monomial, BigInt> terms_;
};

/// Parses sums and products of integers and variables: "x1^2 - 7", "(x1+1)*x2 - 3*x1".
/// "x" is accepted as x1 when nvars = 1.
IntPoly parse_poly(const std::string& text, int nvars);

}  // namespace vmvt
