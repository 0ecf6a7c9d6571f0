#include "vmvt/polynomial.hpp"

#include <cctype>
#include <sstream>

#include "vmvt/errors.hpp"

namespace vmvt {

IntPoly IntPoly::constant(int nvars, const BigInt& c) {
  IntPoly p(nvars);
  p.add_term(Monomial(std::size_t(nvars), 0), c);
  return p;
}

IntPoly IntPoly::variable(int nvars, int index) {
  require(0 <= index && index < nvars, "polynomial variable out of range");
  IntPoly p(nvars);
  Monomial mono(std::size_t(nvars), 0);
  mono[std::size_t(index)] = 1;
  p.add_term(mono, 1);
  return p;
}

void IntPoly::add_term(const Monomial& mono, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, 0);
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

int IntPoly::degree() const {
  int best = 0;
  for (const auto& [mono, c] : terms_) {
    int d = 0;
    for (int e : mono) d += e;
    best = std::max(best, d);
  }
  return best;
}

BigInt IntPoly::coeff(int e) const {
  Monomial mono(std::size_t(nvars_), 0);
  if (nvars_ > 0) mono[0] = e;
  auto it = terms_.find(mono);
  return it == terms_.end() ? BigInt(0) : it->second;
}

IntPoly IntPoly::derivative(int index) const {
  require(0 <= index && index < nvars_, "polynomial variable out of range");
  IntPoly out(nvars_);
  for (const auto& [mono, c] : terms_) {
    const int e = mono[std::size_t(index)];
    if (e == 0) continue;
    Monomial m = mono;
    m[std::size_t(index)] = e - 1;
    out.add_term(m, c * e);
  }
  return out;
}

long IntPoly::eval_mod(const std::vector<long>& x, long modulus) const {
  require(long(x.size()) == nvars_, "polynomial evaluated at a point of wrong dimension");
  BigInt mod = modulus;
  BigInt acc = 0;
  BigInt term, base;
  for (const auto& [mono, c] : terms_) {
    term = c;
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i] == 0) continue;
      base = x[i];
      mpz_powm_ui(base.get_mpz_t(), base.get_mpz_t(), unsigned(mono[i]), mod.get_mpz_t());
      term *= base;
      term %= mod;
    }
    acc += term;
  }
  mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), mod.get_mpz_t());
  return acc.get_si();
}

std::string IntPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [mono, c] = *it;
    BigInt mag = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool constant = true;
    for (int e : mono) constant = constant && e == 0;
    if (constant || mag != 1) os << mag;
    bool need_star = !constant && mag != 1;
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i] == 0) continue;
      if (need_star) os << '*';
      os << 'x' << (i + 1);
      if (mono[i] > 1) os << '^' << mono[i];
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  require(nvars_ == o.nvars_, "polynomial variable count mismatch");
  for (const auto& [mono, c] : o.terms_) add_term(mono, c);
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  require(nvars_ == o.nvars_, "polynomial variable count mismatch");
  for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  require(a.nvars_ == b.nvars_, "polynomial variable count mismatch");
  IntPoly out(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      IntPoly::Monomial m = ma;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly result = constant(nvars_, 1);
  IntPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, int nvars) : s_(text), nvars_(nvars) {}

  IntPoly parse() {
    IntPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidParams("polynomial '" + s_ + "': " + why + " at position " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return s_.substr(start, pos_ - start);
  }

  IntPoly expr() {
    IntPoly acc = term();
    for (;;) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }
  IntPoly term() {
    IntPoly acc = power();
    while (eat('*')) acc = acc * power();
    return acc;
  }
  IntPoly power() {
    IntPoly base = unary();
    if (eat('^')) {
      const std::string e = digits();
      if (e.size() > 4) fail("exponent too large");
      return base.pow(unsigned(std::stoul(e)));
    }
    return base;
  }
  IntPoly unary() {
    if (eat('-')) return IntPoly::constant(nvars_, 0) - unary();
    if (eat('+')) return unary();
    return primary();
  }
  IntPoly primary() {
    skip();
    if (eat('(')) {
      IntPoly inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      return IntPoly::constant(nvars_, BigInt(digits()));
    }
    if (pos_ < s_.size() && s_[pos_] == 'x') {
      ++pos_;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        const std::string idx = digits();
        const long i = std::stol(idx);
        if (i < 1 || i > nvars_) fail("variable index out of range");
        return IntPoly::variable(nvars_, int(i - 1));
      }
      if (nvars_ != 1) fail("bare 'x' needs exactly one variable");
      return IntPoly::variable(nvars_, 0);
    }
    fail("expected a number, variable or '('");
  }

  std::string s_;
  int nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPoly parse_poly(const std::string& text, int nvars) {
  require(nvars >= 1, "polynomial needs at least one variable");
  return Parser(text, nvars).parse();
}

}  // namespace vmvt
