#include "vmvt/reference.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "vmvt/errors.hpp"

namespace vmvt::reference {

namespace {

/// Variables of one side: consecutive blocks with a shared domain, optionally with
/// pairwise distinct labels value mod `label_mod` inside the block.
struct Block {
  std::vector<long> domain;
  int size = 0;
  long label_mod = 0;  // 0: no distinctness
};

using Features = std::function<std::vector<BigInt>(long)>;

std::vector<std::vector<BigInt>> side_sums(const std::vector<Block>& blocks, std::size_t dim,
                                           const Features& features) {
  std::vector<std::vector<BigInt>> out;
  std::vector<long> chosen;
  std::function<void(std::size_t, int)> rec = [&](std::size_t bi, int filled) {
    if (bi == blocks.size()) {
      std::vector<BigInt> sum(dim, 0);
      for (long x : chosen) {
        auto f = features(x);
        for (std::size_t j = 0; j < dim; ++j) sum[j] += f[j];
      }
      out.push_back(std::move(sum));
      return;
    }
    const Block& blk = blocks[bi];
    if (filled == blk.size) {
      rec(bi + 1, 0);
      return;
    }
    for (long x : blk.domain) {
      if (blk.label_mod > 0) {
        bool clash = false;
        for (int i = 0; i < filled; ++i) {
          if (chosen[chosen.size() - std::size_t(filled) + std::size_t(i)] % blk.label_mod == x % blk.label_mod) clash = true;
        }
        if (clash) continue;
      }
      chosen.push_back(x);
      rec(bi, filled + 1);
      chosen.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

BigInt count_equal(const std::vector<Block>& left, const std::vector<Block>& right, std::size_t dim,
                   const Features& features, const Budget& budget) {
  double space = 1;
  for (const auto* side : {&left, &right}) {
    for (const auto& b : *side) space *= std::pow(double(b.domain.size()), b.size);
  }
  if (space > double(budget.max_loop)) throw BudgetExceeded("naive enumeration exceeds budget", space);
  auto L = side_sums(left, dim, features);
  auto R = side_sums(right, dim, features);
  BigInt count = 0;
  for (const auto& l : L) {
    for (const auto& r : R) {
      if (l == r) ++count;
    }
  }
  return count;
}

std::vector<long> range(long lo, long hi) {
  std::vector<long> out;
  for (long x = lo; x <= hi; ++x) out.push_back(x);
  return out;
}

Features power_features(int k) {
  return [k](long x) {
    std::vector<BigInt> f;
    BigInt v = 1;
    for (int j = 1; j <= k; ++j) {
      v *= x;
      f.push_back(v);
    }
    return f;
  };
}

Features single_power(int k) {
  return [k](long x) { return std::vector<BigInt>{ipow(BigInt(x), (unsigned long)k)}; };
}

long posmod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

BigInt naive_J(int s, int k, long X, const Budget& budget) {
  std::vector<Block> side{{range(1, X), s, 0}};
  return count_equal(side, side, std::size_t(k), power_features(k), budget);
}

BigInt naive_diagonal(int s, long X, const Budget& budget) {
  const double space = std::pow(double(X), 2.0 * s);
  if (space > double(budget.max_loop)) throw BudgetExceeded("naive enumeration exceeds budget", space);
  std::vector<std::vector<long>> tuples;
  std::vector<long> x(std::size_t(s), 1);
  for (;;) {
    tuples.push_back(x);
    std::size_t i = 0;
    while (i < x.size() && x[i] == X) x[i++] = 1;
    if (i == x.size()) break;
    ++x[i];
  }
  BigInt count = 0;
  for (const auto& a : tuples) {
    for (const auto& b : tuples) {
      if (std::is_permutation(a.begin(), a.end(), b.begin())) ++count;
    }
  }
  return count;
}

BigInt naive_weyl(int s, int k, long X, const Budget& budget) {
  std::vector<Block> side{{range(1, X), s, 0}};
  return count_equal(side, side, 1, single_power(k), budget);
}

BigInt naive_shifted(int s, int m, int k, long X, long q, long b, const Budget& budget) {
  std::vector<Block> side{{range(0, X / q), s, 0}};
  Features f = [=](long x) {
    std::vector<BigInt> out{ipow(BigInt(q * x + b), (unsigned long)k)};
    BigInt v = 1;
    for (int j = 1; j < m; ++j) {
      v *= x;
      out.push_back(v);
    }
    return out;
  };
  return count_equal(side, side, std::size_t(m), f, budget);
}

namespace {

std::vector<Block> mixed_side(const MixedMeanParams& p, MixedKind which) {
  const long pa = ipow(p.p, unsigned(p.a)).get_si();
  const long pb = ipow(p.p, unsigned(p.b)).get_si();
  Block outer{{}, p.r, p.a >= 1 ? pa * p.p : p.p};
  Block inner{{}, which == MixedKind::I ? p.s() : p.r, which == MixedKind::I ? 0 : pb * p.p};
  for (long x = 1; x <= p.X; ++x) {
    const bool ok = p.a >= 1 ? posmod(x - p.xi, pa) == 0 : posmod(x - p.eta, p.p) != 0;
    if (ok) outer.domain.push_back(x);
    if (posmod(x - p.eta, pb) == 0) inner.domain.push_back(x);
  }
  std::vector<Block> side{outer};
  const int copies = which == MixedKind::I ? 1 : p.t;
  for (int i = 0; i < copies; ++i) side.push_back(inner);
  return side;
}

}  // namespace

BigInt naive_mixed(const MixedMeanParams& p, MixedKind which, const Budget& budget) {
  validate(p, which);
  auto side = mixed_side(p, which);
  return count_equal(side, side, std::size_t(p.k), power_features(p.k), budget);
}

double search_space_J(int s, long X) { return std::pow(double(X), 2.0 * s); }

double search_space_shifted(int s, long X, long q) { return std::pow(double(X / q + 1), 2.0 * s); }

double search_space_mixed(const MixedMeanParams& p, MixedKind which) {
  double space = 1;
  for (const auto& b : mixed_side(p, which)) space *= std::pow(double(b.domain.size()), b.size);
  return space * space;
}

std::vector<Tuple> naive_enumerate_B(const CongruenceInstance& inst, const Budget& budget) {
  validate(inst);
  std::vector<long> mod{1};
  const long pb = ipow(inst.p, unsigned(inst.b)).get_si();
  for (int j = 1; j <= inst.k; ++j) mod.push_back(mod.back() * pb);
  const long top = mod.back();
  const double space = std::pow(double(top), inst.r);
  if (space > double(budget.max_loop)) throw BudgetExceeded("naive enumeration exceeds budget", space);

  const long pa = ipow(inst.p, unsigned(inst.a)).get_si();
  const long label_mod = inst.a >= 1 ? pa * inst.p : inst.p;
  std::vector<Tuple> out;
  Tuple z(std::size_t(inst.r), 1);
  for (;;) {
    bool ok = true;
    for (std::size_t i = 0; i < z.size() && ok; ++i) {
      ok = inst.a >= 1 ? posmod(z[i] - inst.xi, pa) == 0 : posmod(z[i] - inst.eta, inst.p) != 0;
      for (std::size_t l = 0; l < i && ok; ++l) ok = posmod(z[i], label_mod) != posmod(z[l], label_mod);
    }
    for (int j = 1; j <= inst.k && ok; ++j) {
      BigInt sum = 0;
      for (long v : z) sum += ipow(BigInt(v - inst.eta), (unsigned long)j);
      BigInt diff = sum - inst.m[std::size_t(j - 1)];
      ok = mpz_divisible_ui_p(diff.get_mpz_t(), (unsigned long)mod[std::size_t(j)]) != 0;
    }
    if (ok) out.push_back(z);
    std::size_t i = z.size();
    while (i > 0 && z[i - 1] == top) z[--i] = 1;
    if (i == 0) break;
    ++z[i - 1];
  }
  return out;
}

BigInt naive_R(int s, int k, long n) {
  std::vector<long> powers;
  for (long x = 1;; ++x) {
    BigInt v = ipow(BigInt(x), (unsigned long)k);
    if (v > n) break;
    powers.push_back(v.get_si());
  }
  BigInt count = 0;
  std::function<void(int, long)> rec = [&](int left, long rest) {
    if (left == 0) {
      if (rest == 0) ++count;
      return;
    }
    for (long v : powers) {
      if (v > rest) break;
      rec(left - 1, rest - v);
    }
  };
  rec(s, n);
  return count;
}

}  // namespace vmvt::reference
