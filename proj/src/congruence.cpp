#include "vmvt/congruence.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <omp.h>

#include "vmvt/errors.hpp"
#include "vmvt/exponents.hpp"
#include "vmvt/multiplicity.hpp"
#include "vmvt/mvt_count.hpp"
#include "vmvt/params.hpp"

namespace vmvt {

namespace {

constexpr long kMaxModulus = 1L << 40;

long checked_pow(long base, int exp) {
  long out = 1;
  for (int i = 0; i < exp; ++i) {
    if (out > kMaxModulus / base) throw BudgetExceeded("modulus p^e too large", std::pow(double(base), exp));
    out *= base;
  }
  return out;
}

long mulmod(long a, long b, long mod) { return long((__int128)a * b % mod); }

long posmod(long a, long mod) {
  long r = a % mod;
  return r < 0 ? r + mod : r;
}

long powmod(long base, int exp, long mod) {
  long result = 1 % mod;
  base = posmod(base, mod);
  for (int i = 0; i < exp; ++i) result = mulmod(result, base, mod);
  return result;
}

/// Moduli p^{jb} for j = 0..k.
std::vector<long> level_moduli(long p, int b, int k) {
  std::vector<long> out{1};
  const long pb = checked_pow(p, b);
  for (int j = 1; j <= k; ++j) {
    if (out.back() > kMaxModulus / pb) throw BudgetExceeded("modulus p^{kb} too large", std::pow(double(p), double(k) * b));
    out.push_back(out.back() * pb);
  }
  return out;
}

/// Single-coordinate side condition and the residue label that must be distinct.
struct SideCondition {
  long p;
  int a;
  long xi;
  long eta;
  long pa;
  long label_mod;

  SideCondition(long p_, int a_, long xi_, long eta_)
      : p(p_), a(a_), xi(xi_), eta(eta_), pa(checked_pow(p_, a_)), label_mod(checked_pow(p_, a_ + 1)) {}

  bool admits(long z) const {
    if (a >= 1) return posmod(z - xi, pa) == 0;
    return posmod(z - eta, p) != 0;
  }
  long label(long z) const { return posmod(z, a >= 1 ? label_mod : p); }
};

/// Ordered r-tuples from `values` with pairwise distinct labels.
template <class Visit>
void for_each_distinct_tuple(const std::vector<long>& values, const std::vector<long>& labels, int r,
                             Visit&& visit) {
  std::vector<std::size_t> pick;
  std::vector<long> used;
  std::function<void()> rec = [&]() {
    if (int(pick.size()) == r) {
      visit(pick);
      return;
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (std::find(used.begin(), used.end(), labels[i]) != used.end()) continue;
      pick.push_back(i);
      used.push_back(labels[i]);
      rec();
      used.pop_back();
      pick.pop_back();
    }
  };
  rec();
}

}  // namespace

void validate(const CongruenceInstance& inst) {
  VinogradovParams{inst.k, inst.r, inst.t}.validate();
  require(is_prime(inst.p), "congruence: p must be prime");
  require(inst.p > inst.k, "congruence: p > k required");
  require(0 <= inst.a && inst.a < inst.b, "congruence: 0 <= a < b required");
  auto mod = level_moduli(inst.p, inst.b, inst.k);
  require(1 <= inst.eta && inst.eta <= mod[1], "congruence: 1 <= eta <= p^b required");
  require(int(inst.m.size()) == inst.k, "congruence: m must have k entries");
  if (inst.a >= 1) {
    const long pa = checked_pow(inst.p, inst.a);
    require(1 <= inst.xi && inst.xi <= pa, "congruence: 1 <= xi <= p^a required");
    require(posmod(inst.eta - inst.xi, inst.p) != 0, "congruence: eta must not be congruent to xi mod p");
  }
}

std::vector<Tuple> enumerate_B(const CongruenceInstance& inst, const Budget& budget) {
  validate(inst);
  const auto mod = level_moduli(inst.p, inst.b, inst.k);
  const long pb = mod[1];
  const SideCondition side(inst.p, inst.a, inst.xi, inst.eta);
  std::vector<long> target(std::size_t(inst.k) + 1);
  for (int j = 1; j <= inst.k; ++j) target[std::size_t(j)] = posmod(inst.m[std::size_t(j - 1)], mod[std::size_t(j)]);

  // level 1: residues mod p^b
  std::vector<long> values, labels;
  for (long c = 0; c < pb; ++c) {
    if (!side.admits(c)) continue;
    values.push_back(c);
    labels.push_back(side.label(c));
  }
  const double level_one = std::pow(double(values.size()), inst.r);
  if (level_one > double(budget.max_loop)) throw BudgetExceeded("enumerate_B: residue tuples exceed budget", level_one);

  std::vector<Tuple> current;
  for_each_distinct_tuple(values, labels, inst.r, [&](const std::vector<std::size_t>& pick) {
    long sum = 0;
    for (auto i : pick) sum = posmod(sum + values[i] - inst.eta, mod[1]);
    if (sum != target[1]) return;
    Tuple z;
    for (auto i : pick) z.push_back(values[i]);
    current.push_back(std::move(z));
  });

  // level j: append one base-p^b digit to every coordinate and impose congruence j
  for (int j = 2; j <= inst.k; ++j) {
    const double work = double(current.size()) * std::pow(double(pb), inst.r);
    if (work > double(budget.max_loop)) throw BudgetExceeded("enumerate_B: lifting exceeds budget", work);
    const long step = mod[std::size_t(j - 1)];
    const long modj = mod[std::size_t(j)];
    std::vector<Tuple> next;
    Tuple z(std::size_t(inst.r));
    for (const auto& base : current) {
      std::function<void(int, long)> rec = [&](int i, long sum) {
        if (i == inst.r) {
          if (sum == target[std::size_t(j)]) next.push_back(z);
          return;
        }
        for (long u = 0; u < pb; ++u) {
          z[std::size_t(i)] = base[std::size_t(i)] + u * step;
          rec(i + 1, posmod(sum + powmod(z[std::size_t(i)] - inst.eta, j, modj), modj));
        }
      };
      rec(0, 0);
    }
    current = std::move(next);
  }

  const long top = mod[std::size_t(inst.k)];
  for (auto& z : current) {
    for (auto& v : z) {
      if (v == 0) v = top;
    }
  }
  std::sort(current.begin(), current.end());
  return current;
}

BigInt class_bound(int k, int r, int t, long p, int a, int b) {
  const MuNu mn = mu_nu(VinogradovParams{k, r, t});
  BigInt fact = 1;
  for (int i = 2; i <= k; ++i) fact *= i;
  const long e = mn.mu * b + mn.nu * a;
  require(e >= 0, "class_bound: negative exponent");
  return fact * ipow(p, (unsigned long)e);
}

bool bound_hypotheses_hold(int k, int r, int t, int a, int b) {
  return VinogradovParams{k, r, t}.admissible() && 0 <= a && a < b && b >= (k - t - 1) * a;
}

EquivalenceClassCensus count_classes(const CongruenceInstance& inst, bool keep_witnesses,
                                     const Budget& budget) {
  auto sols = enumerate_B(inst, budget);
  const long class_mod = checked_pow(inst.p, inst.t * inst.b);
  EquivalenceClassCensus out;
  out.instance = inst;
  out.solution_count = sols.size();
  out.bound = class_bound(inst.k, inst.r, inst.t, inst.p, inst.a, inst.b);
  out.hypotheses_hold = bound_hypotheses_hold(inst.k, inst.r, inst.t, inst.a, inst.b);
  kernel::Distribution<std::int64_t> index;
  for (const auto& z : sols) {
    kernel::Key<std::int64_t> key;
    for (long v : z) key.push_back(posmod(v, class_mod));
    auto [it, inserted] = index.try_emplace(key, out.class_sizes.size());
    if (inserted) {
      out.class_sizes.push_back(0);
      if (keep_witnesses) out.witnesses.push_back(z);
    }
    ++out.class_sizes[it->second];
  }
  out.class_count = out.class_sizes.size();
  return out;
}

namespace {

struct PairOutcome {
  std::size_t max = 0;
  std::vector<long> m;  // representatives in 1..p^{jb}
};

/// Lexicographic compare of residue vectors after mapping residue 0 to the modulus.
std::vector<long> representatives(const std::vector<std::int64_t>& residues, const std::vector<long>& mod) {
  std::vector<long> out(residues.size());
  for (std::size_t j = 0; j < residues.size(); ++j) out[j] = residues[j] == 0 ? mod[j + 1] : residues[j];
  return out;
}

PairOutcome sweep_pair(int k, int r, int t, long p, int a, int b, long xi, long eta) {
  const auto mod = level_moduli(p, b, k);
  const long class_mod = mod[std::size_t(t)];
  const long lift_count = mod[std::size_t(k)] / class_mod;
  const SideCondition side(p, a, xi, eta);

  std::vector<long> values, labels;
  for (long c = 0; c < class_mod; ++c) {
    if (!side.admits(c)) continue;
    values.push_back(c);
    labels.push_back(side.label(c));
  }
  const std::size_t nsuf = std::size_t(k - t);
  // prefix[c][j-1] = (c - eta)^j mod p^{jb} for j <= t; suffix[c][u][j-t-1] for j > t
  std::vector<std::vector<long>> prefix(values.size(), std::vector<long>(std::size_t(t)));
  std::vector<std::vector<long>> suffix(values.size(), std::vector<long>(std::size_t(lift_count) * nsuf));
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (int j = 1; j <= t; ++j) prefix[i][std::size_t(j - 1)] = powmod(values[i] - eta, j, mod[std::size_t(j)]);
    for (long u = 0; u < lift_count; ++u) {
      const long z = values[i] + u * class_mod;
      for (int j = t + 1; j <= k; ++j) {
        suffix[i][std::size_t(u) * nsuf + std::size_t(j - t - 1)] = powmod(z - eta, j, mod[std::size_t(j)]);
      }
    }
  }

  kernel::Distribution<std::int64_t> classes_per_m;
  std::vector<kernel::Key<std::int64_t>> seen;
  kernel::Key<std::int64_t> acc(nsuf);
  for_each_distinct_tuple(values, labels, r, [&](const std::vector<std::size_t>& pick) {
    kernel::Key<std::int64_t> pre(std::size_t(t), 0);
    for (auto i : pick) {
      for (int j = 0; j < t; ++j) pre[std::size_t(j)] = posmod(pre[std::size_t(j)] + prefix[i][std::size_t(j)], mod[std::size_t(j + 1)]);
    }
    seen.clear();
    std::function<void(std::size_t)> rec = [&](std::size_t ci) {
      if (ci == pick.size()) {
        seen.push_back(acc);
        return;
      }
      const auto& row = suffix[pick[ci]];
      for (long u = 0; u < lift_count; ++u) {
        for (std::size_t j = 0; j < nsuf; ++j) acc[j] += row[std::size_t(u) * nsuf + j];
        rec(ci + 1);
        for (std::size_t j = 0; j < nsuf; ++j) acc[j] -= row[std::size_t(u) * nsuf + j];
      }
    };
    std::fill(acc.begin(), acc.end(), 0);
    rec(0);
    for (auto& s : seen) {
      for (std::size_t j = 0; j < nsuf; ++j) s[j] = posmod(s[j], mod[std::size_t(t) + j + 1]);
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    for (const auto& s : seen) {
      kernel::Key<std::int64_t> full = pre;
      full.insert(full.end(), s.begin(), s.end());
      ++classes_per_m[full];
    }
  });

  PairOutcome out;
  out.m.assign(std::size_t(k), 1);
  bool have = false;
  for (const auto& [key, count] : classes_per_m) {
    auto reps = representatives(key, mod);
    if (count > out.max || (count == out.max && have && reps < out.m)) {
      out.max = count;
      out.m = reps;
      have = true;
    }
  }
  return out;
}

}  // namespace

MaxClassCensus max_B(int k, int r, int t, long p, int a, int b, const Budget& budget, Exec exec) {
  VinogradovParams{k, r, t}.validate();
  require(is_prime(p) && p > k, "max_B: prime p > k required");
  require(0 <= a && a < b, "max_B: 0 <= a < b required");
  const auto mod = level_moduli(p, b, k);
  const long pa = checked_pow(p, a);

  std::vector<std::pair<long, long>> pairs;
  if (a >= 1) {
    for (long xi = 1; xi <= pa; ++xi) {
      for (long eta = 1; eta <= mod[1]; ++eta) {
        if (posmod(eta - xi, p) != 0) pairs.emplace_back(xi, eta);
      }
    }
  } else {
    for (long eta = 1; eta <= mod[1]; ++eta) pairs.emplace_back(0, eta);
  }
  const double per_coord = double(mod[std::size_t(k)]) / double(a >= 1 ? pa : 1);
  const double work = double(pairs.size()) * std::pow(per_coord, r);
  if (work > double(budget.max_loop) * 10) throw BudgetExceeded("max_B: sweep exceeds budget", work);

  std::vector<PairOutcome> results(pairs.size());
  const long n = long(pairs.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) {
      results[std::size_t(i)] = sweep_pair(k, r, t, p, a, b, pairs[std::size_t(i)].first, pairs[std::size_t(i)].second);
    }
  } else {
    for (long i = 0; i < n; ++i) {
      results[std::size_t(i)] = sweep_pair(k, r, t, p, a, b, pairs[std::size_t(i)].first, pairs[std::size_t(i)].second);
    }
  }

  MaxClassCensus out;
  out.k = k;
  out.r = r;
  out.t = t;
  out.p = p;
  out.a = a;
  out.b = b;
  out.bound = class_bound(k, r, t, p, a, b);
  out.hypotheses_hold = bound_hypotheses_hold(k, r, t, a, b);
  out.strongly_diagonal = (r + t == k);
  out.instances_swept = pairs.size();
  bool have = false;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (!have || results[i].max > out.observed_max) {
      out.observed_max = results[i].max;
      out.witness_xi = pairs[i].first;
      out.witness_eta = pairs[i].second;
      out.witness_m = results[i].m;
      have = true;
    }
  }
  out.bound_respected = BigInt((unsigned long)out.observed_max) <= out.bound;
  if (out.strongly_diagonal) {
    out.note = "r + t = k: mu = nu = 0, no lifting happens and only diagonal-type classes are captured";
  } else if (!out.hypotheses_hold) {
    out.note = "b < (k - t - 1) a: bound reported but not asserted";
  }
  return out;
}

namespace {

long inverse_mod(long a, long p) { return powmod(a, int(p - 2), p); }

long det_mod_prime(std::vector<std::vector<long>> m, long p) {
  const std::size_t n = m.size();
  long det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = posmod(-det, p);
    }
    det = mulmod(det, m[col][col], p);
    const long inv = inverse_mod(m[col][col], p);
    for (std::size_t row = col + 1; row < n; ++row) {
      const long f = mulmod(m[row][col], inv, p);
      if (f == 0) continue;
      for (std::size_t c = col; c < n; ++c) m[row][c] = posmod(m[row][c] - mulmod(f, m[col][c], p), p);
    }
  }
  return det;
}

BigInt count_nonsingular(const std::vector<IntPoly>& system, const std::vector<std::vector<IntPoly>>& jac,
                         long prime, long modulus) {
  const std::size_t d = system.size();
  std::vector<long> x(d, 1);
  BigInt count = 0;
  std::vector<std::vector<long>> jm(d, std::vector<long>(d));
  for (;;) {
    bool zero = true;
    for (const auto& f : system) {
      if (f.eval_mod(x, modulus) != 0) {
        zero = false;
        break;
      }
    }
    if (zero) {
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) jm[i][j] = jac[j][i].eval_mod(x, prime);
      }
      if (det_mod_prime(jm, prime) != 0) ++count;
    }
    std::size_t i = 0;
    while (i < d && x[i] == modulus) x[i++] = 1;
    if (i == d) break;
    ++x[i];
  }
  return count;
}

}  // namespace

HenselResult hensel_count(const std::vector<IntPoly>& system, long prime, int level, const Budget& budget) {
  require(!system.empty(), "hensel: empty system");
  const int d = int(system.size());
  for (const auto& f : system) require(f.nvars() == d, "hensel: need d polynomials in d variables");
  require(is_prime(prime), "hensel: modulus must be prime");
  require(level >= 1, "hensel: level >= 1 required");
  const long modulus = checked_pow(prime, level);
  const double work = std::pow(double(modulus), d);
  if (work > double(budget.max_loop)) throw BudgetExceeded("hensel: scan exceeds budget", work);

  std::vector<std::vector<IntPoly>> jac(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) jac[std::size_t(j)].push_back(system[std::size_t(j)].derivative(i));
  }
  HenselResult out;
  out.count = count_nonsingular(system, jac, prime, modulus);
  out.count_mod_prime = count_nonsingular(system, jac, prime, prime);
  out.degree_bound = 1;
  for (const auto& f : system) out.degree_bound *= f.degree();
  out.bound_respected = out.count <= out.degree_bound;
  return out;
}

PolyIdentity solve_elimination_identity(int alpha, int beta) {
  require(alpha >= 1 && beta >= 1, "elimination identity: alpha, beta >= 1 required");
  auto binom = [](long n, long r) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), (unsigned long)n, (unsigned long)r);
    return out;
  };
  // unknowns y_l = c_{alpha+l}; rows m = 1..beta-1: sum_l C(alpha+l, m) y_l = 0
  const std::size_t n = std::size_t(beta);
  std::vector<std::vector<mpq_class>> rows;
  for (int m = 1; m <= beta - 1; ++m) {
    std::vector<mpq_class> row(n);
    for (int l = 1; l <= beta; ++l) row[std::size_t(l - 1)] = mpq_class(binom(alpha + l, m));
    rows.push_back(std::move(row));
  }
  // reduced row echelon form
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const mpq_class lead = rows[rank][col];
    for (auto& v : rows[rank]) v /= lead;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const mpq_class f = rows[r][col];
      for (std::size_t c = 0; c < n; ++c) rows[r][c] -= f * rows[rank][c];
    }
    pivot_col.push_back(int(col));
    ++rank;
  }
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[std::size_t(c)] = true;

  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<mpq_class> y(n, mpq_class(0));
    y[free] = 1;
    for (std::size_t r = 0; r < rank; ++r) y[std::size_t(pivot_col[r])] = -rows[r][free];

    BigInt lcm = 1;
    for (const auto& v : y) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    std::vector<BigInt> yi;
    for (const auto& v : y) yi.push_back(BigInt(v * mpq_class(lcm)));
    BigInt g = 0;
    for (const auto& v : yi) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    for (auto& v : yi) v /= g;

    PolyIdentity id;
    id.alpha = alpha;
    id.beta = beta;
    BigInt c0 = 0;
    for (const auto& v : yi) c0 -= v;
    id.c.push_back(c0);
    for (const auto& v : yi) id.c.push_back(v);
    for (int m = beta; m <= alpha + beta; ++m) {
      BigInt dm = 0;
      for (int l = 1; l <= beta; ++l) dm += binom(alpha + l, m) * yi[std::size_t(l - 1)];
      id.d.push_back(dm);
    }
    if (id.d.front() == 0) continue;
    if (id.d.front() < 0) {
      for (auto& v : id.c) v = -v;
      for (auto& v : id.d) v = -v;
    }
    return id;
  }
  throw InternalError("elimination identity: every nullspace solution has d_beta = 0");
}

bool verify_identity(const PolyIdentity& id) {
  if (int(id.c.size()) != id.beta + 1 || int(id.d.size()) != id.alpha + 1) return false;
  if (id.d.front() == 0) return false;
  const IntPoly x = IntPoly::variable(1, 0);
  const IntPoly one = IntPoly::constant(1, 1);
  IntPoly lhs = IntPoly::constant(1, id.c[0]);
  IntPoly power = one;
  for (int e = 1; e <= id.alpha + id.beta; ++e) {
    power = power * (x + one);
    if (e > id.alpha) lhs += IntPoly::constant(1, id.c[std::size_t(e - id.alpha)]) * power;
  }
  IntPoly rhs(1);
  IntPoly xm = one;
  for (int m = 0; m <= id.alpha + id.beta; ++m) {
    if (m >= id.beta) rhs += IntPoly::constant(1, id.d[std::size_t(m - id.beta)]) * xm;
    xm = xm * x;
  }
  return lhs == rhs;
}

}  // namespace vmvt
