#include "vmvt/waring.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>

#include "vmvt/errors.hpp"

namespace vmvt {

namespace {

std::vector<long> kth_powers_upto(int k, long n) {
  std::vector<long> out;
  for (long x = 1;; ++x) {
    const BigInt v = ipow(BigInt(x), (unsigned long)k);
    if (v > n) break;
    out.push_back(v.get_si());
  }
  return out;
}

template <class Word>
std::vector<Word> convolve_powers(const std::vector<Word>& prev, const std::vector<long>& powers, Exec exec) {
  const long len = long(prev.size());
  std::vector<Word> next(prev.size(), Word(0));
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (long m = 0; m < len; ++m) {
      Word acc(0);
      for (long v : powers) {
        if (v > m) break;
        acc += prev[std::size_t(m - v)];
      }
      next[std::size_t(m)] = acc;
    }
  } else {
    for (long m = 0; m < len; ++m) {
      Word acc(0);
      for (long v : powers) {
        if (v > m) break;
        acc += prev[std::size_t(m - v)];
      }
      next[std::size_t(m)] = acc;
    }
  }
  return next;
}

}  // namespace

std::vector<BigInt> rep_table(int s, int k, long n_max, const Budget& budget, Exec exec) {
  require(s >= 1 && k >= 2 && n_max >= 0, "waring: s >= 1, k >= 2, n >= 0 required");
  const auto powers = kth_powers_upto(k, n_max);
  const double work = double(s) * double(n_max + 1) * double(std::max<std::size_t>(powers.size(), 1));
  if (work > double(budget.max_loop) * 10) throw BudgetExceeded("waring: convolution exceeds budget", work);

  // every entry is at most (#powers)^s
  const double worst = std::pow(double(powers.size()), s);
  std::vector<BigInt> out(std::size_t(n_max + 1));
  if (worst < double(std::numeric_limits<std::uint64_t>::max()) / 2) {
    std::vector<std::uint64_t> dp(std::size_t(n_max + 1), 0);
    dp[0] = 1;
    for (int i = 0; i < s; ++i) dp = convolve_powers(dp, powers, exec);
    for (std::size_t m = 0; m < dp.size(); ++m) mpz_import(out[m].get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &dp[m]);
  } else {
    std::vector<BigInt> dp(std::size_t(n_max + 1), BigInt(0));
    dp[0] = 1;
    for (int i = 0; i < s; ++i) dp = convolve_powers(dp, powers, exec);
    out = std::move(dp);
  }
  return out;
}

RepCount count_R(int s, int k, long n, const Budget& budget) {
  require(n >= 1, "waring: n >= 1 required");
  auto table = rep_table(s, k, n, budget, Exec::serial);
  return RepCount{s, k, n, table[std::size_t(n)]};
}

SingularSeriesValue singular_series(int s, int k, long n, int Q) {
  require(s >= 1 && k >= 1 && Q >= 1, "singular series: s, k, Q >= 1 required");
  using C = std::complex<long double>;
  const long double two_pi = 2.0L * std::acos(-1.0L);
  std::vector<C> terms(std::size_t(Q) + 1);

#pragma omp parallel for schedule(dynamic, 1)
  for (int q = 1; q <= Q; ++q) {
    std::vector<C> unit(static_cast<std::size_t>(q));
    for (int j = 0; j < q; ++j) unit[std::size_t(j)] = std::polar(1.0L, two_pi * j / q);
    // multiplicity of each residue of r^k
    std::vector<long> count(std::size_t(q), 0);
    for (long r = 1; r <= q; ++r) {
      long v = 1 % q;
      for (int e = 0; e < k; ++e) v = v * r % q;
      ++count[std::size_t(v)];
    }
    const long nq = n % q;
    C total = 0;
    for (long a = 1; a <= q; ++a) {
      if (std::gcd(a, long(q)) != 1) continue;
      C S = 0;
      for (long rho = 0; rho < q; ++rho) {
        if (count[std::size_t(rho)] != 0) S += (long double)count[std::size_t(rho)] * unit[std::size_t(a * rho % q)];
      }
      S /= (long double)q;
      C power = 1;
      for (int e = 0; e < s; ++e) power *= S;
      const long back = (q - a * nq % q) % q;
      total += power * unit[std::size_t(back)];
    }
    terms[std::size_t(q)] = total;
  }

  SingularSeriesValue out{s, k, n, Q, 0, 0, 0};
  C sum = 0;
  long double tail = 0;
  for (int q = 1; q <= Q; ++q) {
    sum += terms[std::size_t(q)];
    if (2 * q > Q) tail += std::abs(terms[std::size_t(q)]);
  }
  out.value = double(sum.real());
  out.imag = double(sum.imag());
  out.tail_estimate = double(tail);
  return out;
}

double main_term_with(int s, int k, long n, double series) {
  require(k >= 3 && s >= k + 1, "main term: k >= 3 and s >= k + 1 required");
  require(n >= 1, "main term: n >= 1 required");
  const long double g = std::tgamma(1.0L + 1.0L / k);
  const long double factor = std::pow(g, (long double)s) / std::tgamma((long double)s / k);
  return double(factor * series * std::pow((long double)n, (long double)s / k - 1.0L));
}

double main_term(int s, int k, long n, int Q) {
  require(k >= 3 && s >= k + 1, "main term: k >= 3 and s >= k + 1 required");
  return main_term_with(s, k, n, singular_series(s, k, n, Q).value);
}

std::vector<ComparisonRow> waring_compare(int s, int k, const std::vector<long>& ns, int Q, const Budget& budget) {
  require(!ns.empty(), "waring compare: no n values");
  require(k >= 3 && s >= k + 1, "main term: k >= 3 and s >= k + 1 required");
  const long n_max = *std::max_element(ns.begin(), ns.end());
  require(*std::min_element(ns.begin(), ns.end()) >= 1, "waring compare: n >= 1 required");
  const auto table = rep_table(s, k, n_max, budget);
  std::vector<ComparisonRow> rows;
  for (long n : ns) {
    ComparisonRow row;
    row.n = n;
    row.R = table[std::size_t(n)];
    row.series = singular_series(s, k, n, Q);
    row.main = main_term_with(s, k, n, row.series.value);
    row.ratio = row.main != 0 ? row.R.get_d() / row.main : std::numeric_limits<double>::infinity();
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace vmvt
