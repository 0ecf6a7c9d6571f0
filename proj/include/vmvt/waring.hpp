#pragma once

// Ordered representation counts R_{s,k}(n), the truncated singular series and the
// conjectured main term Gamma(1+1/k)^s / Gamma(s/k) * S_{s,k}(n) * n^{s/k-1}.

#include <vector>

#include "vmvt/budget.hpp"
#include "vmvt/rational.hpp"

namespace vmvt {

struct RepCount {
  int s = 0;
  int k = 0;
  long n = 0;
  BigInt count;  // ordered representations by positive k-th powers
};

RepCount count_R(int s, int k, long n, const Budget& budget = {});

/// R_{s,k}(m) for m = 0..n_max by iterated convolution of the k-th power indicator.
std::vector<BigInt> rep_table(int s, int k, long n_max, const Budget& budget = {},
                              Exec exec = Exec::parallel);

struct SingularSeriesValue {
  int s = 0;
  int k = 0;
  long n = 0;
  int Q = 0;
  double value = 0;          // real part of the truncated sum
  double imag = 0;           // should vanish by conjugate symmetry
  double tail_estimate = 0;  // sum of |term_q| over Q/2 < q <= Q
};

/// Sum over q <= Q and a mod q coprime to q of (S(q,a)/q)^s e(-na/q), where
/// S(q,a) = sum_{r=1}^{q} e(a r^k / q). Angles are reduced exactly before evaluation.
SingularSeriesValue singular_series(int s, int k, long n, int Q = 50);

/// Requires k >= 3 and s >= k + 1.
double main_term(int s, int k, long n, int Q = 50);
double main_term_with(int s, int k, long n, double series);

struct ComparisonRow {
  long n = 0;
  BigInt R;
  double main = 0;
  double ratio = 0;
  SingularSeriesValue series;
};

/// One row per n; R values come from a single table up to max(ns).
std::vector<ComparisonRow> waring_compare(int s, int k, const std::vector<long>& ns, int Q = 50,
                                          const Budget& budget = {});

}  // namespace vmvt
