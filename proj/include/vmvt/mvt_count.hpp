#pragma once

// Exact counts of the symmetric Diophantine systems behind the mean values:
// J_{s,k}(X), the Weyl moment I_s(X), the shifted systems I_{s,m}(X;q,b) and the mixed
// mean values I_{a,b}(X;xi,eta), K_{a,b}(X;xi,eta). All counts are of ordered solutions.

#include <string>

#include <json.hpp>

#include "vmvt/budget.hpp"
#include "vmvt/rational.hpp"

namespace vmvt {

struct CountRecord {
  std::string op;
  nlohmann::json params;
  BigInt count;
  double elapsed_ms = 0;
};

/// Pairs (x, y) in [1,X]^{2s} with sum x_i^j = sum y_i^j for 1 <= j <= k.
CountRecord count_J(int s, int k, long X, const Budget& budget = {}, Exec exec = Exec::parallel);

/// Pairs (x, y) in [1,X]^{2s} with y a permutation of x.
CountRecord count_diagonal(int s, long X);

/// Pairs (x, y) in [1,X]^{2s} with sum x_i^k = sum y_i^k.
CountRecord count_weyl_moment(int s, int k, long X, const Budget& budget = {},
                              Exec exec = Exec::parallel);

/// Solutions with 0 <= x, y <= floor(X/q) of sum (qx_i+b)^k = sum (qy_i+b)^k together with
/// sum x_i^j = sum y_i^j for 1 <= j <= m-1.
CountRecord count_shifted(int s, int m, int k, long X, long q, long b,
                          const Budget& budget = {}, Exec exec = Exec::parallel);

struct MixedMeanParams {
  int k = 0;
  int r = 0;
  int t = 0;
  long p = 0;
  int a = 0;
  int b = 0;
  long xi = 0;
  long eta = 0;
  long X = 0;

  int s() const { return r * t; }
};

enum class MixedKind { I, K };

/// I_{a,b}(X;xi,eta) or K_{a,b}(X;xi,eta) as solution counts. x and y range over r-tuples
/// congruent to xi mod p^a with distinct residues mod p^{a+1}. For I the other 2s
/// variables are congruent to eta mod p^b; for K they form 2t r-tuples congruent to eta mod
/// p^b with distinct residues mod p^{b+1}. K with a = 0 is the conditioned variant: x, y
/// have distinct residues mod p, none congruent to eta.
CountRecord count_mixed(const MixedMeanParams& params, MixedKind which, const Budget& budget = {},
                        Exec exec = Exec::parallel);

/// Throws InvalidParams when the parameters do not describe a mixed mean value.
void validate(const MixedMeanParams& params, MixedKind which);

bool is_prime(long n);

}  // namespace vmvt
