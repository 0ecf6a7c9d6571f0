#pragma once

// Direct enumeration oracles. Every function here walks the full search space with no
// hashing, lifting or convolution; they exist to check the fast kernels.

#include <vector>

#include "vmvt/budget.hpp"
#include "vmvt/congruence.hpp"
#include "vmvt/mvt_count.hpp"
#include "vmvt/rational.hpp"

namespace vmvt::reference {

BigInt naive_J(int s, int k, long X, const Budget& budget = {});
BigInt naive_diagonal(int s, long X, const Budget& budget = {});
BigInt naive_weyl(int s, int k, long X, const Budget& budget = {});
BigInt naive_shifted(int s, int m, int k, long X, long q, long b, const Budget& budget = {});
BigInt naive_mixed(const MixedMeanParams& params, MixedKind which, const Budget& budget = {});

/// Scan of [1, p^{kb}]^r.
std::vector<Tuple> naive_enumerate_B(const CongruenceInstance& inst, const Budget& budget = {});

/// Nested loops over x_1..x_s.
BigInt naive_R(int s, int k, long n);

/// Number of (x, y) pairs the naive counters visit.
double search_space_J(int s, long X);
double search_space_shifted(int s, long X, long q);
double search_space_mixed(const MixedMeanParams& params, MixedKind which);

}  // namespace vmvt::reference
