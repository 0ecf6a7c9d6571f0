#pragma once

// The auxiliary congruence systems
//
//   sum_{i<=r} (z_i - eta)^j == m_j  (mod p^{jb}),  1 <= j <= k,
//
// with 1 <= z <= p^{kb}, their R(tb)-equivalence classes (componentwise mod p^{tb}), the
// maximised class count B_{a,b}^{r,t}(p) with its k! p^{mu b + nu a} bound, a counter for
// non-singular solutions of square polynomial systems, and the elimination identity
//
//   c_alpha + sum_{l=1}^{beta} c_{alpha+l} (x+1)^{alpha+l} = sum_{m=beta}^{alpha+beta} d_m x^m.

#include <optional>
#include <string>
#include <vector>

#include "vmvt/budget.hpp"
#include "vmvt/polynomial.hpp"
#include "vmvt/rational.hpp"

namespace vmvt {

using Tuple = std::vector<long>;

struct CongruenceInstance {
  int k = 0;
  int r = 0;
  int t = 0;
  long p = 0;
  int a = 0;
  int b = 0;
  long xi = 0;   // residue mod p^a, ignored when a = 0
  long eta = 0;  // residue mod p^b
  std::vector<long> m;  // k residues, m_j taken mod p^{jb}
};

/// Throws InvalidParams unless (k,r,t) is admissible, p > k is prime, 0 <= a < b,
/// 1 <= eta <= p^b, m has k entries, and for a >= 1: 1 <= xi <= p^a with eta != xi mod p.
void validate(const CongruenceInstance& inst);

/// All solutions z in [1, p^{kb}]^r, lexicographically sorted. For a >= 1 the
/// coordinates are congruent to xi mod p^a and distinct mod p^{a+1}; for a = 0 they are
/// distinct mod p and none is congruent to eta mod p. Built by lifting level by level:
/// residues mod p^b first, then one block of p^b digits per congruence.
std::vector<Tuple> enumerate_B(const CongruenceInstance& inst, const Budget& budget = {});

/// Lemma-type bound k! * p^{mu b + nu a}.
BigInt class_bound(int k, int r, int t, long p, int a, int b);

/// (k,r,t) admissible, 0 <= a < b and b >= (k - t - 1) a.
bool bound_hypotheses_hold(int k, int r, int t, int a, int b);

struct EquivalenceClassCensus {
  CongruenceInstance instance;
  std::size_t solution_count = 0;
  std::size_t class_count = 0;
  std::vector<std::size_t> class_sizes;  // in order of first appearance
  BigInt bound;
  bool hypotheses_hold = false;
  std::vector<Tuple> witnesses;  // lexicographically first solution of each class
};

/// Partitions enumerate_B by z mod p^{tb}. Solutions stay ordered tuples; nothing is sorted
/// within a tuple.
EquivalenceClassCensus count_classes(const CongruenceInstance& inst, bool keep_witnesses = false,
                                     const Budget& budget = {});

struct MaxClassCensus {
  int k = 0;
  int r = 0;
  int t = 0;
  long p = 0;
  int a = 0;
  int b = 0;
  std::size_t observed_max = 0;
  BigInt bound;
  bool hypotheses_hold = false;
  bool bound_respected = true;  // observed_max <= bound; only meaningful with the hypotheses
  bool strongly_diagonal = false;  // r + t = k, so mu = nu = 0
  std::size_t instances_swept = 0;  // (xi, eta) pairs
  // first maximiser in lexicographic (xi, eta, m) order, m in 1..p^{jb} representatives
  long witness_xi = 0;
  long witness_eta = 0;
  std::vector<long> witness_m;
  std::string note;
};

/// Maximum class count over every xi, eta (eta != xi mod p when a >= 1; xi = 0 when a = 0)
/// and every m. For each (xi, eta) each class mod p^{tb} is visited once and all its lifts
/// are expanded, so no per-m re-enumeration happens. (xi, eta) pairs run in parallel.
MaxClassCensus max_B(int k, int r, int t, long p, int a, int b, const Budget& budget = {},
                     Exec exec = Exec::parallel);

struct HenselResult {
  BigInt count;              // non-singular solutions mod modulus^level
  BigInt count_mod_prime;    // non-singular solutions mod modulus; equal by unique lifting
  BigInt degree_bound;       // product of degrees
  bool bound_respected = true;
};

/// Counts x in [1, w^l]^d with f_j(x) == 0 (mod w^l) for all j and Jacobian determinant
/// prime to w. Needs d polynomials in d variables and w prime.
HenselResult hensel_count(const std::vector<IntPoly>& system, long prime, int level,
                          const Budget& budget = {});

struct PolyIdentity {
  int alpha = 0;
  int beta = 0;
  std::vector<BigInt> c;  // c_alpha .. c_{alpha+beta}
  std::vector<BigInt> d;  // d_beta .. d_{alpha+beta}
};

/// Primitive integer solution with d_beta > 0, from the nullspace of the beta - 1 linear
/// conditions that kill the x^1..x^{beta-1} coefficients.
PolyIdentity solve_elimination_identity(int alpha, int beta);

/// Expands both sides by repeated multiplication and compares every coefficient.
bool verify_identity(const PolyIdentity& id);

}  // namespace vmvt
