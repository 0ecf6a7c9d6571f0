#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "vmvt/congruence.hpp"
#include "vmvt/errors.hpp"
#include "vmvt/reference.hpp"

using namespace vmvt;

namespace {

long ipow_l(long p, int e) {
  long out = 1;
  while (e-- > 0) out *= p;
  return out;
}

/// Max class count by running count_classes on every (xi, eta, m).
std::size_t max_by_census(int k, int r, int t, long p, int a, int b, std::vector<long>* witness_m = nullptr) {
  std::size_t best = 0;
  const long pa = ipow_l(p, a), pb = ipow_l(p, b);
  std::vector<long> mods;
  for (int j = 1; j <= k; ++j) mods.push_back(ipow_l(p, j * b));
  for (long xi = a >= 1 ? 1 : 0; xi <= (a >= 1 ? pa : 0); ++xi) {
    for (long eta = 1; eta <= pb; ++eta) {
      if (a >= 1 && (eta - xi) % p == 0) continue;
      std::vector<long> m(std::size_t(k), 1);
      for (;;) {
        const auto c = count_classes(CongruenceInstance{k, r, t, p, a, b, xi, eta, m});
        if (c.class_count > best) {
          best = c.class_count;
          if (witness_m) *witness_m = m;
        }
        std::size_t i = std::size_t(k);
        while (i > 0 && m[i - 1] == mods[i - 1]) m[--i] = 1;
        if (i == 0) break;
        ++m[i - 1];
      }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("congruence examples") {
  CHECK(enumerate_B({3, 1, 2, 5, 0, 1, 0, 1, {0, 0, 0}}).empty());
  const CongruenceInstance inst{3, 1, 2, 5, 0, 1, 0, 1, {2, 4, 3}};
  CHECK(enumerate_B(inst) == reference::naive_enumerate_B(inst));
  const auto seven = enumerate_B({3, 1, 2, 5, 0, 1, 0, 1, {1, 11, 91}});
  CHECK(std::find(seven.begin(), seven.end(), Tuple{7}) != seven.end());
  CHECK_THROWS_AS(enumerate_B({2, 2, 2, 5, 1, 2, 1, 6, {1, 1}}), InvalidParams);  // eta == xi mod p
  CHECK_THROWS_AS(enumerate_B({3, 1, 2, 3, 0, 1, 0, 1, {1, 1, 1}}), InvalidParams);  // p <= k
  CHECK_THROWS_AS(enumerate_B({3, 1, 2, 5, 1, 1, 1, 2, {1, 1, 1}}), InvalidParams);  // a >= b
}

TEST_CASE("lifting equals the naive scan") {
  for (long eta = 1; eta <= 5; ++eta) {
    for (long m1 = 0; m1 < 5; ++m1) {
      for (long m2 : {1L, 7L, 19L}) {
        const CongruenceInstance inst{3, 2, 2, 5, 0, 1, 0, eta, {m1, m2, 3 * m1 + 2}};
        CHECK(enumerate_B(inst) == reference::naive_enumerate_B(inst));
      }
    }
  }
  for (long xi = 1; xi <= 5; ++xi) {
    for (long eta = 1; eta <= 25; eta += 3) {
      if ((eta - xi) % 5 == 0) continue;
      for (long m1 : {2L, 9L}) {
        const CongruenceInstance inst{2, 2, 2, 5, 1, 2, xi, eta, {m1, 100}};
        CHECK(enumerate_B(inst) == reference::naive_enumerate_B(inst));
      }
    }
  }
}

TEST_CASE("solution sets are closed under swapping coordinates") {
  for (long eta = 1; eta <= 5; ++eta) {
    for (long m1 = 0; m1 < 5; ++m1) {
      const auto sols = enumerate_B({3, 2, 2, 5, 0, 1, 0, eta, {m1, 2 * m1 + 3, 11}});
      const std::set<Tuple> all(sols.begin(), sols.end());
      for (const auto& z : sols) CHECK(all.count(Tuple{z[1], z[0]}) == 1);
    }
  }
}

TEST_CASE("every enumerated solution satisfies the system") {
  const CongruenceInstance inst{3, 2, 3, 7, 0, 1, 0, 3, {5, 20, 100}};
  for (const auto& z : enumerate_B(inst)) {
    for (int j = 1; j <= 3; ++j) {
      BigInt sum = 0;
      for (long v : z) sum += ipow(BigInt(v - inst.eta), (unsigned long)j);
      sum -= inst.m[std::size_t(j - 1)];
      CHECK(mpz_divisible_ui_p(sum.get_mpz_t(), (unsigned long)ipow_l(7, j)) != 0);
    }
    CHECK(z[0] % 7 != z[1] % 7);
  }
}

TEST_CASE("class partition refines the solution set") {
  for (long eta = 1; eta <= 5; ++eta) {
    const CongruenceInstance inst{3, 3, 2, 5, 0, 1, 0, eta, {1, 2, 3}};
    const auto c = count_classes(inst, true);
    std::size_t total = 0;
    for (auto n : c.class_sizes) total += n;
    CHECK(total == c.solution_count);
    CHECK(c.witnesses.size() == c.class_count);
    std::set<Tuple> keys;
    for (const auto& w : c.witnesses) {
      Tuple key;
      for (long v : w) key.push_back(v % 25);
      keys.insert(key);
    }
    CHECK(keys.size() == c.class_count);
  }
}

TEST_CASE("empty solution sets have no classes") {
  CHECK(count_classes({3, 1, 2, 5, 0, 1, 0, 1, {0, 0, 0}}).class_count == 0);
}

TEST_CASE("class bound parameters") {
  CHECK(class_bound(3, 2, 2, 5, 0, 1) == 6);
  CHECK(class_bound(3, 3, 2, 7, 0, 1) == 42);
  CHECK(class_bound(2, 2, 2, 5, 1, 2) == 250);
  CHECK(bound_hypotheses_hold(3, 2, 2, 0, 1));
  CHECK_FALSE(bound_hypotheses_hold(5, 3, 3, 2, 1));
}

TEST_CASE("sweep maximum equals the per-instance census maximum") {
  const std::array<int, 6> small[] = {{3, 1, 2, 5, 0, 1}, {3, 2, 2, 5, 0, 1}, {2, 2, 2, 3, 1, 2}, {2, 1, 2, 3, 0, 1}};
  for (const auto& c : small) {
    const auto sweep = max_B(c[0], c[1], c[2], c[3], c[4], c[5]);
    std::vector<long> m;
    CHECK(sweep.observed_max == max_by_census(c[0], c[1], c[2], c[3], c[4], c[5], &m));
    const auto at_witness = count_classes(
        CongruenceInstance{c[0], c[1], c[2], c[3], c[4], c[5], sweep.witness_xi, sweep.witness_eta, sweep.witness_m});
    CHECK(at_witness.class_count == sweep.observed_max);
  }
}

TEST_CASE("serial and parallel sweeps agree") {
  const auto a = max_B(3, 2, 2, 5, 0, 1, {}, Exec::serial);
  const auto b = max_B(3, 2, 2, 5, 0, 1, {}, Exec::parallel);
  CHECK(a.observed_max == b.observed_max);
  CHECK(a.witness_eta == b.witness_eta);
  CHECK(a.witness_m == b.witness_m);
}

TEST_CASE("class bound holds on the desk-scale sweeps") {
  const std::array<int, 6> sweeps[] = {{3, 1, 2, 5, 0, 1}, {3, 2, 2, 5, 0, 1}, {3, 3, 2, 5, 0, 1}, {2, 2, 2, 5, 1, 2}};
  for (const auto& c : sweeps) {
    const auto census = max_B(c[0], c[1], c[2], c[3], c[4], c[5]);
    CHECK(census.hypotheses_hold);
    CHECK(census.bound_respected);
    CHECK(BigInt((unsigned long)census.observed_max) <= census.bound);
  }
  const auto diag = max_B(3, 1, 2, 5, 0, 1);
  CHECK(diag.strongly_diagonal);
  CHECK_FALSE(diag.note.empty());
}

TEST_CASE("non-singular solution counts") {
  CHECK(hensel_count({parse_poly("x1 - 3", 1)}, 5, 2).count == 1);
  const auto sq = hensel_count({parse_poly("x1^2 - 1", 1)}, 7, 2);
  CHECK(sq.count == 2);
  CHECK(sq.degree_bound == 2);
  CHECK(hensel_count({parse_poly("x1^2 - 7", 1)}, 7, 1).count == 0);
  CHECK(hensel_count({parse_poly("x1^2 - 7", 1)}, 7, 1).count_mod_prime == 0);
  for (long w : {3L, 5L, 7L, 11L}) {
    for (int l = 1; l <= 2; ++l) {
      const auto r = hensel_count({parse_poly("x1^3 - 2*x1 + 1", 1)}, w, l);
      CHECK(r.bound_respected);
      CHECK(r.count == r.count_mod_prime);
    }
  }
  const auto planar = hensel_count({parse_poly("x1^2 + x2^2 - 5", 2), parse_poly("x1 - x2 - 1", 2)}, 7, 2);
  CHECK(planar.bound_respected);
  CHECK(planar.degree_bound == 2);
  CHECK(planar.count == planar.count_mod_prime);
  CHECK_THROWS_AS(hensel_count({parse_poly("x1 - 3", 1)}, 6, 1), InvalidParams);
}

TEST_CASE("elimination identity examples") {
  auto id = solve_elimination_identity(1, 1);
  CHECK(id.c == std::vector<BigInt>{-1, 1});
  CHECK(id.d == std::vector<BigInt>{2, 1});
  id = solve_elimination_identity(2, 1);
  CHECK(id.c == std::vector<BigInt>{-1, 1});
  CHECK(id.d == std::vector<BigInt>{3, 3, 1});
  id = solve_elimination_identity(1, 2);
  CHECK(verify_identity(id));
  CHECK(id.d.size() == 2);
}

TEST_CASE("elimination identity verifies for alpha, beta <= 8") {
  for (int a = 1; a <= 8; ++a) {
    for (int b = 1; b <= 8; ++b) {
      const auto id = solve_elimination_identity(a, b);
      CHECK(verify_identity(id));
      CHECK(id.d.front() > 0);
      CHECK(id.c.size() == std::size_t(b + 1));
      CHECK(id.d.size() == std::size_t(a + 1));
    }
  }
  auto broken = solve_elimination_identity(3, 3);
  broken.c.back() += 1;
  CHECK_FALSE(verify_identity(broken));
}
