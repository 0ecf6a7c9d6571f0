#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "vmvt/errors.hpp"
#include "vmvt/mvt_count.hpp"
#include "vmvt/reference.hpp"

using namespace vmvt;

TEST_CASE("J examples") {
  for (long X = 1; X <= 6; ++X) {
    for (int k = 1; k <= 4; ++k) CHECK(count_J(1, k, X).count == X);
  }
  CHECK(count_J(2, 2, 5).count == 45);
  CHECK(count_J(3, 1, 3).count == 141);
  CHECK(count_J(3, 2, 6).count == 1032);
  CHECK(count_J(4, 3, 5).count == 7885);
  CHECK(count_J(3, 3, 7).count == 1645);
}

TEST_CASE("diagonal examples") {
  CHECK(count_diagonal(1, 9).count == 9);
  CHECK(count_diagonal(2, 5).count == 45);
  CHECK(count_diagonal(3, 2).count == 20);
  for (int s = 1; s <= 3; ++s) {
    for (long X = 1; X <= 5; ++X) CHECK(count_diagonal(s, X).count == reference::naive_diagonal(s, X));
  }
}

TEST_CASE("Weyl moment examples") {
  CHECK(count_weyl_moment(1, 3, 17).count == 17);
  CHECK(count_weyl_moment(2, 3, 12).count == count_diagonal(2, 12).count + 8);
  CHECK(count_weyl_moment(2, 5, 10).count == count_diagonal(2, 10).count);
}

TEST_CASE("shifted system examples") {
  for (long q = 1; q <= 4; ++q) {
    for (long b = 0; b < q; ++b) {
      for (int m = 1; m <= 3; ++m) CHECK(count_shifted(1, m, 3, 29, q, b).count == 29 / q + 1);
    }
  }
  CHECK(count_shifted(1, 2, 3, 36, 3, 1).count == 13);
  CHECK(count_shifted(2, 2, 3, 36, 3, 1).count == 325);
  CHECK_THROWS_AS(count_shifted(2, 4, 3, 36, 3, 1), InvalidParams);
  CHECK_THROWS_AS(count_shifted(2, 2, 3, 36, 3, 3), InvalidParams);
}

TEST_CASE("shifted with q = 1, b = 0, m = 1 counts the single equation over 0..X") {
  for (int s = 1; s <= 3; ++s) {
    for (int k = 1; k <= 4; ++k) {
      for (long X = 1; X <= 6; ++X) {
        // zero contributes only to the first power sum, so compare with the naive counter
        CHECK(count_shifted(s, 1, k, X, 1, 0).count == reference::naive_shifted(s, 1, k, X, 1, 0));
      }
    }
  }
}

TEST_CASE("strongly diagonal regime: J equals the diagonal count for s <= k") {
  for (int k = 1; k <= 5; ++k) {
    for (int s = 1; s <= k; ++s) {
      for (long X = 1; X <= 9; ++X) CHECK(count_J(s, k, X).count == count_diagonal(s, X).count);
    }
  }
}

TEST_CASE("J dominates the diagonal, decreases in k and equals the moment at k = 1") {
  for (int s = 1; s <= 4; ++s) {
    for (long X = 1; X <= 7; ++X) {
      const BigInt diag = count_diagonal(s, X).count;
      CHECK(count_weyl_moment(s, 1, X).count == count_J(s, 1, X).count);
      for (int k = 1; k <= 4; ++k) {
        CHECK(count_J(s, k, X).count >= diag);
        CHECK(count_J(s, k + 1, X).count <= count_J(s, k, X).count);
      }
    }
  }
}

TEST_CASE("serial and parallel kernels agree bit for bit") {
  for (int s = 1; s <= 5; ++s) {
    for (int k = 1; k <= 3; ++k) {
      CHECK(count_J(s, k, 9, {}, Exec::serial).count == count_J(s, k, 9, {}, Exec::parallel).count);
      CHECK(count_weyl_moment(s, k + 1, 9, {}, Exec::serial).count ==
            count_weyl_moment(s, k + 1, 9, {}, Exec::parallel).count);
    }
  }
}

TEST_CASE("large power sums take the big-integer path") {
  // 5 * 3000^6 exceeds the fixed-width bound
  CHECK(count_J(1, 6, 3000).count == 3000);
  CHECK(count_J(2, 6, 60).count == count_diagonal(2, 60).count);
}

TEST_CASE("meet-in-the-middle equals naive enumeration on seeded instances") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> sd(1, 3), kd(1, 4), xd(1, 9);
  for (int i = 0; i < 40; ++i) {
    const int s = sd(rng), k = kd(rng);
    const long X = xd(rng);
    if (reference::search_space_J(s, X) > 1e6) continue;
    CHECK(count_J(s, k, X).count == reference::naive_J(s, k, X));
    CHECK(count_weyl_moment(s, k, X).count == reference::naive_weyl(s, k, X));
  }
}

TEST_CASE("mixed mean values") {
  MixedMeanParams p{3, 1, 1, 5, 1, 2, 1, 2, 50};
  CHECK(count_mixed(p, MixedKind::I).count == 20);
  CHECK(count_mixed(p, MixedKind::I).count == reference::naive_mixed(p, MixedKind::I));
  // with r = t = 1 the K system has the same shape as I
  CHECK(count_mixed(p, MixedKind::K).count == count_mixed(p, MixedKind::I).count);

  MixedMeanParams empty{3, 1, 1, 5, 2, 3, 24, 2, 20};  // nothing in 1..20 is 24 mod 25
  CHECK(count_mixed(empty, MixedKind::I).count == 0);

  MixedMeanParams bad = p;
  bad.eta = 6;  // congruent to xi mod p
  CHECK_THROWS_AS(count_mixed(bad, MixedKind::I), InvalidParams);
  MixedMeanParams zero_a{3, 1, 1, 5, 0, 1, 0, 2, 30};
  CHECK_THROWS_AS(count_mixed(zero_a, MixedKind::I), InvalidParams);
  CHECK(count_mixed(zero_a, MixedKind::K).count == reference::naive_mixed(zero_a, MixedKind::K));
}

TEST_CASE("mixed counts match naive enumeration with distinctness active") {
  const MixedMeanParams cases[] = {
      {3, 2, 1, 5, 1, 2, 1, 2, 30},  {2, 2, 1, 3, 1, 2, 1, 2, 24}, {3, 2, 2, 5, 0, 1, 0, 3, 12},
      {2, 1, 2, 3, 1, 2, 2, 4, 25},  {3, 2, 1, 5, 0, 1, 0, 1, 10},
  };
  for (const auto& p : cases) {
    for (auto which : {MixedKind::I, MixedKind::K}) {
      if (which == MixedKind::I && p.a == 0) continue;
      if (reference::search_space_mixed(p, which) > 3e6) continue;
      CHECK(count_mixed(p, which).count == reference::naive_mixed(p, which));
    }
  }
}

TEST_CASE("budget guard refuses oversized requests") {
  Budget tiny{1000, 1000};
  CHECK_THROWS_AS(count_J(6, 3, 40, tiny), BudgetExceeded);
  CHECK_THROWS_AS(count_J(0, 3, 4), InvalidParams);
}
