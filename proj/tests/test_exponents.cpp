#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "vmvt/errors.hpp"
#include "vmvt/exponents.hpp"

using namespace vmvt;

namespace {

Rational half_k(int k) { return Rational(long(k) * (k + 1), 2L); }

// kappa expanded by hand: r(t+1) - (u/2)(u - 1 + (2r-2)/(t-1)) with u = t + r - k
Rational kappa_expanded(int k, int r, int t) {
  const long u = t + r - k;
  return Rational(long(r) * (t + 1)) - Rational(u, 2L) * (Rational(u - 1) + Rational(2L * r - 2, long(t - 1)));
}

}  // namespace

TEST_CASE("kappa examples") {
  CHECK(kappa({4, 2, 2}) == Rational(6));
  CHECK(kappa({13, 9, 10}) == Rational(236, 3));
  CHECK_THROWS_AS(kappa({3, 1, 1}), InvalidParams);
}

TEST_CASE("kappa specialises to k(k+1)/2 - m^2 and its square-minus-one companion") {
  for (int k = 2; k <= 30; ++k) {
    for (int m = 0; 2 * m <= k; ++m) {
      VinogradovParams p{k, k - m, k - m};
      if (p.admissible()) CHECK(kappa(p) == half_k(k) - Rational(long(m) * m));
    }
    for (int m = 0; 2 * m <= k - 1; ++m) {
      VinogradovParams p{k, k - m - 1, k - m};
      if (p.admissible() && k - m - 1 > 0) {
        CHECK(kappa(p) == half_k(k) - Rational(long(m) * m + m) - Rational(long(m), long(k - m - 1)));
      }
    }
  }
}

TEST_CASE("kappa agrees with the hand expansion and respects its caps") {
  for (int k = 2; k <= 30; ++k) {
    for (int r = 1; r <= k; ++r) {
      for (int t = 2; t <= k; ++t) {
        VinogradovParams p{k, r, t};
        if (!p.admissible()) continue;
        CHECK(kappa(p) == kappa_expanded(k, r, t));
        CHECK(kappa(p) <= Rational(long(r) * t + r));
        const auto mn = mu_nu(p);
        CHECK(mn.mu + mn.nu == long(t + r - k) * (r - 1));
        CHECK(2 * mn.mu == long(t + r - k) * (t + r - k - 1));
        CHECK(2 * mn.nu == long(t + r - k) * (k + r - t - 1));
        if (r + t == k) {
          CHECK(mn == MuNu{0, 0});
          CHECK(kappa(p) == Rational(long(r) * (t + 1)));
        }
      }
    }
  }
}

TEST_CASE("mu and nu examples") {
  CHECK(mu_nu({3, 1, 2}) == MuNu{0, 0});
  CHECK(mu_nu({5, 4, 3}) == MuNu{1, 5});
  for (int k = 2; k <= 12; ++k) CHECK(mu_nu({k, k, k}) == MuNu{long(k) * (k - 1) / 2, long(k) * (k - 1) / 2});
}

TEST_CASE("delta bounds and thresholds") {
  auto d = delta(12, 0, DeltaCase::square_minus_one);
  CHECK(d.value == Rational(0));
  CHECK(d.threshold == 143);
  d = delta(12, 2, DeltaCase::square_minus_one);
  CHECK(d.value == Rational(56, 9));
  CHECK(d.threshold == 99);
  for (int k = 2; k <= 20; ++k) {
    d = delta(k, 0, DeltaCase::pronic);
    CHECK(d.value == Rational(0));
    CHECK(d.threshold == long(k) * k + k);
  }
  CHECK_THROWS_AS(delta(5, 3, DeltaCase::pronic), InvalidParams);
  CHECK_THROWS_AS(delta(5, 3, DeltaCase::square_minus_one), InvalidParams);
  CHECK_THROWS_AS(delta(2, 1, DeltaCase::square_minus_one), InvalidParams);
}

TEST_CASE("eta examples") {
  CHECK(eta_known(99, 12).value == Rational(56, 9));
  for (int k = 3; k <= 20; ++k) CHECK(eta_known(long(k) * k + k, k).value == Rational(0));
  CHECK(eta_known(1, 4).value == Rational(9));
  CHECK(eta_known(1, 4).provenance == Provenance::diagonal);
}

TEST_CASE("eta is non-increasing in s and never negative") {
  for (int k = 2; k <= 20; ++k) {
    for (auto mode : {EtaMode::families, EtaMode::envelope}) {
      Rational prev = eta_known(1, k, mode).value;
      for (long s = 2; s <= 2L * k * k + 5; ++s) {
        const Rational cur = eta_known(s, k, mode).value;
        CHECK(cur <= prev);
        CHECK(cur >= Rational(0));
        CHECK(eta_known(s, k, EtaMode::envelope).value <= eta_known(s, k).value);
        prev = cur;
      }
    }
  }
}

TEST_CASE("Delta* examples") {
  CHECK(delta_star(99, 12) == Rational(47, 9));
  CHECK(delta_star(120, 14) == Rational(113, 10));
  for (int k = 3; k <= 20; ++k) CHECK(delta_star(long(k - 1) * (k - 1) + (k - 1), k) == Rational(0));
  CHECK_THROWS_AS(delta_star(0, 12), InvalidParams);
}

TEST_CASE("Delta* closed forms agree with the generic max on every family point") {
  for (int k = 3; k <= 30; ++k) {
    for (auto fam : {Family::pronic, Family::square_minus_one}) {
      for (int m = 1; 2 * m <= k; ++m) {
        if (!family_admits(fam, k, m)) continue;
        const long v = family_v(fam, k, m);
        CHECK(family_delta_star(fam, k, m) == delta_star_generic(v, k));
        const auto cls = classify_v(v, k);
        REQUIRE(cls.has_value());
        CHECK(cls->second == m);
      }
    }
  }
}

TEST_CASE("s0 examples") {
  CHECK(s0(12, 99, 5) == Rational(5813, 23));
  CHECK(gtilde_from(s0(12, 99, 5)) == 253);
  const Rational v13 = s0(13, 99, 6);
  CHECK(v13 > Rational(298));
  CHECK(v13 < Rational(299));
  CHECK(delta_star(99, 13) == Rational(34, 3));
  // Delta* = 0 makes s0 the full gap value
  for (int k = 3; k <= 15; ++k) {
    const long v = long(k - 1) * (k - 1) + (k - 1);
    for (int w = 1; w <= k - 1; ++w) {
      if (2 * v + long(w) * w - w < 2L * k * k - 2) CHECK(s0(k, v, w) == Rational(2 * v + long(w) * w - w));
    }
  }
  CHECK_THROWS_AS(s0(12, 99, 12), InvalidParams);
  CHECK_THROWS_AS(s0(12, 200, 5), InvalidParams);
}

TEST_CASE("s1 reproduces the table for 12 <= k <= 20") {
  const long want[] = {253, 299, 349, 403, 460, 521, 587, 656, 729};
  for (int k = 12; k <= 20; ++k) {
    const auto r = s1(k);
    CHECK(r.gtilde == want[k - 12]);
    CHECK(r.family == Family::square_minus_one);
    CHECK(r.m == (k == 12 ? 2 : 3));
    CHECK(r.w == (k == 12 ? 5 : (k <= 14 ? 6 : 7)));
    CHECK(2 * r.v + long(r.w) * r.w - r.w < 2L * k * k - 2);
    CHECK(r.gtilde == r.value.floor() + 1);
  }
  CHECK(s1(12).value == Rational(5813, 23));
  CHECK(s1(20).value == Rational(70686, 97));
}

TEST_CASE("s1 is minimal over the grid and the unrestricted search agrees") {
  for (int k = 3; k <= 20; ++k) {
    const auto best = s1(k);
    for (auto fam : {Family::pronic, Family::square_minus_one}) {
      for (int m = 1; 2 * m <= k; ++m) {
        if (!family_admits(fam, k, m)) continue;
        const long v = family_v(fam, k, m);
        for (int w = 1; w <= k - 1; ++w) {
          if (2 * v + long(w) * w - w < 2L * k * k - 2) CHECK(best.value <= s0(k, v, w));
        }
      }
    }
    CHECK(s1(k, S1Search::all_v).value == best.value);
  }
}

TEST_CASE("s1 at an integer value still adds one") {
  const auto r = s1(3);
  CHECK(r.value == Rational(12));
  CHECK(r.gtilde == 13);
}

TEST_CASE("s1 stays below 2k^2 - 2^{2/3} k^{4/3} + Ck") {
  // the excess over 2k^2 - 2^{2/3} k^{4/3}, divided by k, stays bounded
  double worst = 0;
  for (int k = 20; k <= 200; k += 20) {
    const double v = s1(k).value.to_double();
    const double main = 2.0 * k * k - std::pow(2.0, 2.0 / 3) * std::pow(double(k), 4.0 / 3);
    worst = std::max(worst, (v - main) / k);
  }
  CHECK(worst < 4.0);
}

TEST_CASE("eta_r_star composes with eta") {
  for (long s = 1; s <= 60; ++s) CHECK(eta_r_star(1, s, 5) == eta_known(s, 5).value);
  CHECK(eta_r_star(2, 100, 12) == eta_known(99, 12).value / Rational(2));
  CHECK_THROWS_AS(eta_r_star(3, 3, 12), InvalidParams);
}
