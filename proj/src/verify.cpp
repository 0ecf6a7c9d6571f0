#include "vmvt/verify.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "vmvt/congruence.hpp"
#include "vmvt/errors.hpp"
#include "vmvt/exponents.hpp"
#include "vmvt/iteration.hpp"
#include "vmvt/mvt_count.hpp"
#include "vmvt/reference.hpp"
#include "vmvt/waring.hpp"

namespace vmvt {

Profile parse_profile(const std::string& name) {
  if (name == "quick") return Profile::quick;
  if (name == "full") return Profile::full;
  throw InvalidParams("unknown profile '" + name + "' (expected quick or full)");
}

std::string to_string(Profile p) { return p == Profile::quick ? "quick" : "full"; }

bool SuiteReport::all_ok() const {
  for (const auto& c : checks) {
    if (!c.ok) return false;
  }
  return true;
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  std::size_t failed = 0;
  for (const auto& c : checks) {
    arr.push_back({{"module", c.module}, {"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    if (!c.ok) ++failed;
  }
  return {{"op", "verify-all"}, {"profile", vmvt::to_string(profile)}, {"seed", seed}, {"checks", arr},
          {"passed", checks.size() - failed}, {"failed", failed}};
}

namespace {

/// Runs `body`, which returns an empty string on success or a description of the first
/// counterexample. Library errors count as failures.
CheckResult run(const std::string& module, const std::string& name, const std::function<std::string()>& body,
                const std::string& scope) {
  CheckResult r{module, name, true, scope};
  try {
    std::string bad = body();
    if (!bad.empty()) {
      r.ok = false;
      r.detail = bad;
    }
  } catch (const std::exception& e) {
    r.ok = false;
    r.detail = std::string("error: ") + e.what();
  }
  return r;
}

std::string str(const Rational& q) { return q.str(); }

void exponent_checks(std::vector<CheckResult>& out) {
  out.push_back(run("exponents", "kappa at r = t = k - m", [] {
    for (int k = 2; k <= 30; ++k) {
      for (int m = 0; 2 * m <= k; ++m) {
        VinogradovParams p{k, k - m, k - m};
        if (!p.admissible()) continue;
        if (kappa(p) != Rational(long(k) * (k + 1) / 2 - long(m) * m)) return "k=" + std::to_string(k) + " m=" + std::to_string(m);
      }
    }
    return std::string();
  }, "k <= 30, 2m <= k"));
  out.push_back(run("exponents", "kappa at r = k - m - 1, t = k - m", [] {
    for (int k = 2; k <= 30; ++k) {
      for (int m = 0; 2 * m <= k - 1; ++m) {
        VinogradovParams p{k, k - m - 1, k - m};
        if (!p.admissible() || k - m - 1 == 0) continue;
        Rational want = Rational(long(k) * (k + 1) / 2 - long(m) * m - m) - Rational(long(m), long(k - m - 1));
        if (kappa(p) != want) return "k=" + std::to_string(k) + " m=" + std::to_string(m);
      }
    }
    return std::string();
  }, "k <= 30, 2m <= k - 1"));
  out.push_back(run("exponents", "kappa <= s + r, mu + nu and diagonal degeneracy", [] {
    for (int k = 2; k <= 30; ++k) {
      for (int t = 2; t <= k; ++t) {
        for (int r = 1; r <= k; ++r) {
          VinogradovParams p{k, r, t};
          if (!p.admissible()) continue;
          const auto mn = mu_nu(p);
          const std::string at = "(k,r,t)=(" + std::to_string(k) + "," + std::to_string(r) + "," + std::to_string(t) + ")";
          if (kappa(p) > Rational(long(r) * t + r)) return "kappa cap fails at " + at;
          if (mn.mu + mn.nu != long(t + r - k) * (r - 1)) return "mu + nu fails at " + at;
          if (r + t == k && (mn.mu != 0 || mn.nu != 0 || kappa(p) != Rational(long(r) * (t + 1)))) return "diagonal fails at " + at;
        }
      }
    }
    return std::string();
  }, "all admissible triples with k <= 30"));
  out.push_back(run("exponents", "eta non-increasing in s", [] {
    for (int k = 3; k <= 20; ++k) {
      for (auto mode : {EtaMode::families, EtaMode::envelope}) {
        Rational prev = eta_known(1, k, mode).value;
        for (long s = 2; s <= 2L * k * k + 2 * k; ++s) {
          Rational cur = eta_known(s, k, mode).value;
          if (cur > prev || cur < Rational(0)) return "k=" + std::to_string(k) + " s=" + std::to_string(s);
          prev = cur;
        }
      }
    }
    return std::string();
  }, "3 <= k <= 20, both modes"));
  out.push_back(run("exponents", "family Delta* equals generic max", [] {
    for (int k = 3; k <= 30; ++k) {
      for (auto fam : {Family::pronic, Family::square_minus_one}) {
        for (int m = 1; 2 * m <= k; ++m) {
          if (!family_admits(fam, k, m)) continue;
          const long v = family_v(fam, k, m);
          if (family_delta_star(fam, k, m) != delta_star_generic(v, k)) {
            return to_string(fam) + " k=" + std::to_string(k) + " m=" + std::to_string(m);
          }
        }
      }
    }
    return std::string();
  }, "3 <= k <= 30"));
  out.push_back(run("exponents", "s1 is the grid minimum", [] {
    for (int k = 3; k <= 20; ++k) {
      const S1Result best = s1(k);
      for (auto fam : {Family::pronic, Family::square_minus_one}) {
        for (int m = 1; 2 * m <= k; ++m) {
          if (!family_admits(fam, k, m)) continue;
          const long v = family_v(fam, k, m);
          for (int w = 1; w <= k - 1; ++w) {
            if (2 * v + long(w) * w - w >= 2L * k * k - 2) continue;
            if (s0(k, v, w) < best.value) return "k=" + std::to_string(k) + " beaten at v=" + std::to_string(v);
          }
        }
      }
      const S1Result any = s1(k, S1Search::all_v);
      if (any.value != best.value) return "k=" + std::to_string(k) + ": all-v search gives " + str(any.value);
    }
    return std::string();
  }, "3 <= k <= 20, both searches"));
  out.push_back(run("exponents", "G~ table 12..20", [] {
    const long want[] = {253, 299, 349, 403, 460, 521, 587, 656, 729};
    for (int k = 12; k <= 20; ++k) {
      const S1Result r = s1(k);
      const int m = k == 12 ? 2 : 3;
      const int w = k == 12 ? 5 : (k <= 14 ? 6 : 7);
      if (r.gtilde != want[k - 12] || r.m != m || r.w != w) return "k=" + std::to_string(k) + " gives " + r.gtilde.get_str();
    }
    return std::string();
  }, "gtilde and argmin"));
}

void count_checks(std::vector<CheckResult>& out, Profile profile, std::uint64_t seed) {
  const int kmax = profile == Profile::full ? 6 : 4;
  const long xmax = profile == Profile::full ? 12 : 8;
  out.push_back(run("mvt-count", "J equals diagonal for s <= k", [&] {
    for (int k = 1; k <= kmax; ++k) {
      for (int s = 1; s <= k; ++s) {
        for (long X = 1; X <= xmax; ++X) {
          if (count_J(s, k, X).count != count_diagonal(s, X).count) {
            return "s=" + std::to_string(s) + " k=" + std::to_string(k) + " X=" + std::to_string(X);
          }
        }
      }
    }
    return std::string();
  }, "k <= " + std::to_string(kmax) + ", X <= " + std::to_string(xmax)));
  out.push_back(run("mvt-count", "J dominates diagonal and decreases in k", [] {
    for (int s = 1; s <= 4; ++s) {
      for (long X = 1; X <= 8; ++X) {
        BigInt prev = count_J(s, 1, X).count;
        const BigInt diag = count_diagonal(s, X).count;
        if (count_weyl_moment(s, 1, X).count != prev) return "k=1 moment mismatch s=" + std::to_string(s);
        for (int k = 1; k <= 4; ++k) {
          const BigInt cur = count_J(s, k, X).count;
          if (cur < diag || cur > prev) return "s=" + std::to_string(s) + " k=" + std::to_string(k) + " X=" + std::to_string(X);
          prev = cur;
        }
      }
    }
    return std::string();
  }, "s <= 4, k <= 4, X <= 8"));
  const int instances = profile == Profile::full ? 50 : 12;
  out.push_back(run("mvt-count", "kernels equal naive enumeration", [&] {
    std::mt19937_64 rng(seed);
    auto pick = [&](int lo, int hi) { return int(std::uniform_int_distribution<int>(lo, hi)(rng)); };
    int done = 0;
    while (done < instances) {
      const int kind = pick(0, 3);
      const int s = pick(1, 3);
      const int k = pick(1, 4);
      const long X = pick(1, 10);
      if (kind == 0 && reference::search_space_J(s, X) <= 2e5) {
        if (count_J(s, k, X, {}, Exec::parallel).count != reference::naive_J(s, k, X)) return "J s=" + std::to_string(s);
        ++done;
      } else if (kind == 1 && reference::search_space_J(s, X) <= 2e5) {
        if (count_weyl_moment(s, k, X).count != reference::naive_weyl(s, k, X)) return "weyl s=" + std::to_string(s);
        ++done;
      } else if (kind == 2) {
        const long q = pick(1, 3), b = pick(0, int(q) - 1), X2 = pick(1, 24);
        const int m = pick(1, k);
        if (reference::search_space_shifted(s, X2, q) > 2e5) continue;
        if (count_shifted(s, m, k, X2, q, b).count != reference::naive_shifted(s, m, k, X2, q, b)) return std::string("shifted");
        ++done;
      } else if (kind == 3) {
        MixedMeanParams p{3, 1, 1, 5, 1, 2, 0, 0, pick(10, 60)};
        p.xi = pick(1, 5);
        do {
          p.eta = pick(1, 25);
        } while ((p.eta - p.xi) % 5 == 0);
        const auto which = pick(0, 1) == 0 ? MixedKind::I : MixedKind::K;
        if (reference::search_space_mixed(p, which) > 2e5) continue;
        if (count_mixed(p, which).count != reference::naive_mixed(p, which)) return "mixed X=" + std::to_string(p.X);
        ++done;
      }
    }
    return std::string();
  }, std::to_string(instances) + " seeded instances"));
}

void congruence_checks(std::vector<CheckResult>& out, Profile profile) {
  out.push_back(run("congruence-lab", "lifting equals naive scan", [] {
    for (long eta = 1; eta <= 5; ++eta) {
      for (long m1 = 0; m1 < 5; ++m1) {
        CongruenceInstance inst{3, 2, 2, 5, 0, 1, 0, eta, {m1, 2 * m1 + 1, 3}};
        if (enumerate_B(inst) != reference::naive_enumerate_B(inst)) return "eta=" + std::to_string(eta);
      }
    }
    return std::string();
  }, "k=3, r=2, t=2, p=5, b=1"));
  std::vector<std::array<int, 6>> sweeps{{3, 1, 2, 5, 0, 1}, {3, 2, 2, 5, 0, 1}, {3, 3, 2, 5, 0, 1}, {2, 2, 2, 5, 1, 2}};
  if (profile == Profile::full) {
    sweeps.push_back({3, 1, 2, 7, 0, 1});
    sweeps.push_back({3, 2, 2, 7, 0, 1});
    sweeps.push_back({3, 3, 2, 7, 0, 1});
  }
  for (const auto& sw : sweeps) {
    std::ostringstream name;
    name << "class bound k=" << sw[0] << " r=" << sw[1] << " t=" << sw[2] << " p=" << sw[3] << " a=" << sw[4]
         << " b=" << sw[5];
    out.push_back(run("congruence-lab", name.str(), [sw] {
      const auto c = max_B(sw[0], sw[1], sw[2], sw[3], sw[4], sw[5]);
      if (c.hypotheses_hold && !c.bound_respected) return "observed " + std::to_string(c.observed_max) + " > " + c.bound.get_str();
      return std::string();
    }, "full sweep"));
  }
  out.push_back(run("congruence-lab", "non-singular count within degree product", [] {
    const long primes[] = {3, 5, 7};
    for (long w : primes) {
      for (int c = -3; c <= 3; ++c) {
        for (int l = 1; l <= 2; ++l) {
          auto f = parse_poly("x1^3 + " + std::to_string(c) + "*x1 - 1", 1);
          auto r = hensel_count({f}, w, l);
          if (!r.bound_respected || r.count != r.count_mod_prime) return "w=" + std::to_string(w) + " c=" + std::to_string(c);
        }
      }
    }
    auto sys = std::vector<IntPoly>{parse_poly("x1^2 + x2^2 - 2", 2), parse_poly("x1*x2 - 1", 2)};
    auto r = hensel_count(sys, 5, 2);
    if (!r.bound_respected || r.count != r.count_mod_prime) return std::string("two-variable system");
    return std::string();
  }, "cubics mod 3, 5, 7 and a planar system"));
  out.push_back(run("congruence-lab", "elimination identity", [] {
    for (int a = 1; a <= 8; ++a) {
      for (int b = 1; b <= 8; ++b) {
        const auto id = solve_elimination_identity(a, b);
        if (!verify_identity(id) || id.d.front() <= 0) return "alpha=" + std::to_string(a) + " beta=" + std::to_string(b);
      }
    }
    return std::string();
  }, "1 <= alpha, beta <= 8"));
}

void iteration_checks(std::vector<CheckResult>& out, Profile profile, std::uint64_t seed) {
  const int reps = profile == Profile::full ? 100 : 10;
  out.push_back(run("iteration-tracer", "closed forms and window", [&] {
    for (int t = 2; t <= 6; ++t) {
      for (int N = 1; N <= 12; ++N) {
        if (!run_iteration(zero_config(t, t, t, N)).all_ok()) return "zero h at t=" + std::to_string(t);
        for (int i = 0; i < reps; ++i) {
          const auto trace = run_iteration(random_config(t, t, t, N, seed + 1000003ULL * t + 7919ULL * N + i));
          if (!trace.all_ok()) return "t=" + std::to_string(t) + " N=" + std::to_string(N) + " rep=" + std::to_string(i);
        }
      }
    }
    return std::string();
  }, "t in 2..6, N <= 12, " + std::to_string(reps) + " h-vectors each"));
  out.push_back(run("iteration-tracer", "Lambda cap decreases in N", [] {
    for (int t = 2; t <= 6; ++t) {
      for (long s = 1; s <= 36; ++s) {
        Rational prev = lambda_cap(s, t, 1).exact;
        for (int N = 1; N <= 30; ++N) {
          const auto cap = lambda_cap(s, t, N);
          if (!cap.ok || (N > 1 && !(cap.exact < prev)) || !theta_delta(t, N).ok) return "t=" + std::to_string(t) + " N=" + std::to_string(N);
          prev = cap.exact;
        }
      }
    }
    return std::string();
  }, "t in 2..6, s <= 36, N <= 30"));
}

void waring_checks(std::vector<CheckResult>& out, Profile profile, std::uint64_t seed) {
  out.push_back(run("waring", "convolution equals nested loops", [&] {
    const long nmax = profile == Profile::full ? 10000 : 2000;
    for (int s = 1; s <= 4; ++s) {
      for (int k = 2; k <= 4; ++k) {
        const auto table = rep_table(s, k, nmax);
        for (long n = 1; n <= nmax; n += (profile == Profile::full ? 1 : 7)) {
          if (table[std::size_t(n)] != reference::naive_R(s, k, n)) return "s=" + std::to_string(s) + " k=" + std::to_string(k) + " n=" + std::to_string(n);
        }
      }
    }
    return std::string();
  }, "s <= 4, k <= 4"));
  out.push_back(run("waring", "R non-decreasing in s", [] {
    for (int k = 2; k <= 4; ++k) {
      std::vector<std::vector<BigInt>> t;
      for (int s = 1; s <= 6; ++s) t.push_back(rep_table(s, k, 3000));
      for (int s = 1; s < 6; ++s) {
        for (long n = s + 1; n <= 3000; ++n) {
          if (t[std::size_t(s)][std::size_t(n)] < t[std::size_t(s - 1)][std::size_t(n - 1)]) return "k=" + std::to_string(k);
        }
      }
    }
    return std::string();
  }, "R_{s+1}(n+1) >= R_s(n), k <= 4, n <= 3000"));
  out.push_back(run("waring", "singular series is real", [&] {
    std::mt19937_64 rng(seed ^ 0x5157ULL);
    for (int i = 0; i < 10; ++i) {
      const long n = std::uniform_int_distribution<long>(1, 100000)(rng);
      for (int s : {4, 7, 8}) {
        const auto v = singular_series(s, 3, n, 50);
        if (std::abs(v.imag) >= 1e-6) return "n=" + std::to_string(n);
      }
    }
    return std::string();
  }, "10 seeded n, k=3, Q=50"));
  out.push_back(run("waring", "truncation self-consistency", [&] {
    std::mt19937_64 rng(seed ^ 0xC0FFEEULL);
    for (int i = 0; i < 10; ++i) {
      const long n = std::uniform_int_distribution<long>(10000, 100000)(rng);
      const double gap = std::abs(singular_series(8, 3, n, 100).value - singular_series(8, 3, n, 50).value);
      if (gap >= 0.05) return "n=" + std::to_string(n) + " gap=" + std::to_string(gap);
    }
    return std::string();
  }, "|S(100) - S(50)| < 0.05 on 10 seeded n, s=8, k=3"));
}

}  // namespace

SuiteReport verify_all(Profile profile, std::uint64_t seed) {
  SuiteReport report;
  report.profile = profile;
  report.seed = seed;
  exponent_checks(report.checks);
  count_checks(report.checks, profile, seed);
  congruence_checks(report.checks, profile);
  iteration_checks(report.checks, profile, seed);
  waring_checks(report.checks, profile, seed);
  return report;
}

}  // namespace vmvt
