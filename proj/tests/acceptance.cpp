// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "vmvt/congruence.hpp"
#include "vmvt/exponents.hpp"
#include "vmvt/iteration.hpp"
#include "vmvt/mvt_count.hpp"
#include "vmvt/params.hpp"
#include "vmvt/reference.hpp"
#include "vmvt/waring.hpp"

using namespace vmvt;

namespace {

int failures = 0;

// body returns an empty string on success, otherwise the reason
void criterion(const std::string& title, double limit_s, const std::function<std::string()>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string reason = body();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (reason.empty() && secs >= limit_s) reason = "runtime " + std::to_string(secs) + " s over the limit";
  if (!reason.empty()) ++failures;
  std::printf("%s %s (%.2f s, limit %.0f s)%s%s\n", reason.empty() ? "PASS" : "FAIL", title.c_str(), secs, limit_s,
              reason.empty() ? "" : ": ", reason.c_str());
  std::fflush(stdout);
}

Rational half_k(int k) { return Rational(long(k) * (k + 1), 2); }

}  // namespace

int main() {
  criterion("G~(k) table for 12 <= k <= 20 with its argmins", 1, [] {
    const long want[] = {253, 299, 349, 403, 460, 521, 587, 656, 729};
    for (int k = 12; k <= 20; ++k) {
      const auto r = s1(k);
      const int m = k == 12 ? 2 : 3;
      const int w = k == 12 ? 5 : (k <= 14 ? 6 : 7);
      if (r.gtilde != want[k - 12] || r.m != m || r.w != w) {
        return "k=" + std::to_string(k) + " gave " + r.gtilde.get_str() + " at m=" + std::to_string(r.m) +
               " w=" + std::to_string(r.w);
      }
    }
    return std::string();
  });

  criterion("kappa specialisations for k <= 30", 1, [] {
    int checked = 0;
    for (int k = 2; k <= 30; ++k) {
      for (int m = 0; m <= k; ++m) {
        const VinogradovParams p{k, k - m, k - m};
        if (p.admissible()) {
          ++checked;
          if (kappa(p) != half_k(k) - Rational(long(m) * m)) return "k=" + std::to_string(k) + " m=" + std::to_string(m);
        }
        const VinogradovParams q{k, k - m - 1, k - m};
        if (k - m - 1 > 0 && q.admissible()) {
          ++checked;
          const Rational want = half_k(k) - Rational(long(m) * m + m) - Rational(long(m), long(k - m - 1));
          if (kappa(q) != want) return "second form k=" + std::to_string(k) + " m=" + std::to_string(m);
        }
      }
    }
    return checked > 0 ? std::string() : std::string("no admissible parameters");
  });

  criterion("J_{s,k}(X) equals the diagonal count for s <= k <= 6, X <= 12", 300, [] {
    for (int k = 1; k <= 6; ++k) {
      for (int s = 1; s <= k; ++s) {
        for (long X = 1; X <= 12; ++X) {
          const auto j = count_J(s, k, X).count;
          const auto d = count_diagonal(s, X).count;
          if (j != d) return "s=" + std::to_string(s) + " k=" + std::to_string(k) + " X=" + std::to_string(X);
        }
      }
    }
    return std::string();
  });

  criterion("class counts stay within k! p^{mu b + nu a} on every sweep", 600, [] {
    const int sweeps[][6] = {{3, 1, 2, 5, 0, 1}, {3, 2, 2, 5, 0, 1}, {3, 3, 2, 5, 0, 1}, {3, 1, 2, 7, 0, 1},
                             {3, 2, 2, 7, 0, 1}, {3, 3, 2, 7, 0, 1}, {2, 2, 2, 5, 1, 2}};
    for (const auto& sw : sweeps) {
      const auto c = max_B(sw[0], sw[1], sw[2], sw[3], sw[4], sw[5]);
      std::ostringstream id;
      id << "k=" << sw[0] << " r=" << sw[1] << " p=" << sw[3] << " a=" << sw[4] << " b=" << sw[5];
      if (!c.hypotheses_hold) return id.str() + " outside the hypotheses";
      if (!c.bound_respected) return id.str() + " observed " + std::to_string(c.observed_max) + " > " + c.bound.get_str();
    }
    return std::string();
  });

  criterion("elimination identity for 1 <= alpha, beta <= 8", 1, [] {
    for (int a = 1; a <= 8; ++a) {
      for (int b = 1; b <= 8; ++b) {
        const auto id = solve_elimination_identity(a, b);
        if (id.d.empty() || id.d.front() == 0 || !verify_identity(id)) {
          return "alpha=" + std::to_string(a) + " beta=" + std::to_string(b);
        }
      }
    }
    return std::string();
  });

  criterion("recursion closed forms and psi floor for t in 2..6, N <= 12, 100 h-vectors each", 10, [] {
    for (int t = 2; t <= 6; ++t) {
      for (int N = 1; N <= 12; ++N) {
        for (int i = 0; i < 100; ++i) {
          const auto trace = run_iteration(random_config(t, t, t, N, 1000003ULL * t + 7919ULL * N + i));
          for (const auto& c : trace.checks) {
            if (!c.ok) return c.name + " at t=" + std::to_string(t) + " N=" + std::to_string(N) + " rep=" + std::to_string(i);
          }
        }
      }
    }
    return std::string();
  });

  criterion("fast counts equal naive enumeration on 60 random instances with search space <= 1e7", 300, [] {
    std::mt19937_64 rng(20240601);
    auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
    const double cap = 1e7;
    int done = 0;
    while (done < 60) {
      const int kind = int(pick(0, 5));
      const int s = int(pick(1, 4));
      const int k = int(pick(1, 5));
      std::string where;
      bool same = true;
      if (kind == 0 || kind == 1) {
        const long X = pick(1, 40);
        if (reference::search_space_J(s, X) > cap) continue;
        where = (kind == 0 ? "J" : "Weyl moment") + std::string(" s=") + std::to_string(s) + " k=" + std::to_string(k) +
                " X=" + std::to_string(X);
        same = kind == 0 ? count_J(s, k, X).count == reference::naive_J(s, k, X)
                         : count_weyl_moment(s, k, X).count == reference::naive_weyl(s, k, X);
      } else if (kind == 2) {
        const long q = pick(1, 4), b = pick(0, q - 1), X = pick(1, 60);
        const int m = int(pick(1, k));
        if (reference::search_space_shifted(s, X, q) > cap) continue;
        where = "shifted s=" + std::to_string(s) + " q=" + std::to_string(q) + " X=" + std::to_string(X);
        same = count_shifted(s, m, k, X, q, b).count == reference::naive_shifted(s, m, k, X, q, b);
      } else if (kind == 3) {
        MixedMeanParams p{3, 1, 1, 5, 1, 2, pick(1, 5), 0, pick(10, 120)};
        do {
          p.eta = pick(1, 25);
        } while ((p.eta - p.xi) % 5 == 0);
        const auto which = pick(0, 1) == 0 ? MixedKind::I : MixedKind::K;
        if (reference::search_space_mixed(p, which) > cap) continue;
        where = "mixed X=" + std::to_string(p.X);
        same = count_mixed(p, which).count == reference::naive_mixed(p, which);
      } else if (kind == 4) {
        const long p = 5;
        CongruenceInstance inst{3, int(pick(1, 3)), 2, p, 0, 1, 0, pick(1, p), {pick(0, 4), pick(0, 24), pick(0, 124)}};
        if (std::pow(double(ipow(p, 3).get_si()), inst.r) > cap) continue;
        where = "congruence r=" + std::to_string(inst.r);
        same = enumerate_B(inst) == reference::naive_enumerate_B(inst);
      } else {
        const int ss = int(pick(1, 4)), kk = int(pick(2, 4));
        const long n = pick(1, 3000);
        where = "R s=" + std::to_string(ss) + " k=" + std::to_string(kk) + " n=" + std::to_string(n);
        same = count_R(ss, kk, n).count == reference::naive_R(ss, kk, n);
      }
      if (!same) return where;
      ++done;
    }
    return std::string();
  });

  criterion("Waring ratio in [0.5, 2] and |S(100) - S(50)| < 0.05 on 20 sampled n, s=8, k=3", 120, [] {
    std::mt19937_64 rng;
    std::uniform_int_distribution<long> dist(10000, 100000);
    std::vector<long> ns;
    for (int i = 0; i < 20; ++i) ns.push_back(dist(rng));
    const auto rows = waring_compare(8, 3, ns, 50);
    std::string reason;
    for (const auto& row : rows) {
      const double gap = std::abs(singular_series(8, 3, row.n, 100).value - row.series.value);
      if (row.ratio < 0.5 || row.ratio > 2.0) reason += " n=" + std::to_string(row.n) + " ratio=" + std::to_string(row.ratio);
      if (!(gap < 0.05)) reason += " n=" + std::to_string(row.n) + " gap=" + std::to_string(gap);
    }
    return reason.empty() ? reason : reason.substr(1);
  });

  return failures == 0 ? 0 : 1;
}
