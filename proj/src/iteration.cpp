#include "vmvt/iteration.hpp"

#include <gmpxx.h>

#include "vmvt/errors.hpp"
#include "vmvt/params.hpp"

namespace vmvt {

bool IterationTrace::all_ok() const {
  for (const auto& c : checks) {
    if (!c.ok) return false;
  }
  return true;
}

ThetaDelta theta_delta(int t, int N) {
  require(t >= 2 && N >= 1, "theta_delta: t >= 2 and N >= 1 required");
  ThetaDelta out;
  const BigInt base = ipow(BigInt(16 * t), (unsigned long)(N + 1));
  const BigInt tN = ipow(BigInt(t), (unsigned long)N);
  out.theta = Rational(BigInt(1), base);
  out.delta = out.theta / Rational(BigInt(1000L * N) * tN);
  out.b_window = Rational(1) / (Rational(32L * t) * out.theta);
  out.c_window = out.theta / (Rational(2) * out.delta);
  out.b_final_cap = 4 * ipow(BigInt(16 * t), (unsigned long)N);
  out.b_final_window = Rational(1) / (Rational(2) * out.theta);
  out.c_final_cap = 3 * tN;
  out.ok = Rational(out.b_final_cap) <= out.b_final_window && Rational(out.c_final_cap) <= out.c_window &&
           out.delta < out.theta;
  return out;
}

LambdaCap lambda_cap(long s, int t, int N) {
  require(s >= 1 && t >= 2 && N >= 1, "lambda_cap: s >= 1, t >= 2, N >= 1 required");
  LambdaCap out;
  const BigInt tN = ipow(BigInt(t), (unsigned long)N);
  const BigInt tN1 = ipow(BigInt(t), (unsigned long)(N - 1));
  out.exact = Rational(s * tN + 1, BigInt(N) * (t - 1) * tN1);
  out.simple = Rational(3 * s, long(N));
  out.ok = out.exact <= out.simple;
  return out;
}

namespace {

void validate_shape(const IterationConfig& c) {
  VinogradovParams{c.k, c.r, c.t}.validate();
  require(c.N >= 1, "iteration: N >= 1 required");
  require(0 <= c.h_minus1 && c.h_minus1 <= 3, "iteration: h_{-1} must lie in 0..3");
  require(int(c.h.size()) == c.N, "iteration: exactly N values h_0..h_{N-1} required");
}

void fail(CheckOutcome& check, int n) {
  if (check.ok) check.first_failure = n;
  check.ok = false;
}

}  // namespace

IterationTrace run_iteration(const IterationConfig& config) {
  validate_shape(config);
  const long s = config.s();
  const int t = config.t;
  const Rational four_thirds_s(BigInt(4 * s), BigInt(3));

  IterationTrace trace;
  trace.config = config;
  IterationState st;
  st.n = 0;
  st.a = 0;
  st.b = 1 + config.h_minus1;
  st.c = 1;
  st.psi = 0;
  st.gamma = four_thirds_s * Rational(config.h_minus1);
  for (int n = 0; n < config.N; ++n) {
    const BigInt& hn = config.h[std::size_t(n)];
    require(hn >= 0 && hn <= 15 * (t - 1) * st.b, "iteration: h_" + std::to_string(n) + " out of range");
    st.h = hn;
    trace.states.push_back(st);
    IterationState next;
    next.n = n + 1;
    next.a = st.b;
    next.b = t * st.b + hn;
    next.psi = Rational(t) * st.psi + Rational((t - 1) * st.b);
    next.c = t * (st.c + 1);
    next.gamma = Rational(t) * st.gamma + four_thirds_s * Rational(hn) - Rational(s * (st.b - t * st.a));
    st = std::move(next);
  }
  st.h = 0;
  trace.states.push_back(st);

  const ThetaDelta td = theta_delta(t, config.N);
  CheckOutcome window{"window", true, -1};
  CheckOutcome c_closed{"c-closed-form", true, -1};
  CheckOutcome gamma_closed{"gamma-closed-form", true, -1};
  CheckOutcome b_growth{"b-growth", true, -1};
  CheckOutcome gamma_lower{"gamma-lower", true, -1};
  CheckOutcome psi_lower{"psi-lower", true, -1};
  CheckOutcome final_caps{"final-caps", true, -1};

  const auto& S = trace.states;
  for (const auto& row : S) {
    const int n = row.n;
    const BigInt tn = ipow(BigInt(t), (unsigned long)n);
    if (n < config.N) {
      const bool ok = 0 <= row.a && row.a < row.b && Rational(row.b) <= td.b_window && row.psi >= Rational(0) &&
                      row.gamma >= Rational(-BigInt(config.r) * row.b) && 0 <= row.c &&
                      Rational(row.c) <= td.c_window;
      if (!ok) fail(window, n);
    }
    const BigInt c_form = tn + t * (tn - 1) / (t - 1);
    if (row.c != c_form || row.c > 3 * tn) fail(c_closed, n);
    if (n >= 1) {
      const BigInt& b_prev = S[std::size_t(n - 1)].b;
      const Rational g_form = four_thirds_s * Rational(row.b) - Rational(s * b_prev) - four_thirds_s * Rational(tn);
      if (row.gamma != g_form) fail(gamma_closed, n);
      if (row.b < t * b_prev || row.b < tn) fail(b_growth, n);
      if (row.gamma < Rational(-s * b_prev) || Rational(-s * b_prev) < Rational(-BigInt(config.r) * row.b)) {
        fail(gamma_lower, n);
      }
    }
  }
  const auto& last = S.back();
  const BigInt psi_floor = BigInt(config.N) * (t - 1) * ipow(BigInt(t), (unsigned long)(config.N - 1));
  if (last.psi < Rational(psi_floor)) fail(psi_lower, config.N);
  if (last.b > td.b_final_cap || !td.ok || last.c > td.c_final_cap) fail(final_caps, config.N);

  trace.checks = {window, c_closed, gamma_closed, b_growth, gamma_lower, psi_lower, final_caps};
  return trace;
}

IterationConfig random_config(int k, int r, int t, int N, std::uint64_t seed) {
  IterationConfig c{k, r, t, N, 0, {}};
  VinogradovParams{k, r, t}.validate();
  require(N >= 1, "iteration: N >= 1 required");
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(static_cast<unsigned long>(seed));
  c.h_minus1 = int(BigInt(rng.get_z_range(4)).get_si());
  BigInt b = 1 + c.h_minus1;
  for (int n = 0; n < N; ++n) {
    BigInt h = rng.get_z_range(15 * (t - 1) * b);
    c.h.push_back(h);
    b = t * b + h;
  }
  return c;
}

IterationConfig zero_config(int k, int r, int t, int N) {
  return IterationConfig{k, r, t, N, 0, std::vector<BigInt>(std::size_t(N), BigInt(0))};
}

}  // namespace vmvt
