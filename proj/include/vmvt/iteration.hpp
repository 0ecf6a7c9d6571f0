#pragma once

// Exact replay of the efficient-congruencing recursion
//
//   a_{n+1} = b_n,  b_{n+1} = t b_n + h_n,  psi_{n+1} = t psi_n + (t-1) b_n,
//   c_{n+1} = t(c_n + 1),  gamma_{n+1} = t gamma_n + (4/3) s h_n - s(b_n - t a_n),
//
// started from a_0 = 0, b_0 = 1 + h_{-1}, psi_0 = 0, c_0 = 1, gamma_0 = (4/3) s h_{-1},
// together with the bookkeeping inequalities the argument relies on.

#include <cstdint>
#include <string>
#include <vector>

#include "vmvt/rational.hpp"

namespace vmvt {

struct IterationConfig {
  int k = 0;
  int r = 0;
  int t = 0;
  int N = 0;
  int h_minus1 = 0;      // in 0..3
  std::vector<BigInt> h;  // h_0 .. h_{N-1}, 0 <= h_n <= 15(t-1) b_n

  long s() const { return long(r) * t; }
};

struct IterationState {
  int n = 0;
  BigInt a;
  BigInt b;
  BigInt h;  // h_n; zero in the final row
  BigInt c;
  Rational gamma;
  Rational psi;
};

struct CheckOutcome {
  std::string name;
  bool ok = true;
  int first_failure = -1;  // first n that failed
};

struct IterationTrace {
  IterationConfig config;
  std::vector<IterationState> states;  // n = 0..N
  std::vector<CheckOutcome> checks;
  bool all_ok() const;
};

/// Throws InvalidParams on inadmissible (k,r,t), N < 1, h_{-1} outside 0..3, a wrong
/// number of h values, or h_n outside its range.
IterationTrace run_iteration(const IterationConfig& config);

/// h_{-1} uniform in 0..3, then h_n uniform in [0, 15(t-1) b_n).
IterationConfig random_config(int k, int r, int t, int N, std::uint64_t seed);

/// h_{-1} = 0 and every h_n = 0.
IterationConfig zero_config(int k, int r, int t, int N);

struct ThetaDelta {
  Rational theta;         // (16t)^{-N-1}
  Rational delta;         // theta / (1000 N t^N)
  Rational b_window;      // (32 t theta)^{-1}
  Rational c_window;      // (2 delta)^{-1} theta
  BigInt b_final_cap;     // 4 (16t)^N
  Rational b_final_window;  // (2 theta)^{-1}
  BigInt c_final_cap;     // 3 t^N
  bool ok = true;         // b_final_cap <= b_final_window and c_final_cap <= c_window
};

ThetaDelta theta_delta(int t, int N);

struct LambdaCap {
  Rational exact;   // (s t^N + 1) / (N (t-1) t^{N-1})
  Rational simple;  // 3s / N
  bool ok = true;   // exact <= simple
};

LambdaCap lambda_cap(long s, int t, int N);

}  // namespace vmvt
