#include "vmvt/mvt_count.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <optional>

#include "vmvt/errors.hpp"
#include "vmvt/multiplicity.hpp"

namespace vmvt {

void set_thread_count(int threads) {
  if (threads > 0) {
    omp_set_num_threads(threads);
  } else {
    omp_set_num_threads(omp_get_num_procs());
  }
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

/// One block of variables on a side of the system.
struct Component {
  std::vector<std::vector<BigInt>> features;  // per admissible value
  std::vector<long> labels;                   // residue labels when `distinct`
  int size = 0;
  bool distinct = false;
};

template <class Word>
std::vector<kernel::Key<Word>> as_keys(const std::vector<std::vector<BigInt>>& features) {
  std::vector<kernel::Key<Word>> out;
  out.reserve(features.size());
  for (const auto& f : features) {
    kernel::Key<Word> key;
    key.reserve(f.size());
    for (const auto& v : f) {
      if constexpr (std::is_same_v<Word, std::int64_t>) {
        key.push_back(v.get_si());
      } else {
        key.push_back(v);
      }
    }
    out.push_back(std::move(key));
  }
  return out;
}

void guard(double estimate, std::uint64_t limit, const char* what) {
  if (estimate > double(limit)) throw BudgetExceeded(what, estimate);
}

template <class Word>
struct Partial {
  kernel::Distribution<Word> dist;
  double cap;  // upper bound on distinct keys of this block
};

template <class Word>
Partial<Word> combine(const Partial<Word>& a, const Partial<Word>& b, const Budget& budget,
                      Exec exec, double cap) {
  const double work = double(a.dist.size()) * double(b.dist.size());
  guard(work, budget.max_loop, "convolution work exceeds budget");
  guard(std::min(work, cap), budget.max_keys, "multiplicity map exceeds key budget");
  return {kernel::convolve(a.dist, b.dist, exec), cap};
}

template <class Word>
Partial<Word> build_component(const Component& c, std::size_t dim, const Budget& budget, Exec exec) {
  auto keys = as_keys<Word>(c.features);
  const double domain = double(keys.size());
  if (c.distinct) {
    const double est = std::pow(domain, c.size);
    guard(est, budget.max_loop, "tuple enumeration exceeds budget");
    guard(est, budget.max_keys, "multiplicity map exceeds key budget");
    auto d = kernel::distinct_label_distribution(keys, c.labels, dim, c.size);
    const double cap = double(d.size());
    return {std::move(d), cap};
  }
  const int lo = c.size / 2;
  const int hi = c.size - lo;
  const double half = kernel::multiset_count(keys.size(), hi);
  guard(half, budget.max_loop, "half-tuple enumeration exceeds budget");
  guard(half, budget.max_keys, "half-tuple map exceeds key budget");
  Partial<Word> left{kernel::multiset_distribution(keys, dim, hi), half};
  Partial<Word> right{kernel::multiset_distribution(keys, dim, lo),
                      kernel::multiset_count(keys.size(), lo)};
  return combine(left, right, budget, exec, kernel::multiset_count(keys.size(), c.size));
}

template <class Word>
BigInt count_with(const std::vector<Component>& side, std::size_t dim, const Budget& budget, Exec exec) {
  std::optional<Partial<Word>> acc;
  for (const auto& c : side) {
    auto part = build_component<Word>(c, dim, budget, exec);
    if (!acc) {
      acc = std::move(part);
    } else {
      acc = combine(*acc, part, budget, exec, acc->cap * part.cap);
    }
  }
  return acc ? kernel::sum_of_squares(acc->dist) : BigInt(1);
}

/// Number of pairs of sides with equal summed features, i.e. solutions of the symmetric
/// system "side(x) = side(y)".
BigInt count_symmetric(const std::vector<Component>& side, std::size_t dim, const Budget& budget,
                       Exec exec) {
  // int64 keys when every partial sum is provably within range
  BigInt bound = 0;
  for (std::size_t j = 0; j < dim; ++j) {
    BigInt total = 0;
    for (const auto& c : side) {
      BigInt biggest = 0;
      for (const auto& f : c.features) {
        BigInt a = abs(f[j]);
        if (a > biggest) biggest = a;
      }
      total += biggest * c.size;
    }
    if (total > bound) bound = total;
  }
  if (bound < BigInt(1) << 62) return count_with<std::int64_t>(side, dim, budget, exec);
  return count_with<BigInt>(side, dim, budget, exec);
}

std::vector<BigInt> powers_up_to(const BigInt& x, int k) {
  std::vector<BigInt> out;
  BigInt p = 1;
  for (int j = 1; j <= k; ++j) {
    p *= x;
    out.push_back(p);
  }
  return out;
}

}  // namespace

CountRecord count_J(int s, int k, long X, const Budget& budget, Exec exec) {
  require(s >= 1 && k >= 1 && X >= 1, "count_J: s, k, X >= 1 required");
  auto start = Clock::now();
  Component c;
  c.size = s;
  for (long x = 1; x <= X; ++x) c.features.push_back(powers_up_to(x, k));
  CountRecord rec{"count-j", {{"s", s}, {"k", k}, {"X", X}}, 0, 0};
  rec.count = count_symmetric({c}, std::size_t(k), budget, exec);
  rec.elapsed_ms = ms_since(start);
  return rec;
}

CountRecord count_diagonal(int s, long X) {
  require(s >= 1 && X >= 1, "count_diagonal: s, X >= 1 required");
  auto start = Clock::now();
  // (s!)^2 [z^s] (sum_c z^c/(c!)^2)^X: each multiset with counts c_i contributes its
  // permutation count squared.
  std::vector<mpq_class> base(std::size_t(s) + 1);
  BigInt fact = 1;
  for (int c = 0; c <= s; ++c) {
    if (c > 0) fact *= c;
    base[std::size_t(c)] = mpq_class(1, 1) / mpq_class(fact * fact);
  }
  auto mul = [s](const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
    std::vector<mpq_class> out(std::size_t(s) + 1, mpq_class(0));
    for (int i = 0; i <= s; ++i) {
      if (a[std::size_t(i)] == 0) continue;
      for (int j = 0; i + j <= s; ++j) out[std::size_t(i + j)] += a[std::size_t(i)] * b[std::size_t(j)];
    }
    return out;
  };
  std::vector<mpq_class> result(std::size_t(s) + 1, mpq_class(0));
  result[0] = 1;
  std::vector<mpq_class> power = base;
  for (long e = X; e > 0; e >>= 1) {
    if (e & 1) result = mul(result, power);
    if (e > 1) power = mul(power, power);
  }
  mpq_class total = result[std::size_t(s)] * mpq_class(fact * fact);
  if (total.get_den() != 1) throw InternalError("diagonal count not integral");
  return {"count-diagonal", {{"s", s}, {"X", X}}, total.get_num(), ms_since(start)};
}

CountRecord count_weyl_moment(int s, int k, long X, const Budget& budget, Exec exec) {
  require(s >= 1 && k >= 1 && X >= 1, "count_weyl_moment: s, k, X >= 1 required");
  auto start = Clock::now();
  Component c;
  c.size = s;
  for (long x = 1; x <= X; ++x) c.features.push_back({ipow(x, unsigned(k))});
  CountRecord rec{"weyl-moment", {{"s", s}, {"k", k}, {"X", X}}, 0, 0};
  rec.count = count_symmetric({c}, 1, budget, exec);
  rec.elapsed_ms = ms_since(start);
  return rec;
}

CountRecord count_shifted(int s, int m, int k, long X, long q, long b, const Budget& budget, Exec exec) {
  require(s >= 1 && k >= 1 && X >= 1, "count_shifted: s, k, X >= 1 required");
  require(1 <= m && m <= k, "count_shifted: 1 <= m <= k required");
  require(q >= 1 && 0 <= b && b < q, "count_shifted: q >= 1 and 0 <= b < q required");
  auto start = Clock::now();
  Component c;
  c.size = s;
  for (long x = 0; x <= X / q; ++x) {
    std::vector<BigInt> f{ipow(q * x + b, unsigned(k))};
    auto low = powers_up_to(x, m - 1);
    f.insert(f.end(), low.begin(), low.end());
    c.features.push_back(std::move(f));
  }
  CountRecord rec{"count-shifted",
                  {{"s", s}, {"m", m}, {"k", k}, {"X", X}, {"q", q}, {"b", b}}, 0, 0};
  rec.count = count_symmetric({c}, std::size_t(m), budget, exec);
  rec.elapsed_ms = ms_since(start);
  return rec;
}

void validate(const MixedMeanParams& p, MixedKind which) {
  require(p.k >= 1 && p.r >= 1 && p.t >= 1, "mixed: k, r, t >= 1 required");
  require(is_prime(p.p), "mixed: p must be prime");
  require(p.p > p.k, "mixed: p > k required");
  require(0 <= p.a && p.a < p.b, "mixed: 0 <= a < b required");
  require(p.X >= 1, "mixed: X >= 1 required");
  require(p.b <= 40, "mixed: tower exponent b too large");
  const BigInt pb = ipow(p.p, unsigned(p.b));
  require(1 <= p.eta && BigInt(p.eta) <= pb, "mixed: 1 <= eta <= p^b required");
  if (p.a >= 1) {
    const BigInt pa = ipow(p.p, unsigned(p.a));
    require(1 <= p.xi && BigInt(p.xi) <= pa, "mixed: 1 <= xi <= p^a required");
    require((p.eta - p.xi) % p.p != 0, "mixed: eta must not be congruent to xi mod p");
  } else {
    require(which == MixedKind::K, "mixed: I requires a >= 1");
  }
}

CountRecord count_mixed(const MixedMeanParams& p, MixedKind which, const Budget& budget, Exec exec) {
  validate(p, which);
  auto start = Clock::now();
  const long pa = ipow(p.p, unsigned(p.a)).get_si();
  const long pa1 = ipow(p.p, unsigned(p.a + 1)).get_si();
  const long pb = ipow(p.p, unsigned(p.b)).get_si();
  const long pb1 = ipow(p.p, unsigned(p.b + 1)).get_si();

  Component outer;
  outer.size = p.r;
  outer.distinct = true;
  for (long x = 1; x <= p.X; ++x) {
    if (p.a >= 1) {
      if ((x - p.xi) % pa != 0) continue;
      outer.labels.push_back(x % pa1);
    } else {
      if ((x - p.eta) % p.p == 0) continue;
      outer.labels.push_back(x % p.p);
    }
    outer.features.push_back(powers_up_to(x, p.k));
  }

  std::vector<Component> side{outer};
  if (which == MixedKind::I) {
    Component inner;
    inner.size = p.s();
    for (long x = 1; x <= p.X; ++x) {
      if ((x - p.eta) % pb == 0) inner.features.push_back(powers_up_to(x, p.k));
    }
    side.push_back(std::move(inner));
  } else {
    Component inner;
    inner.size = p.r;
    inner.distinct = true;
    for (long x = 1; x <= p.X; ++x) {
      if ((x - p.eta) % pb != 0) continue;
      inner.features.push_back(powers_up_to(x, p.k));
      inner.labels.push_back(x % pb1);
    }
    for (int l = 0; l < p.t; ++l) side.push_back(inner);
  }

  nlohmann::json params{{"k", p.k}, {"r", p.r}, {"t", p.t}, {"s", p.s()}, {"p", p.p},
                        {"a", p.a}, {"b", p.b}, {"xi", p.xi}, {"eta", p.eta},
                        {"X", p.X}, {"which", which == MixedKind::I ? "I" : "K"}};
  CountRecord rec{"count-mixed", params, 0, 0};
  rec.count = count_symmetric(side, std::size_t(p.k), budget, exec);
  rec.elapsed_ms = ms_since(start);
  return rec;
}

}  // namespace vmvt
