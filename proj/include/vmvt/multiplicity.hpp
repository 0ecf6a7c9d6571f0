#pragma once

// Multiplicity maps over summed feature vectors. A "side" of a symmetric system is
// described by its distribution: key = summed features of a partial tuple, value = number
// of tuples with that sum. Pairing two equal sides by key (sum of squared multiplicities)
// is the combinatorial form of orthogonality.

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include <omp.h>

#include "vmvt/budget.hpp"
#include "vmvt/errors.hpp"
#include "vmvt/rational.hpp"

namespace vmvt::kernel {

template <class Word>
using Key = std::vector<Word>;

struct KeyHash {
  static std::size_t mix(std::size_t h, std::uint64_t v) {
    v += 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    v ^= v >> 30;
    v *= 0xbf58476d1ce4e5b9ULL;
    v ^= v >> 27;
    return h ^ v;
  }
  std::size_t operator()(const Key<std::int64_t>& key) const {
    std::size_t h = key.size();
    for (auto w : key) h = mix(h, std::uint64_t(w));
    return h;
  }
  std::size_t operator()(const Key<BigInt>& key) const {
    std::size_t h = key.size();
    for (const auto& w : key) {
      const auto* z = w.get_mpz_t();
      h = mix(h, std::uint64_t(z->_mp_size));
      for (int i = 0; i < std::abs(z->_mp_size); ++i) h = mix(h, std::uint64_t(z->_mp_d[i]));
    }
    return h;
  }
};

template <class Word>
using Distribution = std::unordered_map<Key<Word>, std::uint64_t, KeyHash>;

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw InternalError("multiplicity overflow");
  return out;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw InternalError("multiplicity overflow");
  return out;
}

template <class Word>
void add_into(Key<Word>& acc, const Key<Word>& v) {
  for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += v[j];
}

template <class Word>
void sub_from(Key<Word>& acc, const Key<Word>& v) {
  for (std::size_t j = 0; j < acc.size(); ++j) acc[j] -= v[j];
}

/// Number of multisets of the given size from `domain` elements, as a double estimate.
inline double multiset_count(std::size_t domain, int size) {
  double c = 1;
  for (int i = 1; i <= size; ++i) c = c * double(domain + std::size_t(i) - 1) / i;
  return c;
}

/// Distribution of summed features over multisets of `size` elements; each multiset
/// carries its permutation count so the map counts ordered tuples.
template <class Word>
Distribution<Word> multiset_distribution(const std::vector<Key<Word>>& features, std::size_t dim,
                                         int size) {
  Distribution<Word> out;
  Key<Word> acc(dim, Word(0));
  if (size == 0) {
    out.emplace(acc, 1);
    return out;
  }
  if (features.empty()) return out;
  std::uint64_t fact = 1;
  for (int i = 2; i <= size; ++i) fact *= std::uint64_t(i);
  // counts of the current run of equal indices drive the multinomial weight
  std::function<void(std::size_t, int, std::uint64_t, int)> rec =
      [&](std::size_t start, int left, std::uint64_t denom, int run) {
        if (left == 0) {
          auto [it, inserted] = out.try_emplace(acc, 0);
          it->second = checked_add(it->second, fact / denom);
          return;
        }
        for (std::size_t i = start; i < features.size(); ++i) {
          const int r = (i == start && run > 0) ? run + 1 : 1;
          add_into(acc, features[i]);
          rec(i, left - 1, denom * std::uint64_t(r), r);
          sub_from(acc, features[i]);
        }
      };
  // run semantics: `run` is the multiplicity of index `start` already used.
  rec(0, size, 1, 0);
  return out;
}

/// Distribution over ordered tuples whose elements carry pairwise distinct labels.
template <class Word>
Distribution<Word> distinct_label_distribution(const std::vector<Key<Word>>& features,
                                               const std::vector<long>& labels, std::size_t dim,
                                               int size) {
  Distribution<Word> out;
  Key<Word> acc(dim, Word(0));
  std::vector<long> used;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      auto [it, inserted] = out.try_emplace(acc, 0);
      it->second = checked_add(it->second, 1);
      return;
    }
    for (std::size_t i = 0; i < features.size(); ++i) {
      bool clash = false;
      for (long u : used) clash = clash || (u == labels[i]);
      if (clash) continue;
      used.push_back(labels[i]);
      add_into(acc, features[i]);
      rec(left - 1);
      sub_from(acc, features[i]);
      used.pop_back();
    }
  };
  rec(size);
  return out;
}

template <class Word>
void accumulate(Distribution<Word>& out, const Key<Word>& ka, std::uint64_t ca,
                const Distribution<Word>& b, Key<Word>& scratch) {
  for (const auto& [kb, cb] : b) {
    for (std::size_t j = 0; j < ka.size(); ++j) scratch[j] = ka[j] + kb[j];
    auto [it, inserted] = out.try_emplace(scratch, 0);
    it->second = checked_add(it->second, checked_mul(ca, cb));
  }
}

/// Serial reference convolution: out[ka + kb] += a[ka] * b[kb].
template <class Word>
Distribution<Word> convolve_serial(const Distribution<Word>& a, const Distribution<Word>& b) {
  Distribution<Word> out;
  if (a.empty() || b.empty()) return out;
  Key<Word> scratch(a.begin()->first.size());
  for (const auto& [ka, ca] : a) accumulate(out, ka, ca, b, scratch);
  return out;
}

/// OpenMP convolution: `a` is partitioned across threads, per-thread maps are merged by
/// addition, so the result does not depend on the partition.
template <class Word>
Distribution<Word> convolve_parallel(const Distribution<Word>& a, const Distribution<Word>& b) {
  Distribution<Word> out;
  if (a.empty() || b.empty()) return out;
  std::vector<const typename Distribution<Word>::value_type*> items;
  items.reserve(a.size());
  for (const auto& e : a) items.push_back(&e);
  const std::size_t dim = a.begin()->first.size();
  const long n = long(items.size());
#pragma omp parallel
  {
    Distribution<Word> local;
    Key<Word> scratch(dim);
#pragma omp for schedule(dynamic, 64) nowait
    for (long i = 0; i < n; ++i) accumulate(local, items[std::size_t(i)]->first, items[std::size_t(i)]->second, b, scratch);
#pragma omp critical(vmvt_convolve_merge)
    {
      if (out.empty()) {
        out.swap(local);
      } else {
        for (auto& [k, c] : local) {
          auto [it, inserted] = out.try_emplace(k, 0);
          it->second = checked_add(it->second, c);
        }
      }
    }
  }
  return out;
}

template <class Word>
Distribution<Word> convolve(const Distribution<Word>& a, const Distribution<Word>& b, Exec exec) {
  return exec == Exec::parallel ? convolve_parallel(a, b) : convolve_serial(a, b);
}

/// Sum over keys of m(key)^2: the number of pairs of tuples on the two sides with equal sums.
template <class Word>
BigInt sum_of_squares(const Distribution<Word>& d) {
  BigInt acc = 0;
  mpz_t tmp;
  mpz_init(tmp);
  for (const auto& [k, c] : d) {
    mpz_set_ui(tmp, c);
    mpz_addmul_ui(acc.get_mpz_t(), tmp, c);
  }
  mpz_clear(tmp);
  return acc;
}

/// Sum over keys of a(key) * b(key).
template <class Word>
BigInt pair_count(const Distribution<Word>& a, const Distribution<Word>& b) {
  BigInt acc = 0;
  mpz_t tmp;
  mpz_init(tmp);
  for (const auto& [k, c] : a) {
    auto it = b.find(k);
    if (it == b.end()) continue;
    mpz_set_ui(tmp, c);
    mpz_addmul_ui(acc.get_mpz_t(), tmp, it->second);
  }
  mpz_clear(tmp);
  return acc;
}

}  // namespace vmvt::kernel
