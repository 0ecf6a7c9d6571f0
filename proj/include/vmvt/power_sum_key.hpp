#pragma once

#include <string>
#include <vector>

#include "vmvt/rational.hpp"

namespace vmvt {

/// Vector of power sums (sum x_i, sum x_i^2, ..., sum x_i^k) with a canonical byte form:
/// a 4-byte big-endian component count, then per component a 4-byte big-endian length,
/// a sign byte and the big-endian magnitude. Byte-identical encodings iff equal vectors.
class PowerSumKey {
 public:
  PowerSumKey() = default;
  explicit PowerSumKey(std::vector<BigInt> sums) : sums_(std::move(sums)) {}

  /// Power sums of the given tuple up to degree k.
  static PowerSumKey of(const std::vector<long>& tuple, int k);

  const std::vector<BigInt>& sums() const { return sums_; }
  std::string encode() const;
  static PowerSumKey decode(const std::string& bytes);

  friend bool operator==(const PowerSumKey& a, const PowerSumKey& b) { return a.sums_ == b.sums_; }

 private:
  std::vector<BigInt> sums_;
};

}  // namespace vmvt
