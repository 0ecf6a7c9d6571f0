#pragma once

#include <string>

namespace vmvt {

/// Degree k and the congruencing parameters (r, t).
struct VinogradovParams {
  int k = 0;
  int r = 0;
  int t = 0;

  int s() const { return r * t; }

  /// Admissibility: k >= 2, max{2, (k-1)/2} <= t <= k, 1 <= r <= k, r + t >= k.
  /// The half is compared as 2t >= k - 1, never through a ceiling.
  bool admissible() const;
  /// Empty when admissible, otherwise the first failed condition.
  std::string violation() const;
  /// Throws InvalidParams when not admissible.
  void validate() const;

  friend bool operator==(const VinogradovParams&, const VinogradovParams&) = default;
};

}  // namespace vmvt
