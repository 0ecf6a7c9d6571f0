#include "vmvt/params.hpp"

#include "vmvt/errors.hpp"

namespace vmvt {

std::string VinogradovParams::violation() const {
  if (k < 2) return "k >= 2 required";
  if (t < 2) return "t >= 2 required";
  if (2 * t < k - 1) return "t >= (k-1)/2 required";
  if (t > k) return "t <= k required";
  if (r < 1 || r > k) return "1 <= r <= k required";
  if (r + t < k) return "r + t >= k required";
  return {};
}

bool VinogradovParams::admissible() const { return violation().empty(); }

void VinogradovParams::validate() const {
  auto why = violation();
  if (!why.empty()) {
    throw InvalidParams("(k=" + std::to_string(k) + ", r=" + std::to_string(r) +
                        ", t=" + std::to_string(t) + "): " + why);
  }
}

}  // namespace vmvt
