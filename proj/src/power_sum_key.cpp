#include "vmvt/power_sum_key.hpp"

#include <cstdint>

#include "vmvt/errors.hpp"

namespace vmvt {

namespace {

void put_u32(std::string& out, std::uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(char((v >> shift) & 0xff));
}

std::uint32_t get_u32(const std::string& in, std::size_t& pos) {
  if (pos + 4 > in.size()) throw InvalidParams("truncated power-sum key");
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v = (v << 8) | std::uint8_t(in[pos++]);
  return v;
}

}  // namespace

PowerSumKey PowerSumKey::of(const std::vector<long>& tuple, int k) {
  std::vector<BigInt> sums(std::size_t(k), BigInt(0));
  for (long x : tuple) {
    BigInt p = 1;
    for (int j = 0; j < k; ++j) {
      p *= x;
      sums[std::size_t(j)] += p;
    }
  }
  return PowerSumKey(std::move(sums));
}

std::string PowerSumKey::encode() const {
  std::string out;
  put_u32(out, std::uint32_t(sums_.size()));
  for (const auto& v : sums_) {
    std::size_t count = 0;
    std::string mag((mpz_sizeinbase(v.get_mpz_t(), 256) + 1), '\0');
    mpz_export(mag.data(), &count, 1, 1, 1, 0, v.get_mpz_t());
    mag.resize(count);
    put_u32(out, std::uint32_t(count + 1));
    out.push_back(v < 0 ? '\1' : '\0');
    out += mag;
  }
  return out;
}

PowerSumKey PowerSumKey::decode(const std::string& bytes) {
  std::size_t pos = 0;
  const std::uint32_t n = get_u32(bytes, pos);
  std::vector<BigInt> sums;
  sums.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t len = get_u32(bytes, pos);
    if (len == 0 || pos + len > bytes.size()) throw InvalidParams("malformed power-sum key");
    const bool negative = bytes[pos] != '\0';
    BigInt v;
    mpz_import(v.get_mpz_t(), len - 1, 1, 1, 1, 0, bytes.data() + pos + 1);
    if (negative) v = -v;
    sums.push_back(v);
    pos += len;
  }
  if (pos != bytes.size()) throw InvalidParams("trailing bytes in power-sum key");
  return PowerSumKey(std::move(sums));
}

}  // namespace vmvt
