#pragma once

#include <cstdint>

namespace vmvt {

/// Desk-scale limits. Exceeding either raises BudgetExceeded before any allocation.
struct Budget {
  std::uint64_t max_keys = 50'000'000;   // entries in any multiplicity map
  std::uint64_t max_loop = 100'000'000;  // iterations of any enumeration or pairing loop
};

enum class Exec { serial, parallel };

/// Caps the OpenMP worker count; 0 restores the runtime default.
void set_thread_count(int threads);

}  // namespace vmvt
