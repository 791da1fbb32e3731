#pragma once

#include <cstdint>

namespace coalglab {

// Work caps for enumerative scans. Exceeding a budget is an error, never a
// silent truncation. COALGLAB_BUDGET overrides the default work cap.
struct Budget {
  std::uint64_t work = 2'000'000;
  std::uint64_t seed = 0;

  static Budget from_env();
  Budget with_seed(std::uint64_t s) const {
    Budget b = *this;
    b.seed = s;
    return b;
  }
};

// deterministic xorshift generator used wherever sampling is needed
struct DetRng {
  std::uint64_t s;
  explicit DetRng(std::uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
};

}  // namespace coalglab
