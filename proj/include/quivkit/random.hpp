#pragma once

#include <cstdint>
#include <random>

namespace quivkit {

// Seeded generator used by every sampler. The engine is std::mt19937_64,
// whose output sequence is fixed by the standard; bounded draws use plain
// rejection sampling so results do not depend on the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % n;
  }

  // Uniform in [lo, hi].
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool coin() { return (eng_() >> 63U) != 0; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace quivkit
