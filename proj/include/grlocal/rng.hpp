#ifndef GRLOCAL_RNG_HPP
#define GRLOCAL_RNG_HPP

#include <cstdint>
#include <random>

namespace grlocal {

/// Seed-deterministic RNG. mt19937_64 output is fixed by the standard, and the
/// bounded draws below avoid std distributions, whose streams vary across
/// library implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform in [0, bound); returns 0 when bound == 0.
  std::uint64_t next(std::uint64_t bound) {
    if (bound == 0) return 0;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % bound;
  }

  long long next_int(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(next(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool next_bool() { return next(2) == 1; }

private:
  std::mt19937_64 eng_;
};

}  // namespace grlocal

#endif
