#pragma once

#include <cstdint>
#include <random>

namespace ajt {

// The project's reproducible generator: std::mt19937_64 seeded with the
// user seed, with bounded draws done by rejection so results do not depend
// on the standard library's distribution implementations.
class Rng {
 public:
  static constexpr const char* kName = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  // Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

  // Uniform nonzero residue mod p.
  std::uint64_t nonzero_residue(std::uint64_t p) { return 1 + below(p - 1); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ajt
