#pragma once

#include <cstdint>
#include <compare>

namespace ajt {

// Deterministic primality test: trial division by small primes, then
// Miller-Rabin with the first twelve prime bases (exact below 2^64).
bool is_prime(std::uint64_t n) noexcept;

// A prime p < 2^32, so residue products fit in 64 bits. p = 2 is accepted
// for the pure enumeration and search routines; operations that need an odd
// prime check for themselves.
// All modular arithmetic on canonical residues [0, p) lives here.
class Prime {
 public:
  static constexpr std::uint64_t kMaxValue = (std::uint64_t{1} << 32) - 1;

  // Throws InvalidPrime.
  explicit Prime(std::uint64_t value);

  std::uint64_t value() const noexcept { return value_; }

  std::uint64_t reduce(std::int64_t x) const noexcept {
    auto r = x % static_cast<std::int64_t>(value_);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(value_) : r);
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    auto s = a + b;
    return s >= value_ ? s - value_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + value_ - b;
  }
  std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : value_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept { return (a * b) % value_; }
  std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const noexcept;
  // Inverse of a nonzero residue (Fermat). inv(0) returns 0.
  std::uint64_t inv(std::uint64_t a) const noexcept { return pow(a, value_ - 2); }

  friend bool operator==(const Prime&, const Prime&) = default;

 private:
  std::uint64_t value_;
};

}  // namespace ajt
