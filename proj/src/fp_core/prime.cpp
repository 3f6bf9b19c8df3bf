#include "ajt/prime.hpp"

#include <array>
#include <string>

#include "ajt/errors.hpp"

namespace ajt {
namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = mulmod64(r, b, m);
    b = mulmod64(b, b, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin_round(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
  std::uint64_t x = powmod64(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mulmod64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  // Trial division up to 2^16 settles everything below 2^32 on its own.
  for (std::uint64_t d = 2; d < (1u << 16) && d * d <= n; ++d) {
    if (n % d == 0) return n == d;
  }
  if (n < (std::uint64_t{1} << 32)) return true;

  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto a : bases) {
    if (!miller_rabin_round(n, a, d, s)) return false;
  }
  return true;
}

Prime::Prime(std::uint64_t value) : value_(value) {
  if (value > kMaxValue || !is_prime(value)) {
    throw InvalidPrime("not a prime below 2^32: " + std::to_string(value));
  }
}

std::uint64_t Prime::pow(std::uint64_t base, std::uint64_t exp) const noexcept {
  std::uint64_t r = 1;
  base %= value_;
  while (exp > 0) {
    if (exp & 1) r = mul(r, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return r;
}

}  // namespace ajt
