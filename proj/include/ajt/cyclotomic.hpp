#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <ostream>
#include <vector>

#include "ajt/prime.hpp"

namespace ajt {

using BigInt = boost::multiprecision::cpp_int;

// Element of Z[omega] = Z[x]/Phi_p(x), stored as c_0 + c_1 w + ... + c_{p-2} w^{p-2}.
// Kept in that canonical form after every operation, so equality and the zero
// test are coefficient-wise.
class CyclotomicInt {
 public:
  explicit CyclotomicInt(Prime p) : p_(p), c_(p.value() - 1) {}
  static CyclotomicInt integer(Prime p, const BigInt& v);
  // omega^m for any integer m.
  static CyclotomicInt root_power(Prime p, std::int64_t m);

  Prime prime() const noexcept { return p_; }
  const std::vector<BigInt>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept;

  CyclotomicInt operator+(const CyclotomicInt& o) const;
  CyclotomicInt operator-(const CyclotomicInt& o) const;
  CyclotomicInt operator-() const;
  CyclotomicInt operator*(const CyclotomicInt& o) const;
  CyclotomicInt& operator+=(const CyclotomicInt& o);
  CyclotomicInt& operator-=(const CyclotomicInt& o);

  // this * omega^m, m taken mod p.
  CyclotomicInt times_root(std::uint64_t m) const;
  // this -= omega^m * o.
  void sub_root_multiple(const CyclotomicInt& o, std::uint64_t m);

  friend bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) {
    return a.p_ == b.p_ && a.c_ == b.c_;
  }

 private:
  // Folds a length-p vector (coefficients of 1..w^{p-1}) back to canonical form.
  void assign_folded(std::vector<BigInt>& full);

  Prime p_;
  std::vector<BigInt> c_;
};

std::ostream& operator<<(std::ostream& os, const CyclotomicInt& z);

}  // namespace ajt
