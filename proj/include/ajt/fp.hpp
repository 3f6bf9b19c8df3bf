#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "ajt/prime.hpp"

namespace ajt {

// Element of F_p carrying its modulus.
class FpScalar {
 public:
  FpScalar(Prime p, std::int64_t value) : prime_(p), value_(p.reduce(value)) {}
  static FpScalar from_residue(Prime p, std::uint64_t residue);

  std::uint64_t value() const noexcept { return value_; }
  Prime prime() const noexcept { return prime_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FpScalar operator+(const FpScalar& o) const;
  FpScalar operator-(const FpScalar& o) const;
  FpScalar operator*(const FpScalar& o) const;
  FpScalar operator-() const;
  // Throws std::domain_error on zero.
  FpScalar inverse() const;

  friend bool operator==(const FpScalar&, const FpScalar&) = default;

 private:
  Prime prime_;
  std::uint64_t value_;
};

std::ostream& operator<<(std::ostream& os, const FpScalar& x);

// Vector in F_p^n with canonical residues.
class FpVector {
 public:
  FpVector(Prime p, std::size_t n) : prime_(p), entries_(n, 0) {}
  FpVector(Prime p, std::vector<std::uint64_t> residues);
  FpVector(Prime p, std::initializer_list<std::int64_t> values);

  static FpVector unit(Prime p, std::size_t n, std::size_t i);

  Prime prime() const noexcept { return prime_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::uint64_t operator[](std::size_t i) const { return entries_[i]; }
  void set(std::size_t i, std::int64_t value) { entries_[i] = prime_.reduce(value); }
  std::span<const std::uint64_t> residues() const noexcept { return entries_; }

  bool is_zero() const noexcept;
  bool is_nowhere_zero() const noexcept;

  FpVector operator+(const FpVector& o) const;
  FpVector operator-(const FpVector& o) const;
  FpVector scaled(std::uint64_t c) const;
  std::uint64_t dot(const FpVector& o) const;

  friend bool operator==(const FpVector&, const FpVector&) = default;

 private:
  Prime prime_;
  std::vector<std::uint64_t> entries_;
};

std::ostream& operator<<(std::ostream& os, const FpVector& v);

}  // namespace ajt
