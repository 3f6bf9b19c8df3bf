#include "ajt/fp.hpp"

#include <algorithm>
#include <stdexcept>

#include "ajt/errors.hpp"

namespace ajt {

FpScalar FpScalar::from_residue(Prime p, std::uint64_t residue) {
  return FpScalar(p, static_cast<std::int64_t>(residue % p.value()));
}

FpScalar FpScalar::operator+(const FpScalar& o) const {
  return from_residue(prime_, prime_.add(value_, o.value_));
}
FpScalar FpScalar::operator-(const FpScalar& o) const {
  return from_residue(prime_, prime_.sub(value_, o.value_));
}
FpScalar FpScalar::operator*(const FpScalar& o) const {
  return from_residue(prime_, prime_.mul(value_, o.value_));
}
FpScalar FpScalar::operator-() const { return from_residue(prime_, prime_.neg(value_)); }

FpScalar FpScalar::inverse() const {
  if (value_ == 0) throw std::domain_error("inverse of zero in F_p");
  return from_residue(prime_, prime_.inv(value_));
}

std::ostream& operator<<(std::ostream& os, const FpScalar& x) { return os << x.value(); }

FpVector::FpVector(Prime p, std::vector<std::uint64_t> residues)
    : prime_(p), entries_(std::move(residues)) {
  for (auto& e : entries_) e %= p.value();
}

FpVector::FpVector(Prime p, std::initializer_list<std::int64_t> values) : prime_(p) {
  entries_.reserve(values.size());
  for (auto v : values) entries_.push_back(p.reduce(v));
}

FpVector FpVector::unit(Prime p, std::size_t n, std::size_t i) {
  FpVector v(p, n);
  v.entries_.at(i) = 1;
  return v;
}

bool FpVector::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](auto e) { return e == 0; });
}

bool FpVector::is_nowhere_zero() const noexcept {
  return std::none_of(entries_.begin(), entries_.end(), [](auto e) { return e == 0; });
}

FpVector FpVector::operator+(const FpVector& o) const {
  if (o.size() != size()) throw InputError("vector length mismatch");
  FpVector r(prime_, size());
  for (std::size_t i = 0; i < size(); ++i) r.entries_[i] = prime_.add(entries_[i], o.entries_[i]);
  return r;
}

FpVector FpVector::operator-(const FpVector& o) const {
  if (o.size() != size()) throw InputError("vector length mismatch");
  FpVector r(prime_, size());
  for (std::size_t i = 0; i < size(); ++i) r.entries_[i] = prime_.sub(entries_[i], o.entries_[i]);
  return r;
}

FpVector FpVector::scaled(std::uint64_t c) const {
  FpVector r(prime_, size());
  c %= prime_.value();
  for (std::size_t i = 0; i < size(); ++i) r.entries_[i] = prime_.mul(entries_[i], c);
  return r;
}

std::uint64_t FpVector::dot(const FpVector& o) const {
  if (o.size() != size()) throw InputError("vector length mismatch");
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < size(); ++i) s = prime_.add(s, prime_.mul(entries_[i], o.entries_[i]));
  return s;
}

std::ostream& operator<<(std::ostream& os, const FpVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  return os << ')';
}

}  // namespace ajt
