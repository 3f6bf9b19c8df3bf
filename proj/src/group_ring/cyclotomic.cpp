#include "ajt/cyclotomic.hpp"

#include "ajt/errors.hpp"

namespace ajt {

CyclotomicInt CyclotomicInt::integer(Prime p, const BigInt& v) {
  CyclotomicInt z(p);
  z.c_[0] = v;
  return z;
}

CyclotomicInt CyclotomicInt::root_power(Prime p, std::int64_t m) {
  return integer(p, 1).times_root(p.reduce(m));
}

bool CyclotomicInt::is_zero() const noexcept {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

void CyclotomicInt::assign_folded(std::vector<BigInt>& full) {
  // w^{p-1} = -(1 + w + ... + w^{p-2}).
  const auto top = full.back();
  for (std::size_t i = 0; i + 1 < full.size(); ++i) c_[i] = full[i] - top;
}

CyclotomicInt CyclotomicInt::operator+(const CyclotomicInt& o) const {
  auto r = *this;
  return r += o;
}

CyclotomicInt CyclotomicInt::operator-(const CyclotomicInt& o) const {
  auto r = *this;
  return r -= o;
}

CyclotomicInt CyclotomicInt::operator-() const {
  CyclotomicInt r(p_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
  return r;
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o) {
  if (!(o.p_ == p_)) throw RingMismatch("cyclotomic integers over different primes");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& o) {
  if (!(o.p_ == p_)) throw RingMismatch("cyclotomic integers over different primes");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& o) const {
  if (!(o.p_ == p_)) throw RingMismatch("cyclotomic integers over different primes");
  const auto q = p_.value();
  std::vector<BigInt> full(q);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) full[(i + j) % q] += c_[i] * o.c_[j];
  }
  CyclotomicInt r(p_);
  r.assign_folded(full);
  return r;
}

CyclotomicInt CyclotomicInt::times_root(std::uint64_t m) const {
  const auto q = p_.value();
  m %= q;
  std::vector<BigInt> full(q);
  for (std::size_t i = 0; i < c_.size(); ++i) full[(i + m) % q] = c_[i];
  CyclotomicInt r(p_);
  r.assign_folded(full);
  return r;
}

void CyclotomicInt::sub_root_multiple(const CyclotomicInt& o, std::uint64_t m) {
  if (&o == this) {
    const auto copy = o;
    sub_root_multiple(copy, m);
    return;
  }
  const auto q = p_.value();
  m %= q;
  if (m == 0) {
    *this -= o;
    return;
  }
  // o_i w^{i+m}: the index reaching p-1 spreads -o_i over every coefficient.
  const std::size_t wrap = q - 1 - m;
  const BigInt top = o.c_[wrap];
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i == wrap) continue;
    c_[(i + m) % q] -= o.c_[i];
  }
  if (!top.is_zero())
    for (auto& c : c_) c += top;
}

std::ostream& operator<<(std::ostream& os, const CyclotomicInt& z) {
  os << '[';
  for (std::size_t i = 0; i < z.coeffs().size(); ++i) os << (i ? "," : "") << z.coeffs()[i];
  return os << ']';
}

}  // namespace ajt
