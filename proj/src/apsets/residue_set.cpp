#include <bit>

#include "ajt/apsets.hpp"
#include "ajt/errors.hpp"

namespace ajt {

ResidueSet::ResidueSet(Prime p) : prime_(p), words_((p.value() + 63) / 64, 0) {}

ResidueSet::ResidueSet(Prime p, std::initializer_list<std::int64_t> values) : ResidueSet(p) {
  for (auto v : values) insert(p.reduce(v));
}

ResidueSet::ResidueSet(Prime p, const std::vector<std::int64_t>& values) : ResidueSet(p) {
  for (auto v : values) insert(p.reduce(v));
}

ResidueSet ResidueSet::full(Prime p) {
  ResidueSet s(p);
  for (std::uint64_t r = 0; r < p.value(); ++r) s.insert(r);
  return s;
}

void ResidueSet::insert(std::uint64_t r) {
  if (r >= prime_.value()) throw IndexOutOfRange("residue out of range");
  auto& w = words_[r >> 6];
  const auto bit = std::uint64_t{1} << (r & 63);
  if (!(w & bit)) {
    w |= bit;
    ++count_;
  }
}

void ResidueSet::erase(std::uint64_t r) {
  if (r >= prime_.value()) throw IndexOutOfRange("residue out of range");
  auto& w = words_[r >> 6];
  const auto bit = std::uint64_t{1} << (r & 63);
  if (w & bit) {
    w &= ~bit;
    --count_;
  }
}

std::uint64_t ResidueSet::next_member(std::uint64_t from) const noexcept {
  const auto p = prime_.value();
  if (from >= p) return p;
  auto wi = from >> 6;
  auto w = words_[wi] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (w) {
      auto r = (wi << 6) + static_cast<std::uint64_t>(std::countr_zero(w));
      return r < p ? r : p;
    }
    if (++wi >= words_.size()) return p;
    w = words_[wi];
  }
}

std::vector<std::uint64_t> ResidueSet::elements() const {
  std::vector<std::uint64_t> out;
  out.reserve(count_);
  for (auto r = next_member(0); r < prime_.value(); r = next_member(r + 1)) out.push_back(r);
  return out;
}

ResidueSet ResidueSet::shifted(std::int64_t c) const {
  ResidueSet s(prime_);
  const auto cr = prime_.reduce(c);
  for (auto r : elements()) s.insert(prime_.add(r, cr));
  return s;
}

ResidueSet ResidueSet::dilated(std::uint64_t lambda) const {
  ResidueSet s(prime_);
  const auto l = lambda % prime_.value();
  for (auto r : elements()) s.insert(prime_.mul(r, l));
  return s;
}

bool ResidueSet::is_subset_of(const ResidueSet& o) const {
  if (!(o.prime_ == prime_)) return false;
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

bool ResidueSet::intersects(const ResidueSet& o) const {
  if (!(o.prime_ == prime_)) throw InputError("residue sets over different primes");
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

ResidueSet ResidueSet::united(const ResidueSet& o) const {
  if (!(o.prime_ == prime_)) throw InputError("residue sets over different primes");
  ResidueSet s(prime_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    s.words_[i] = words_[i] | o.words_[i];
    s.count_ += static_cast<std::size_t>(std::popcount(s.words_[i]));
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const ResidueSet& s) {
  os << '{';
  bool first = true;
  for (auto r : s.elements()) {
    os << (first ? "" : ", ") << r;
    first = false;
  }
  return os << '}';
}

}  // namespace ajt
