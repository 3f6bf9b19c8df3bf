#include "ajt/matrix.hpp"

#include <string>
#include <utility>

#include "ajt/errors.hpp"
#include "ajt/rng.hpp"

namespace ajt {

std::uint64_t determinant(Prime p, std::size_t n, std::span<const std::uint64_t> row_major) {
  if (n == 0) return 1;
  std::vector<std::uint64_t> a(row_major.begin(), row_major.end());
  auto at = [&](std::size_t i, std::size_t j) -> std::uint64_t& { return a[i * n + j]; };
  bool negate = false;
  std::uint64_t prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && at(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(pivot, j), at(k, j));
      negate = !negate;
    }
    const std::uint64_t prev_inv = p.inv(prev);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto num = p.sub(p.mul(at(i, j), at(k, k)), p.mul(at(i, k), at(k, j)));
        at(i, j) = p.mul(num, prev_inv);
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  auto d = at(n - 1, n - 1);
  return negate ? p.neg(d) : d;
}

FpMatrix::FpMatrix(Prime p, std::size_t n, std::vector<std::uint64_t> row_major)
    : prime_(p), n_(n), entries_(std::move(row_major)) {
  if (n_ == 0) throw InputError("matrix dimension must be at least 1");
  if (entries_.size() != n_ * n_) throw InputError("matrix entry count is not n*n");
  for (auto& e : entries_) e %= p.value();
  det_ = determinant(prime_, n_, entries_);
}

namespace {
std::vector<std::uint64_t> flatten(Prime p, const std::vector<std::vector<std::int64_t>>& rows) {
  const auto n = rows.size();
  std::vector<std::uint64_t> out;
  out.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw InputError("matrix is not square");
    for (auto v : r) out.push_back(p.reduce(v));
  }
  return out;
}
}  // namespace

FpMatrix::FpMatrix(Prime p, const std::vector<std::vector<std::int64_t>>& rows)
    : FpMatrix(p, rows.size(), flatten(p, rows)) {}

FpMatrix FpMatrix::identity(Prime p, std::size_t n) {
  std::vector<std::uint64_t> e(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
  return FpMatrix(p, n, std::move(e));
}

FpMatrix FpMatrix::from_rows(Prime p, const std::vector<FpVector>& rows) {
  const auto n = rows.size();
  std::vector<std::uint64_t> e;
  e.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw InputError("matrix is not square");
    e.insert(e.end(), r.residues().begin(), r.residues().end());
  }
  return FpMatrix(p, n, std::move(e));
}

FpVector FpMatrix::row(std::size_t i) const {
  if (i >= n_) throw IndexOutOfRange("row index out of range");
  return FpVector(prime_, std::vector<std::uint64_t>(entries_.begin() + i * n_,
                                                     entries_.begin() + (i + 1) * n_));
}

FpVector FpMatrix::column(std::size_t j) const {
  if (j >= n_) throw IndexOutOfRange("column index out of range");
  std::vector<std::uint64_t> c(n_);
  for (std::size_t i = 0; i < n_; ++i) c[i] = at(i, j);
  return FpVector(prime_, std::move(c));
}

FpMatrix FpMatrix::transpose() const {
  std::vector<std::uint64_t> t(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t[j * n_ + i] = at(i, j);
  return FpMatrix(prime_, n_, std::move(t));
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  if (o.n_ != n_ || !(o.prime_ == prime_)) throw InputError("matrix shape or field mismatch");
  std::vector<std::uint64_t> r(n_ * n_, 0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const auto aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n_; ++j)
        r[i * n_ + j] = prime_.add(r[i * n_ + j], prime_.mul(aik, o.at(k, j)));
    }
  return FpMatrix(prime_, n_, std::move(r));
}

FpVector FpMatrix::operator*(const FpVector& x) const {
  if (x.size() != n_) throw InputError("vector length mismatch");
  FpVector y(prime_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < n_; ++j) s = prime_.add(s, prime_.mul(at(i, j), x[j]));
    y.set(i, static_cast<std::int64_t>(s));
  }
  return y;
}

FpMatrix FpMatrix::inverse() const {
  if (det_ == 0) throw SingularMatrix("matrix is singular over F_p");
  const auto n = n_;
  const auto w = 2 * n;
  std::vector<std::uint64_t> a(n * w, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * w + j] = at(i, j);
    a[i * w + n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (a[pivot * w + c] == 0) ++pivot;
    if (pivot != c)
      for (std::size_t j = 0; j < w; ++j) std::swap(a[pivot * w + j], a[c * w + j]);
    const auto inv = prime_.inv(a[c * w + c]);
    for (std::size_t j = 0; j < w; ++j) a[c * w + j] = prime_.mul(a[c * w + j], inv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i * w + c] == 0) continue;
      const auto f = a[i * w + c];
      for (std::size_t j = 0; j < w; ++j)
        a[i * w + j] = prime_.sub(a[i * w + j], prime_.mul(f, a[c * w + j]));
    }
  }
  std::vector<std::uint64_t> r(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r[i * n + j] = a[i * w + n + j];
  return FpMatrix(prime_, n, std::move(r));
}

FpMatrix FpMatrix::minor(std::size_t i, std::size_t j) const {
  if (n_ < 2) throw IndexOutOfRange("minor of a 1x1 matrix");
  if (i >= n_ || j >= n_) throw IndexOutOfRange("minor index out of range");
  std::vector<std::uint64_t> r;
  r.reserve((n_ - 1) * (n_ - 1));
  for (std::size_t a = 0; a < n_; ++a) {
    if (a == i) continue;
    for (std::size_t b = 0; b < n_; ++b)
      if (b != j) r.push_back(at(a, b));
  }
  return FpMatrix(prime_, n_ - 1, std::move(r));
}

std::ostream& operator<<(std::ostream& os, const FpMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.dim(); ++i) {
    os << (i ? ", " : "") << '[';
    for (std::size_t j = 0; j < m.dim(); ++j) os << (j ? ", " : "") << m.at(i, j);
    os << ']';
  }
  return os << ']';
}

std::uint64_t count_nonsingular(Prime p, std::size_t n) {
  const auto pn = saturating_pow(p.value(), n);
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const auto factor = pn - saturating_pow(p.value(), i);
    if (pn == UINT64_MAX || (factor != 0 && count > UINT64_MAX / factor)) return UINT64_MAX;
    count *= factor;
  }
  return count;
}

namespace {

// Depth-first row enumeration. Each candidate row is reduced against an
// incremental echelon basis of the rows chosen so far; rows in the span are
// skipped, which leaves exactly the nonsingular matrices.
class RowEnumerator {
 public:
  RowEnumerator(Prime p, std::size_t n, const std::function<bool(const FpMatrix&)>& visit)
      : p_(p), n_(n), row_count_(saturating_pow(p.value(), n)), visit_(visit) {
    entries_.resize(n * n);
  }

  std::uint64_t run() {
    descend(0);
    return visited_;
  }

 private:
  bool descend(std::size_t depth) {
    if (depth == n_) {
      ++visited_;
      return visit_(FpMatrix(p_, n_, entries_));
    }
    std::vector<std::uint64_t> row(n_);
    for (std::uint64_t code = 0; code < row_count_; ++code) {
      auto c = code;
      for (std::size_t j = n_; j-- > 0;) {
        row[j] = c % p_.value();
        c /= p_.value();
      }
      auto reduced = row;
      for (const auto& [pivot, b] : basis_) {
        const auto f = reduced[pivot];
        if (f == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) reduced[j] = p_.sub(reduced[j], p_.mul(f, b[j]));
      }
      std::size_t pivot = 0;
      while (pivot < n_ && reduced[pivot] == 0) ++pivot;
      if (pivot == n_) continue;
      const auto inv = p_.inv(reduced[pivot]);
      for (auto& v : reduced) v = p_.mul(v, inv);
      basis_.emplace_back(pivot, std::move(reduced));
      std::copy(row.begin(), row.end(), entries_.begin() + depth * n_);
      const bool go_on = descend(depth + 1);
      basis_.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  Prime p_;
  std::size_t n_;
  std::uint64_t row_count_;
  const std::function<bool(const FpMatrix&)>& visit_;
  std::vector<std::uint64_t> entries_;
  std::vector<std::pair<std::size_t, std::vector<std::uint64_t>>> basis_;
  std::uint64_t visited_ = 0;
};

}  // namespace

std::uint64_t for_each_nonsingular(Prime p, std::size_t n, const Budget& budget,
                                   const std::function<bool(const FpMatrix&)>& visit) {
  if (n == 0) throw InputError("matrix dimension must be at least 1");
  const auto candidates = saturating_pow(p.value(), n * n);
  if (candidates > budget.max_enumeration) {
    throw BudgetExceeded("enumerating " + std::to_string(p.value()) + "^" +
                         std::to_string(n * n) + " matrices exceeds the enumeration budget");
  }
  return RowEnumerator(p, n, visit).run();
}

std::vector<FpMatrix> enumerate_nonsingular(Prime p, std::size_t n, const Budget& budget) {
  std::vector<FpMatrix> out;
  for_each_nonsingular(p, n, budget, [&](const FpMatrix& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

FpMatrix random_nonsingular(Prime p, std::size_t n, Rng& rng) {
  std::vector<std::uint64_t> e(n * n);
  while (true) {
    for (auto& v : e) v = rng.below(p.value());
    if (determinant(p, n, e) != 0) return FpMatrix(p, n, e);
  }
}

FpMatrix random_nonsingular(Prime p, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_nonsingular(p, n, rng);
}

}  // namespace ajt
