#include "ajt/poly.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "ajt/errors.hpp"
#include "ajt/group_ring.hpp"

namespace ajt {

std::uint64_t reduce_exponent(std::uint64_t e, std::uint64_t p) noexcept {
  if (e == 0) return 0;
  return (e - 1) % (p - 1) + 1;
}

std::uint64_t power_sum(Prime p, std::uint64_t k) {
  std::uint64_t s = 0;
  for (std::uint64_t x = 0; x < p.value(); ++x) s = p.add(s, k == 0 ? 1 : p.pow(x, k));
  return s;
}

ReducedPoly::ReducedPoly(Prime p, std::size_t n) : p_(p), n_(n) {
  if (n == 0 || saturating_pow(p.value(), n) == std::numeric_limits<std::uint64_t>::max())
    throw InputError("variable count out of range");
}

ReducedPoly ReducedPoly::constant(Prime p, std::size_t n, std::int64_t c) {
  ReducedPoly f(p, n);
  f.add_term(0, p.reduce(c));
  return f;
}

ReducedPoly ReducedPoly::variable(Prime p, std::size_t n, std::size_t i) {
  if (i >= n) throw IndexOutOfRange("variable index out of range");
  Monomial m(n, 0);
  m[i] = 1;
  return term(p, m, 1);
}

ReducedPoly ReducedPoly::linear_form(const FpVector& a) {
  ReducedPoly f(a.prime(), a.size());
  Monomial m(a.size(), 0);
  for (std::size_t j = 0; j < a.size(); ++j) {
    m[j] = 1;
    f.add_term(f.pack(m), a[j]);
    m[j] = 0;
  }
  return f;
}

ReducedPoly ReducedPoly::term(Prime p, const Monomial& exps, std::int64_t c) {
  ReducedPoly f(p, exps.size());
  f.accumulate(exps, c);
  return f;
}

void ReducedPoly::accumulate(const Monomial& exps, std::int64_t c) {
  if (exps.size() != n_) throw InputError("monomial has the wrong number of variables");
  std::uint64_t key = 0;
  for (auto e : exps) key = key * p_.value() + reduce_exponent(e, p_.value());
  add_term(key, p_.reduce(c));
}

std::uint64_t ReducedPoly::pack(const Monomial& m) const {
  std::uint64_t key = 0;
  for (auto e : m) key = key * p_.value() + e;
  return key;
}

Monomial ReducedPoly::unpack(std::uint64_t key) const {
  Monomial m(n_);
  for (std::size_t i = n_; i-- > 0;) {
    m[i] = key % p_.value();
    key /= p_.value();
  }
  return m;
}

void ReducedPoly::add_term(std::uint64_t key, std::uint64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (inserted) return;
  it->second = p_.add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

void ReducedPoly::check_same(const ReducedPoly& o) const {
  if (!(o.p_ == p_) || o.n_ != n_) throw InputError("polynomials over different rings");
}

FpScalar ReducedPoly::coeff(const Monomial& m) const {
  if (m.size() != n_) throw IndexOutOfRange("monomial has the wrong number of variables");
  for (auto e : m)
    if (e > p_.value() - 1) throw IndexOutOfRange("monomial exponent above p-1");
  auto it = terms_.find(pack(m));
  return FpScalar::from_residue(p_, it == terms_.end() ? 0 : it->second);
}

std::int64_t ReducedPoly::total_degree() const {
  std::int64_t best = -1;
  for (const auto& [key, c] : terms_) {
    std::int64_t d = 0;
    for (auto e : unpack(key)) d += static_cast<std::int64_t>(e);
    best = std::max(best, d);
  }
  return best;
}

std::uint64_t ReducedPoly::evaluate(std::span<const std::uint64_t> x) const {
  if (x.size() != n_) throw InputError("point has the wrong dimension");
  std::uint64_t s = 0;
  for (const auto& [key, c] : terms_) {
    auto v = c;
    auto m = unpack(key);
    for (std::size_t i = 0; i < n_; ++i) v = p_.mul(v, m[i] == 0 ? 1 : p_.pow(x[i], m[i]));
    s = p_.add(s, v);
  }
  return s;
}

std::vector<std::pair<Monomial, std::uint64_t>> ReducedPoly::terms() const {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::pair<Monomial, std::uint64_t>> out;
  for (const auto& [key, c] : sorted) out.emplace_back(unpack(key), c);
  return out;
}

ReducedPoly ReducedPoly::operator+(const ReducedPoly& o) const {
  check_same(o);
  auto r = *this;
  for (const auto& [key, c] : o.terms_) r.add_term(key, c);
  return r;
}

ReducedPoly ReducedPoly::operator-(const ReducedPoly& o) const {
  check_same(o);
  auto r = *this;
  for (const auto& [key, c] : o.terms_) r.add_term(key, p_.neg(c));
  return r;
}

ReducedPoly ReducedPoly::scaled(std::uint64_t c) const {
  ReducedPoly r(p_, n_);
  c %= p_.value();
  for (const auto& [key, v] : terms_) r.add_term(key, p_.mul(v, c));
  return r;
}

ReducedPoly ReducedPoly::operator*(const ReducedPoly& o) const {
  check_same(o);
  const auto q = p_.value();
  std::vector<std::pair<Monomial, std::uint64_t>> left, right;
  for (const auto& [key, c] : terms_) left.emplace_back(unpack(key), c);
  for (const auto& [key, c] : o.terms_) right.emplace_back(unpack(key), c);
  ReducedPoly r(p_, n_);
  for (const auto& [ma, ca] : left) {
    for (const auto& [mb, cb] : right) {
      std::uint64_t key = 0;
      for (std::size_t i = 0; i < n_; ++i) key = key * q + reduce_exponent(ma[i] + mb[i], q);
      r.add_term(key, p_.mul(ca, cb));
    }
  }
  return r;
}

ReducedPoly ReducedPoly::pow(std::uint64_t e) const {
  auto result = constant(p_, n_, 1);
  auto base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

ReducedPoly reduce(Prime p, std::size_t n,
                   const std::vector<std::pair<Monomial, std::int64_t>>& raw) {
  ReducedPoly f(p, n);
  for (const auto& [m, c] : raw) f.accumulate(m, c);
  return f;
}

ReducedPoly mul_reduce(const ReducedPoly& a, const ReducedPoly& b) { return a * b; }

FpScalar coeff(const ReducedPoly& f, const Monomial& m) { return f.coeff(m); }

nlohmann::json to_json(const ReducedPoly& f) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : f.terms()) out.push_back({{"exps", m}, {"coeff", c}});
  return out;
}

ReducedPoly interpolate(Prime p, std::size_t n, std::span<const std::uint64_t> values) {
  const auto q = p.value();
  const auto total = saturating_pow(q, n);
  if (values.size() != total) throw InputError("function table size is not p^n");
  // Per axis: c_0 = f(0), c_e = -sum_a f(a) a^{p-1-e} for e >= 1 (0^0 = 1).
  std::vector<std::uint64_t> powers(q * q);
  for (std::uint64_t a = 0; a < q; ++a)
    for (std::uint64_t e = 0; e < q; ++e) powers[a * q + e] = e == 0 ? 1 : p.pow(a, e);
  std::vector<std::uint64_t> table(values.begin(), values.end()), line(q), out(q);
  std::uint64_t stride = total;
  for (std::size_t axis = 0; axis < n; ++axis) {
    stride /= q;
    for (std::uint64_t base = 0; base < total; ++base) {
      if ((base / stride) % q != 0) continue;
      for (std::uint64_t a = 0; a < q; ++a) line[a] = table[base + a * stride];
      out[0] = line[0];
      for (std::uint64_t e = 1; e < q; ++e) {
        std::uint64_t s = 0;
        for (std::uint64_t a = 0; a < q; ++a) s = p.add(s, p.mul(line[a], powers[a * q + (q - 1 - e)]));
        out[e] = p.neg(s);
      }
      for (std::uint64_t e = 0; e < q; ++e) table[base + e * stride] = out[e];
    }
  }
  std::vector<std::pair<Monomial, std::int64_t>> raw;
  for (std::uint64_t key = 0; key < total; ++key) {
    if (table[key] == 0) continue;
    const auto v = index_vector(p, n, key);
    raw.emplace_back(Monomial(v.residues().begin(), v.residues().end()),
                     static_cast<std::int64_t>(table[key]));
  }
  return reduce(p, n, raw);
}

std::vector<std::uint64_t> evaluate_all(const ReducedPoly& f) {
  const auto p = f.prime();
  const auto total = saturating_pow(p.value(), f.vars());
  std::vector<std::uint64_t> out(total);
  for (std::uint64_t i = 0; i < total; ++i) {
    auto v = index_vector(p, f.vars(), i);
    out[i] = f.evaluate(v.residues());
  }
  return out;
}

namespace {

void require_nonsingular(const FpMatrix& m) {
  if (!m.is_nonsingular()) throw SingularMatrix("matrix is singular over F_p");
}

void check_exponents(const FpMatrix& m, const std::vector<unsigned>& e, unsigned lo) {
  if (e.size() != m.dim()) throw InputError("exponent vector must have length n");
  for (auto x : e)
    if (x < lo || x > m.prime().value() - 1)
      throw InputError("exponent out of range [" + std::to_string(lo) + ", p-1]");
}

// prod_i <row_i, x>^{r_i} for the rows of m.
ReducedPoly row_power_product(const FpMatrix& m, const std::vector<unsigned>& r) {
  auto f = ReducedPoly::constant(m.prime(), m.dim(), 1);
  for (std::size_t i = 0; i < m.dim(); ++i)
    if (r[i] > 0) f = f * ReducedPoly::linear_form(m.row(i)).pow(r[i]);
  return f;
}

ReducedPoly monomial(Prime p, const std::vector<unsigned>& s) {
  return ReducedPoly::term(p, Monomial(s.begin(), s.end()), 1);
}

std::uint64_t factorial_product(Prime p, const std::vector<unsigned>& v) {
  std::uint64_t r = 1;
  for (auto x : v)
    for (std::uint64_t k = 2; k <= x; ++k) r = p.mul(r, k % p.value());
  return r;
}

}  // namespace

bool check_p2(const FpMatrix& m, const std::vector<std::vector<std::uint64_t>>& c,
              const std::vector<std::vector<std::uint64_t>>& d, const Budget& budget) {
  require_nonsingular(m);
  const auto p = m.prime();
  const auto n = m.dim();
  checked_table_size(p, n, budget);
  if (c.size() != n || d.size() != n) throw InputError("forbidden lists must have n rows");
  auto h = ReducedPoly::constant(p, n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    const auto form = ReducedPoly::linear_form(m.row(i));
    for (auto dk : d[i]) h = h * (form - ReducedPoly::constant(p, n, static_cast<std::int64_t>(dk % p.value())));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto xi = ReducedPoly::variable(p, n, i);
    for (auto ck : c[i]) h = h * (xi - ReducedPoly::constant(p, n, static_cast<std::int64_t>(ck % p.value())));
  }
  return h.is_zero();
}

bool check_p5(const FpMatrix& m, const std::vector<unsigned>& t,
              const std::vector<unsigned>& t_prime, const Budget& budget) {
  require_nonsingular(m);
  check_exponents(m, t, 0);
  check_exponents(m, t_prime, 0);
  checked_table_size(m.prime(), m.dim(), budget);
  const auto f = row_power_product(m, t_prime) * monomial(m.prime(), t);
  std::int64_t total = 0;
  for (auto x : t) total += x;
  for (auto x : t_prime) total += x;
  return f.total_degree() < total;
}

DualityResult duality_check(const FpMatrix& m, const std::vector<unsigned>& r,
                            const std::vector<unsigned>& s, const Budget& budget) {
  require_nonsingular(m);
  check_exponents(m, r, 0);
  check_exponents(m, s, 0);
  std::uint64_t sr = 0, ss = 0;
  for (auto x : r) sr += x;
  for (auto x : s) ss += x;
  if (sr != ss) throw DegreeMismatch("sum r != sum s");
  checked_table_size(m.prime(), m.dim(), budget);
  const auto p = m.prime();
  const auto lhs = row_power_product(m, r).coeff(Monomial(s.begin(), s.end()));
  const auto rhs = row_power_product(m.transpose(), s).coeff(Monomial(r.begin(), r.end()));
  DualityResult out{lhs, rhs, lhs.is_zero(), rhs.is_zero(), false};
  out.factorial_relation = p.mul(factorial_product(p, r), rhs.value()) ==
                           p.mul(factorial_product(p, s), lhs.value());
  return out;
}

FpScalar scalar_product_by_evaluation(const FpMatrix& m, const std::vector<unsigned>& r,
                                      const std::vector<unsigned>& s, const Budget& budget) {
  require_nonsingular(m);
  check_exponents(m, r, 0);
  check_exponents(m, s, 0);
  const auto p = m.prime();
  const auto n = m.dim();
  const auto total = checked_table_size(p, n, budget);
  std::uint64_t sum = 0;
  std::vector<std::uint64_t> x(n, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < n && v != 0; ++i) {
      std::uint64_t form = 0;
      for (std::size_t j = 0; j < n; ++j) form = p.add(form, p.mul(m.at(i, j), x[j]));
      v = p.mul(v, r[i] == 0 ? 1 : p.pow(form, r[i]));
      v = p.mul(v, s[i] == 0 ? 1 : p.pow(x[i], s[i]));
    }
    sum = p.add(sum, v);
    for (std::size_t i = n; i-- > 0;) {
      if (++x[i] < p.value()) break;
      x[i] = 0;
    }
  }
  return FpScalar::from_residue(p, sum);
}

FpScalar scalar_product_by_coefficient(const FpMatrix& m, const std::vector<unsigned>& r,
                                       const std::vector<unsigned>& s, const Budget& budget) {
  require_nonsingular(m);
  check_exponents(m, r, 0);
  check_exponents(m, s, 0);
  const auto p = m.prime();
  checked_table_size(p, m.dim(), budget);
  const auto f = row_power_product(m, r) * monomial(p, s);
  // sum_x x^e over F_p is -1 for reduced e = p-1 and 0 otherwise.
  auto c = f.coeff(Monomial(m.dim(), p.value() - 1));
  return m.dim() % 2 ? -c : c;
}

FpScalar scalar_product_condition(const FpMatrix& m, const std::vector<unsigned>& r,
                                  const std::vector<unsigned>& s, const Budget& budget) {
  check_exponents(m, r, 1);
  check_exponents(m, s, 1);
  if (saturating_pow(m.prime().value(), m.dim()) <= (std::uint64_t{1} << 20))
    return scalar_product_by_evaluation(m, r, s, budget);
  return scalar_product_by_coefficient(m, r, s, budget);
}

}  // namespace ajt
