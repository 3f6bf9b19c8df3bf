#pragma once

#include <string>
#include <vector>

#include "ajt/budget.hpp"
#include "ajt/cyclotomic.hpp"
#include "ajt/errors.hpp"
#include "ajt/fp.hpp"
#include "ajt/matrix.hpp"
#include "json.hpp"

namespace ajt {

// Coefficient rings. Each supplies the handful of operations the dense
// group-ring tables need; `sub_phase(y, x, m, p)` performs y -= omega^m * x.

struct IntegerRing {
  using Coeff = BigInt;
  static constexpr const char* kName = "Z";
  static constexpr bool kHasPhases = false;
  static Coeff zero(Prime) { return 0; }
  static Coeff one(Prime) { return 1; }
  static bool is_zero(const Coeff& c) { return c.is_zero(); }
  static void add_to(Coeff& y, const Coeff& x, Prime) { y += x; }
  static void sub_phase(Coeff& y, const Coeff& x, std::uint64_t, Prime) { y -= x; }
  static Coeff mul(const Coeff& a, const Coeff& b, Prime) { return a * b; }
};

struct ModPRing {
  using Coeff = std::uint64_t;
  static constexpr const char* kName = "F_p";
  static constexpr bool kHasPhases = false;
  static Coeff zero(Prime) { return 0; }
  static Coeff one(Prime) { return 1; }
  static bool is_zero(Coeff c) { return c == 0; }
  static void add_to(Coeff& y, Coeff x, Prime p) { y = p.add(y, x); }
  static void sub_phase(Coeff& y, Coeff x, std::uint64_t, Prime p) { y = p.sub(y, x); }
  static Coeff mul(Coeff a, Coeff b, Prime p) { return p.mul(a, b); }
};

struct CyclotomicRing {
  using Coeff = CyclotomicInt;
  static constexpr const char* kName = "Z[omega]";
  static constexpr bool kHasPhases = true;
  static Coeff zero(Prime p) { return CyclotomicInt(p); }
  static Coeff one(Prime p) { return CyclotomicInt::integer(p, 1); }
  static bool is_zero(const Coeff& c) { return c.is_zero(); }
  static void add_to(Coeff& y, const Coeff& x, Prime) { y += x; }
  static void sub_phase(Coeff& y, const Coeff& x, std::uint64_t m, Prime) {
    y.sub_root_multiple(x, m);
  }
  static Coeff mul(const Coeff& a, const Coeff& b, Prime) { return a * b; }
};

// Index of v in the dense table: v_1 is the most significant base-p digit.
std::size_t vector_index(const FpVector& v);
FpVector index_vector(Prime p, std::size_t n, std::size_t index);
// table[u] = index of (vector u) + v.
std::vector<std::size_t> translation_table(const FpVector& v);
// Throws BudgetExceeded when p^n exceeds budget.max_entries.
std::size_t checked_table_size(Prime p, std::size_t n, const Budget& budget);

// Element of R[F_p^n] as a dense table of p^n coefficients.
template <typename R>
class GroupRingElem {
 public:
  using Coeff = typename R::Coeff;

  GroupRingElem(Prime p, std::size_t n, const Budget& budget = Budget{})
      : p_(p), n_(n), coeffs_(checked_table_size(p, n, budget), R::zero(p)) {}

  static GroupRingElem identity(Prime p, std::size_t n, const Budget& budget = Budget{}) {
    GroupRingElem e(p, n, budget);
    e.coeffs_[0] = R::one(p);
    return e;
  }

  // Takes ownership of a full table of p^n coefficients.
  static GroupRingElem from_table(Prime p, std::size_t n, std::vector<Coeff> table) {
    if (table.size() != saturating_pow(p.value(), n))
      throw RingMismatch("coefficient table size is not p^n");
    GroupRingElem e(p, 0);
    e.n_ = n;
    e.coeffs_ = std::move(table);
    return e;
  }

  Prime prime() const noexcept { return p_; }
  std::size_t dim() const noexcept { return n_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  static constexpr const char* ring_name() { return R::kName; }

  const Coeff& operator[](std::size_t index) const { return coeffs_[index]; }
  const Coeff& at(const FpVector& v) const { return coeffs_[checked_index(v)]; }
  void set(const FpVector& v, Coeff c) { coeffs_[checked_index(v)] = std::move(c); }
  const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!R::is_zero(c)) return false;
    return true;
  }

  // this * (1 - omega^phase g^v); phase must be 0 outside Z[omega].
  GroupRingElem times_one_minus(const FpVector& v, std::uint64_t phase = 0) const {
    if (phase % p_.value() != 0 && !R::kHasPhases)
      throw PhaseInNonCyclotomicRing("phases need the cyclotomic coefficient ring");
    checked_index(v);
    const auto shift = translation_table(v);
    GroupRingElem out = *this;
    for (std::size_t u = 0; u < coeffs_.size(); ++u) {
      if (R::is_zero(coeffs_[u])) continue;
      R::sub_phase(out.coeffs_[shift[u]], coeffs_[u], phase, p_);
    }
    return out;
  }

  friend bool operator==(const GroupRingElem& a, const GroupRingElem& b) {
    return a.p_ == b.p_ && a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }

 private:
  std::size_t checked_index(const FpVector& v) const {
    if (v.size() != n_ || !(v.prime() == p_)) throw RingMismatch("vector outside F_p^n");
    return vector_index(v);
  }

  Prime p_;
  std::size_t n_;
  std::vector<Coeff> coeffs_;
};

template <typename R>
GroupRingElem<R> one_minus_g(Prime p, std::size_t n, const FpVector& v,
                             const Budget& budget = Budget{}) {
  return GroupRingElem<R>::identity(p, n, budget).times_one_minus(v);
}

// Full convolution, O(p^{2n}). Mixing coefficient rings does not compile;
// mixing p or n throws RingMismatch.
template <typename R>
GroupRingElem<R> mul(const GroupRingElem<R>& x, const GroupRingElem<R>& y) {
  if (!(x.prime() == y.prime()) || x.dim() != y.dim())
    throw RingMismatch("group ring elements over different groups");
  const auto p = x.prime();
  std::vector<typename R::Coeff> acc(x.size(), R::zero(p));
  for (std::size_t v = 0; v < y.size(); ++v) {
    if (R::is_zero(y[v])) continue;
    const auto shift = translation_table(index_vector(p, x.dim(), v));
    for (std::size_t u = 0; u < x.size(); ++u) {
      if (R::is_zero(x[u])) continue;
      R::add_to(acc[shift[u]], R::mul(x[u], y[v], p), p);
    }
  }
  return GroupRingElem<R>::from_table(p, x.dim(), std::move(acc));
}

// Factors (1 - g^{v_j})^{t_j}, or with phase lists prod_c (1 - omega^{-c} g^{v_j}).
struct FactorSpec {
  std::vector<FpVector> vectors;
  std::vector<unsigned> exponents;
  // Empty, or one list per vector whose length equals that vector's exponent.
  std::vector<std::vector<std::uint64_t>> phases;
};

void validate_factor_spec(Prime p, std::size_t n, const FactorSpec& spec);

template <typename R>
GroupRingElem<R> product_of_factors(Prime p, std::size_t n, const FactorSpec& spec,
                                    const Budget& budget = Budget{}) {
  validate_factor_spec(p, n, spec);
  if (!spec.phases.empty() && !R::kHasPhases)
    throw PhaseInNonCyclotomicRing("phases need the cyclotomic coefficient ring");
  auto acc = GroupRingElem<R>::identity(p, n, budget);
  for (std::size_t j = 0; j < spec.vectors.size(); ++j) {
    for (unsigned k = 0; k < spec.exponents[j]; ++k) {
      const std::uint64_t phase = spec.phases.empty() ? 0 : p.neg(spec.phases[j][k] % p.value());
      acc = acc.times_one_minus(spec.vectors[j], phase);
    }
  }
  return acc;
}

// e_1..e_n with exponents t, then the rows a_1..a_n of m with exponents t'.
FactorSpec matrix_factors(const FpMatrix& m, const std::vector<unsigned>& t,
                          const std::vector<unsigned>& t_prime);

// True iff prod (1 - w^{-c_ik} g^{e_i}) * prod (1 - w^{-d_ik} g^{a_i}) = 0 in Z[w][F_p^n].
bool check_p3(const FpMatrix& m, const std::vector<std::vector<std::uint64_t>>& c,
              const std::vector<std::vector<std::uint64_t>>& d, const Budget& budget = Budget{});
// True iff prod (1 - g^{e_i})^{t_i} * prod (1 - g^{a_i})^{t'_i} = 0 in F_p[F_p^n].
bool check_p4(const FpMatrix& m, const std::vector<unsigned>& t,
              const std::vector<unsigned>& t_prime, const Budget& budget = Budget{});
// Same product with all exponents 1, over Z.
bool check_p3_integer(const FpMatrix& m, const Budget& budget = Budget{});

// sigma_0..sigma_{2n} of the 2n elements (1 - g^{e_i}), (1 - g^{a_i}) over F_p.
std::vector<GroupRingElem<ModPRing>> sigma_of_factors(const FpMatrix& m,
                                                      const Budget& budget = Budget{});
// sigma_j with sigma_j = 0 outside [0, 2n].
bool sigma_vanishing_candidate(const FpMatrix& m, const Budget& budget = Budget{});

struct DeleteOneReport {
  bool full_product_zero;
  // Entry j: the product with (1 - g^{a_j})^k removed is zero.
  std::vector<bool> zero_after_delete;
};
DeleteOneReport delete_one_factor_scan(const FpMatrix& m, unsigned k,
                                       const Budget& budget = Budget{});

nlohmann::json coeff_json(const BigInt& c);
nlohmann::json coeff_json(std::uint64_t c);
nlohmann::json coeff_json(const CyclotomicInt& c);

template <typename R>
nlohmann::json to_json(const GroupRingElem<R>& x) {
  nlohmann::json nonzero = nlohmann::json::array();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (R::is_zero(x[i])) continue;
    auto v = index_vector(x.prime(), x.dim(), i);
    nonzero.push_back({{"vector", std::vector<std::uint64_t>(v.residues().begin(),
                                                             v.residues().end())},
                       {"coeff", coeff_json(x[i])}});
  }
  return {{"p", x.prime().value()}, {"n", x.dim()}, {"ring", R::kName}, {"nonzero", nonzero}};
}

}  // namespace ajt
