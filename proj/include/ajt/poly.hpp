#pragma once

#include <span>
#include <unordered_map>
#include <vector>

#include "ajt/budget.hpp"
#include "ajt/fp.hpp"
#include "ajt/matrix.hpp"
#include "json.hpp"

namespace ajt {

using Monomial = std::vector<std::uint64_t>;

// Exponent rule x^{i(p-1)+j} ~ x^j for i > 0, 0 < j <= p-1; 0 stays 0.
std::uint64_t reduce_exponent(std::uint64_t e, std::uint64_t p) noexcept;

// sum_{x in F_p} x^k (with 0^0 = 1).
std::uint64_t power_sum(Prime p, std::uint64_t k);

// Polynomial over F_p with every per-variable degree at most p-1, keyed by
// the base-p packing of the exponent vector (x_1 most significant).
class ReducedPoly {
 public:
  ReducedPoly(Prime p, std::size_t n);

  static ReducedPoly constant(Prime p, std::size_t n, std::int64_t c);
  static ReducedPoly variable(Prime p, std::size_t n, std::size_t i);
  // sum_j a_j x_j.
  static ReducedPoly linear_form(const FpVector& a);
  // Arbitrary nonnegative exponents, reduced on the way in.
  static ReducedPoly term(Prime p, const Monomial& exps, std::int64_t c);

  // Adds c * x^exps with arbitrary nonnegative exponents, reducing them.
  void accumulate(const Monomial& exps, std::int64_t c);

  Prime prime() const noexcept { return p_; }
  std::size_t vars() const noexcept { return n_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  // Exponents must lie in [0, p-1]; throws IndexOutOfRange otherwise.
  FpScalar coeff(const Monomial& m) const;
  // -1 for the zero polynomial.
  std::int64_t total_degree() const;
  std::uint64_t evaluate(std::span<const std::uint64_t> x) const;

  // (exponents, coefficient) pairs in ascending packed order.
  std::vector<std::pair<Monomial, std::uint64_t>> terms() const;

  ReducedPoly operator+(const ReducedPoly& o) const;
  ReducedPoly operator-(const ReducedPoly& o) const;
  ReducedPoly operator*(const ReducedPoly& o) const;
  ReducedPoly scaled(std::uint64_t c) const;
  ReducedPoly pow(std::uint64_t e) const;

  friend bool operator==(const ReducedPoly& a, const ReducedPoly& b) {
    return a.p_ == b.p_ && a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  std::uint64_t pack(const Monomial& m) const;
  Monomial unpack(std::uint64_t key) const;
  void add_term(std::uint64_t key, std::uint64_t c);
  void check_same(const ReducedPoly& o) const;

  Prime p_;
  std::size_t n_;
  std::unordered_map<std::uint64_t, std::uint64_t> terms_;
};

// Builds the reduced form of a raw term list.
ReducedPoly reduce(Prime p, std::size_t n,
                   const std::vector<std::pair<Monomial, std::int64_t>>& raw);
ReducedPoly mul_reduce(const ReducedPoly& a, const ReducedPoly& b);
FpScalar coeff(const ReducedPoly& f, const Monomial& m);

nlohmann::json to_json(const ReducedPoly& f);

// The unique reduced polynomial inducing the given function. `values` is
// indexed like the group-ring tables (x_1 most significant digit).
ReducedPoly interpolate(Prime p, std::size_t n, std::span<const std::uint64_t> values);
// All p^n values in the same order.
std::vector<std::uint64_t> evaluate_all(const ReducedPoly& f);

// h(x) = prod_{i,k} (<a_i, x> - d_ik) * prod_{i,k} (x_i - c_ik); true iff its
// reduced form is zero.
bool check_p2(const FpMatrix& m, const std::vector<std::vector<std::uint64_t>>& c,
              const std::vector<std::vector<std::uint64_t>>& d, const Budget& budget = Budget{});

// f = prod <a_i, x>^{t'_i} * prod x_i^{t_i}; true iff deg(reduced f) < sum t + sum t'.
bool check_p5(const FpMatrix& m, const std::vector<unsigned>& t,
              const std::vector<unsigned>& t_prime, const Budget& budget = Budget{});

struct DualityResult {
  FpScalar lhs;  // Coeff(prod x_i^{s_i}, reduce(prod <a_i, x>^{r_i}))
  FpScalar rhs;  // Coeff(prod x_j^{r_j}, reduce(prod (sum_i a_ij x_i)^{s_j}))
  bool lhs_zero;
  bool rhs_zero;
  // prod r_i! * rhs == prod s_i! * lhs in F_p.
  bool factorial_relation;
};

// Throws DegreeMismatch when sum r != sum s.
DualityResult duality_check(const FpMatrix& m, const std::vector<unsigned>& r,
                            const std::vector<unsigned>& s, const Budget& budget = Budget{});

// <prod <a_i, x>^{r_i}, prod x_i^{s_i}> = sum over x in F_p^n of the product.
FpScalar scalar_product_by_evaluation(const FpMatrix& m, const std::vector<unsigned>& r,
                                      const std::vector<unsigned>& s,
                                      const Budget& budget = Budget{});
// The same value read off the reduced product: (-1)^n Coeff(prod x_i^{p-1}, ...).
FpScalar scalar_product_by_coefficient(const FpMatrix& m, const std::vector<unsigned>& r,
                                       const std::vector<unsigned>& s,
                                       const Budget& budget = Budget{});
// Requires 1 <= r_i, s_i <= p-1. Evaluates when p^n <= 2^20, else reads coefficients.
FpScalar scalar_product_condition(const FpMatrix& m, const std::vector<unsigned>& r,
                                  const std::vector<unsigned>& s,
                                  const Budget& budget = Budget{});

}  // namespace ajt
