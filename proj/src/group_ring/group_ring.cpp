#include "ajt/group_ring.hpp"

#include <string>

namespace ajt {

std::size_t checked_table_size(Prime p, std::size_t n, const Budget& budget) {
  const auto size = saturating_pow(p.value(), n);
  if (size > budget.max_entries)
    throw BudgetExceeded("p^n = " + std::to_string(p.value()) + "^" + std::to_string(n) +
                         " exceeds the table budget of " + std::to_string(budget.max_entries));
  return static_cast<std::size_t>(size);
}

std::size_t vector_index(const FpVector& v) {
  const auto q = v.prime().value();
  std::size_t index = 0;
  for (std::size_t i = 0; i < v.size(); ++i) index = index * q + v[i];
  return index;
}

FpVector index_vector(Prime p, std::size_t n, std::size_t index) {
  std::vector<std::uint64_t> digits(n);
  for (std::size_t i = n; i-- > 0;) {
    digits[i] = index % p.value();
    index /= p.value();
  }
  return FpVector(p, std::move(digits));
}

std::vector<std::size_t> translation_table(const FpVector& v) {
  const auto q = v.prime().value();
  const auto n = v.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= q;
  std::vector<std::size_t> table(total);
  // Odometer over u, tracking the digits of u + v alongside.
  std::vector<std::uint64_t> u(n, 0), w(v.residues().begin(), v.residues().end());
  std::vector<std::size_t> place(n, 1);
  for (std::size_t i = n - 1; i-- > 0;) place[i] = place[i + 1] * q;
  std::size_t target = vector_index(v);
  for (std::size_t idx = 0; idx < total; ++idx) {
    table[idx] = target;
    for (std::size_t i = n; i-- > 0;) {
      ++u[i];
      if (w[i] + 1 == q) {
        w[i] = 0;
        target -= (q - 1) * place[i];
      } else {
        ++w[i];
        target += place[i];
      }
      if (u[i] < q) break;
      u[i] = 0;
    }
  }
  return table;
}

void validate_factor_spec(Prime p, std::size_t n, const FactorSpec& spec) {
  if (spec.exponents.size() != spec.vectors.size())
    throw InputError("one exponent per factor vector is required");
  for (const auto& v : spec.vectors)
    if (v.size() != n || !(v.prime() == p)) throw RingMismatch("factor vector outside F_p^n");
  for (auto t : spec.exponents)
    if (t > p.value() - 1) throw InputError("exponents must lie in [0, p-1]");
  if (spec.phases.empty()) return;
  if (spec.phases.size() != spec.vectors.size())
    throw InputError("one phase list per factor vector is required");
  for (std::size_t j = 0; j < spec.phases.size(); ++j)
    if (spec.phases[j].size() != spec.exponents[j])
      throw InputError("phase list length must equal the factor exponent");
}

FactorSpec matrix_factors(const FpMatrix& m, const std::vector<unsigned>& t,
                          const std::vector<unsigned>& t_prime) {
  const auto n = m.dim();
  if (t.size() != n || t_prime.size() != n) throw InputError("exponent vectors must have length n");
  FactorSpec spec;
  for (std::size_t i = 0; i < n; ++i) {
    spec.vectors.push_back(FpVector::unit(m.prime(), n, i));
    spec.exponents.push_back(t[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    spec.vectors.push_back(m.row(i));
    spec.exponents.push_back(t_prime[i]);
  }
  return spec;
}

namespace {

void require_nonsingular(const FpMatrix& m) {
  if (!m.is_nonsingular()) throw SingularMatrix("matrix is singular over F_p");
}

}  // namespace

bool check_p3(const FpMatrix& m, const std::vector<std::vector<std::uint64_t>>& c,
              const std::vector<std::vector<std::uint64_t>>& d, const Budget& budget) {
  require_nonsingular(m);
  const auto n = m.dim();
  if (c.size() != n || d.size() != n) throw InputError("forbidden lists must have n rows");
  std::vector<unsigned> t, tp;
  for (const auto& row : c) t.push_back(static_cast<unsigned>(row.size()));
  for (const auto& row : d) tp.push_back(static_cast<unsigned>(row.size()));
  auto spec = matrix_factors(m, t, tp);
  spec.phases = c;
  spec.phases.insert(spec.phases.end(), d.begin(), d.end());
  return product_of_factors<CyclotomicRing>(m.prime(), n, spec, budget).is_zero();
}

bool check_p4(const FpMatrix& m, const std::vector<unsigned>& t,
              const std::vector<unsigned>& t_prime, const Budget& budget) {
  require_nonsingular(m);
  return product_of_factors<ModPRing>(m.prime(), m.dim(), matrix_factors(m, t, t_prime), budget)
      .is_zero();
}

bool check_p3_integer(const FpMatrix& m, const Budget& budget) {
  require_nonsingular(m);
  std::vector<unsigned> ones(m.dim(), 1);
  return product_of_factors<IntegerRing>(m.prime(), m.dim(), matrix_factors(m, ones, ones),
                                         budget)
      .is_zero();
}

std::vector<GroupRingElem<ModPRing>> sigma_of_factors(const FpMatrix& m, const Budget& budget) {
  require_nonsingular(m);
  const auto p = m.prime();
  const auto n = m.dim();
  std::vector<FpVector> ws;
  for (std::size_t i = 0; i < n; ++i) ws.push_back(FpVector::unit(p, n, i));
  for (std::size_t i = 0; i < n; ++i) ws.push_back(m.row(i));

  // Expand prod (1 + T w) one factor at a time: sigma_j += w * sigma_{j-1}.
  std::vector<GroupRingElem<ModPRing>> sigma;
  sigma.push_back(GroupRingElem<ModPRing>::identity(p, n, budget));
  for (const auto& v : ws) {
    sigma.push_back(GroupRingElem<ModPRing>(p, n, budget));
    for (std::size_t j = sigma.size() - 1; j >= 1; --j) {
      const auto term = sigma[j - 1].times_one_minus(v);
      std::vector<std::uint64_t> table(sigma[j].coeffs());
      for (std::size_t u = 0; u < table.size(); ++u) table[u] = p.add(table[u], term[u]);
      sigma[j] = GroupRingElem<ModPRing>::from_table(p, n, std::move(table));
    }
  }
  return sigma;
}

bool sigma_vanishing_candidate(const FpMatrix& m, const Budget& budget) {
  const auto sigma = sigma_of_factors(m, budget);
  const auto top = static_cast<std::int64_t>(2 * m.dim());
  for (std::int64_t i = 0; i <= static_cast<std::int64_t>(m.prime().value()) - 1; ++i) {
    const auto j = top - i;
    if (j < 0) continue;
    if (!sigma[static_cast<std::size_t>(j)].is_zero()) return false;
  }
  return true;
}

DeleteOneReport delete_one_factor_scan(const FpMatrix& m, unsigned k, const Budget& budget) {
  require_nonsingular(m);
  const auto n = m.dim();
  std::vector<unsigned> t(n, k), tp(n, k);
  DeleteOneReport report;
  report.full_product_zero = check_p4(m, t, tp, budget);
  for (std::size_t j = 0; j < n; ++j) {
    tp[j] = 0;
    report.zero_after_delete.push_back(check_p4(m, t, tp, budget));
    tp[j] = k;
  }
  return report;
}

nlohmann::json coeff_json(const BigInt& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return c.str();
}

nlohmann::json coeff_json(std::uint64_t c) { return c; }

nlohmann::json coeff_json(const CyclotomicInt& c) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : c.coeffs()) out.push_back(coeff_json(x));
  return out;
}

}  // namespace ajt
