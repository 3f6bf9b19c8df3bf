#include <stdexcept>

#include "ajt/errors.hpp"
#include "ajt/group_ring.hpp"
#include "ajt/poly.hpp"
#include "ajt/properties.hpp"

namespace ajt {

FunctionTable::FunctionTable(Prime p, std::size_t n_, std::vector<std::uint64_t> v)
    : prime(p), n(n_), values(std::move(v)) {
  if (values.size() != saturating_pow(p.value(), n)) throw InputError("table length is not p^n");
  for (auto x : values)
    if (x >= p.value()) throw InputError("table value out of range");
}

FunctionTable FunctionTable::zero(Prime p, std::size_t n, const Budget& budget) {
  return FunctionTable(p, n, std::vector<std::uint64_t>(checked_table_size(p, n, budget), 0));
}

FunctionTable FunctionTable::random(Prime p, std::size_t n, Rng& rng, const Budget& budget) {
  std::vector<std::uint64_t> v(checked_table_size(p, n, budget));
  for (auto& x : v) x = rng.below(p.value());
  return FunctionTable(p, n, std::move(v));
}

FunctionTable delta(const FunctionTable& f, const FpVector& v) {
  if (v.prime() != f.prime || v.size() != f.n) throw InputError("direction shape mismatch");
  const auto shift = translation_table(v);
  std::vector<std::uint64_t> out(f.size());
  for (std::size_t u = 0; u < f.size(); ++u) out[u] = f.prime.sub(f.values[u], f.values[shift[u]]);
  return FunctionTable(f.prime, f.n, std::move(out));
}

bool line_sums_zero(const FunctionTable& f, const std::vector<FpVector>& directions) {
  const auto q = f.prime.value();
  for (const auto& dir : directions) {
    if (dir.prime() != f.prime || dir.size() != f.n) throw InputError("direction shape mismatch");
    const auto shift = translation_table(dir);
    for (std::size_t v = 0; v < f.size(); ++v) {
      std::uint64_t s = 0;
      std::size_t w = v;
      for (std::uint64_t t = 0; t < q; ++t, w = shift[w]) s = f.prime.add(s, f.values[w]);
      if (s != 0) return false;
    }
  }
  return true;
}

bool image_membership_by_line_sums(const FunctionTable& f) {
  std::vector<FpVector> basis;
  for (std::size_t i = 0; i < f.n; ++i) basis.push_back(FpVector::unit(f.prime, f.n, i));
  return line_sums_zero(f, basis);
}

bool image_membership_by_degree(const FunctionTable& f) {
  const auto poly = interpolate(f.prime, f.n, f.values);
  for (const auto& [m, c] : poly.terms())
    for (auto e : m)
      if (e == f.prime.value() - 1) return false;
  return true;
}

bool image_membership_delta(const FunctionTable& f) {
  const bool by_degree = image_membership_by_degree(f);
  if (by_degree != image_membership_by_line_sums(f))
    throw std::logic_error("image membership routes disagree");
  return by_degree;
}

std::uint64_t pairing(const FunctionTable& f, const FunctionTable& g) {
  if (f.prime != g.prime || f.n != g.n) throw InputError("tables differ in shape");
  std::uint64_t s = 0;
  for (std::size_t v = 0; v < f.size(); ++v) s = f.prime.add(s, f.prime.mul(f.values[v], g.values[v]));
  return s;
}

namespace {

// Random polynomial with every exponent e_i <= bound_i.
ReducedPoly random_bounded(Prime p, const std::vector<std::uint64_t>& bound, Rng& rng) {
  const auto n = bound.size();
  ReducedPoly f(p, n);
  Monomial m(n, 0);
  while (true) {
    f.accumulate(m, static_cast<std::int64_t>(rng.below(p.value())));
    std::size_t i = n;
    while (i > 0 && m[i - 1] == bound[i - 1]) m[--i] = 0;
    if (i == 0) break;
    ++m[i - 1];
  }
  return f;
}

std::vector<std::uint64_t> bounds(Prime p, const std::vector<unsigned>& t) {
  std::vector<std::uint64_t> b;
  for (auto x : t) b.push_back(p.value() - 1 - x);
  return b;
}

}  // namespace

PairingReport pairing_test(const FpMatrix& m, const std::vector<unsigned>& t,
                           const std::vector<unsigned>& t_prime, std::uint64_t trials,
                           std::uint64_t seed, const Budget& budget) {
  const auto p = m.prime();
  const auto n = m.dim();
  if (!m.is_nonsingular()) throw SingularMatrix("matrix is singular");
  if (t.size() != n || t_prime.size() != n) throw InputError("exponent vectors need length n");
  for (auto x : t) if (x > p.value() - 1) throw InputError("exponent above p-1");
  for (auto x : t_prime) if (x > p.value() - 1) throw InputError("exponent above p-1");
  const auto size = checked_table_size(p, n, budget);

  PairingReport rep{seed, trials, t, t_prime, check_p4(m, t, t_prime, budget), 0, false};
  const auto dual = m.inverse().transpose();  // rows are a'_i
  std::vector<FpVector> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(m.row(i));
  const bool unit_exponents =
      std::all_of(t.begin(), t.end(), [](unsigned x) { return x == 1; }) &&
      std::all_of(t_prime.begin(), t_prime.end(), [](unsigned x) { return x == 1; });

  Rng rng(seed);
  const auto fb = bounds(p, t), gb = bounds(p, t_prime);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    const FunctionTable f(p, n, evaluate_all(random_bounded(p, fb, rng)));
    const auto gpoly = random_bounded(p, gb, rng);
    std::vector<std::uint64_t> gv(size);
    for (std::size_t idx = 0; idx < size; ++idx) {
      const auto y = dual * index_vector(p, n, idx);
      gv[idx] = gpoly.evaluate(y.residues());
    }
    const FunctionTable g(p, n, std::move(gv));
    if (unit_exponents && (!image_membership_delta(f) || !line_sums_zero(g, rows)))
      throw std::logic_error("sampled function outside the expected image");
    if (pairing(f, g) != 0) ++rep.nonzero_pairings;
  }
  rep.violation = rep.p4 && rep.nonzero_pairings > 0;
  return rep;
}

PairingReport pairing_test(const FpMatrix& m, std::uint64_t trials, std::uint64_t seed,
                           const Budget& budget) {
  const std::vector<unsigned> ones(m.dim(), 1);
  return pairing_test(m, ones, ones, trials, seed, budget);
}

nlohmann::json PairingReport::to_json() const {
  return {{"seed", seed},
          {"trials", trials},
          {"t", t},
          {"t_prime", t_prime},
          {"P4", p4},
          {"nonzero_pairings", nonzero_pairings},
          {"violation", violation}};
}

}  // namespace ajt
