#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <string>

#include "ajt/apsets.hpp"
#include "ajt/errors.hpp"
#include "ajt/matrix.hpp"
#include "ajt/rng.hpp"

namespace ajt {
namespace {

using boost::multiprecision::cpp_int;

cpp_int tuple_count(const std::vector<ResidueSet>& sets) {
  cpp_int c = 1;
  for (const auto& s : sets) c *= s.size();
  return c;
}

void check_shapes(const std::vector<FpVector>& e_basis, const std::vector<FpVector>& f_basis,
                  const std::vector<ResidueSet>& u, const std::vector<ResidueSet>& v) {
  const auto n = e_basis.size();
  if (n == 0 || f_basis.size() != n || u.size() != n || v.size() != n)
    throw PreconditionViolated("bases and set lists must all have length n >= 1");
  const auto p = e_basis[0].prime();
  for (const auto* basis : {&e_basis, &f_basis}) {
    for (const auto& b : *basis)
      if (b.size() != n || !(b.prime() == p))
        throw PreconditionViolated("basis vectors must lie in F_p^n");
    if (!FpMatrix::from_rows(p, *basis).is_nonsingular())
      throw PreconditionViolated("basis does not have rank n");
  }
  for (const auto* sets : {&u, &v})
    for (const auto& s : *sets) {
      if (!(s.prime() == p)) throw PreconditionViolated("sets over a different prime");
      if (s.contains(0)) throw PreconditionViolated("sets must avoid 0");
    }
}

// Walks every tuple of `from` sets, maps sum x_i from_basis_i into coordinates
// of the other basis and tests membership in the `to` sets.
bool collide_one_side(const std::vector<FpVector>& from_basis,
                      const std::vector<FpVector>& to_basis,
                      const std::vector<ResidueSet>& from, const std::vector<ResidueSet>& to) {
  const auto n = from_basis.size();
  const auto p = from_basis[0].prime();
  // w = T^t z for T with rows to_basis, so z = (T^t)^{-1} w.
  const auto solve = FpMatrix::from_rows(p, to_basis).transpose().inverse();
  std::vector<std::vector<std::uint64_t>> lists;
  for (const auto& s : from) {
    lists.push_back(s.elements());
    if (lists.back().empty()) return false;
  }
  std::vector<std::size_t> pos(n, 0);
  while (true) {
    FpVector w(p, n);
    for (std::size_t i = 0; i < n; ++i) w = w + from_basis[i].scaled(lists[i][pos[i]]);
    const auto z = solve * w;
    bool hit = true;
    for (std::size_t i = 0; i < n && hit; ++i) hit = to[i].contains(z[i]);
    if (hit) return true;
    std::size_t i = 0;
    while (i < n && ++pos[i] == lists[i].size()) pos[i++] = 0;
    if (i == n) return false;
  }
}

}  // namespace

bool has_sum_collision(const std::vector<FpVector>& e_basis,
                       const std::vector<FpVector>& f_basis, const std::vector<ResidueSet>& u,
                       const std::vector<ResidueSet>& v) {
  if (tuple_count(u) <= tuple_count(v)) return collide_one_side(e_basis, f_basis, u, v);
  return collide_one_side(f_basis, e_basis, v, u);
}

std::vector<FpScalar> random_multipliers(const std::vector<FpVector>& e_basis,
                                         const std::vector<FpVector>& f_basis,
                                         const std::vector<ResidueSet>& u,
                                         const std::vector<ResidueSet>& v, std::uint64_t seed,
                                         std::uint64_t max_tries) {
  check_shapes(e_basis, f_basis, u, v);
  const auto p = e_basis[0].prime();
  const auto n = e_basis.size();
  cpp_int bound = 1;
  for (std::size_t i = 0; i < n; ++i) bound *= p.value() - 1;
  if (tuple_count(u) * tuple_count(v) >= bound)
    throw PreconditionViolated("prod |U_i| * prod |V_i| must be below (p-1)^n");

  Rng rng(seed);
  std::vector<ResidueSet> scaled;
  for (std::uint64_t attempt = 0; attempt < max_tries; ++attempt) {
    std::vector<FpScalar> lambda;
    scaled.clear();
    for (std::size_t i = 0; i < n; ++i) {
      lambda.push_back(FpScalar::from_residue(p, rng.nonzero_residue(p.value())));
      scaled.push_back(v[i].dilated(lambda.back().value()));
    }
    if (!has_sum_collision(e_basis, f_basis, u, scaled)) return lambda;
  }
  throw NotFound("no multipliers found within " + std::to_string(max_tries) + " tries");
}

namespace {

// Translate into F_p^* by the smallest c >= 1 with -c outside the set.
ResidueSet shift_off_zero(const ResidueSet& s) {
  const auto q = s.prime().value();
  for (std::uint64_t c = 1; c < q; ++c)
    if (!s.contains(q - c)) return s.shifted(static_cast<std::int64_t>(c));
  throw PreconditionViolated("the whole field cannot be moved off 0");
}

}  // namespace

GoodSubsets good_subsets(Prime p, unsigned k, const std::vector<FpVector>& e_basis,
                         const std::vector<FpVector>& f_basis, std::uint64_t seed,
                         std::uint64_t max_tries) {
  const auto n = e_basis.size();
  const auto q = p.value();
  ResidueSet a(p), b(p);
  if (k == 1) {
    auto row = appendix_row(q);
    a = row ? row->set : build_s1_log(p);
    if (a.size() * a.size() >= q - 1)
      throw PreconditionViolated("S_1 set of size " + std::to_string(a.size()) +
                                 " has square >= p-1");
    a = shift_off_zero(a);
    b = a;
  } else {
    auto sk = build_sk(p, k);
    if (sk.set.size() * (2 * k + 1) >= q - 1)
      throw PreconditionViolated("S_k set of size " + std::to_string(sk.set.size()) +
                                 " leaves no room for an N_k set below p-1");
    const auto parts = static_cast<std::size_t>(
        std::ceil(std::pow(static_cast<double>(q), 1.0 / (2.0 * k + 1.0))));
    auto partition = partition_nk(p, k, parts, seed, max_tries);
    const ResidueSet* smallest = &partition.parts.front();
    for (const auto& part : partition.parts)
      if (part.size() < smallest->size()) smallest = &part;
    if (sk.set.size() * smallest->size() >= q - 1)
      throw PreconditionViolated("|A| * |B| is not below p-1");
    a = shift_off_zero(sk.set);
    b = shift_off_zero(*smallest);
  }
  if (!is_sk_type(a, k).ok() || !is_nk_type(b, k).ok())
    throw ConstructionFailed("translated sets lost their type");

  std::vector<ResidueSet> us(n, a), vs(n, b);
  GoodSubsets out;
  out.lambda = random_multipliers(e_basis, f_basis, us, vs, seed, max_tries);
  out.a = us;
  for (std::size_t i = 0; i < n; ++i) out.b.push_back(b.dilated(out.lambda[i].value()));
  return out;
}

}  // namespace ajt
