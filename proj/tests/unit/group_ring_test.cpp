#include <gtest/gtest.h>

#include <complex>
#include <numbers>

#include "ajt/group_ring.hpp"
#include "ajt/rng.hpp"
#include "oracle/group_ring_oracle.hpp"

using namespace ajt;

namespace {

std::complex<double> evaluate(const CyclotomicInt& z) {
  const auto q = static_cast<double>(z.prime().value());
  std::complex<double> s = 0;
  for (std::size_t i = 0; i < z.coeffs().size(); ++i)
    s += z.coeffs()[i].convert_to<double>() * std::polar(1.0, 2 * std::numbers::pi * i / q);
  return s;
}

CyclotomicInt random_cyclotomic(Prime p, Rng& rng) {
  CyclotomicInt z(p);
  for (std::uint64_t i = 0; i < p.value(); ++i)
    z += CyclotomicInt::root_power(p, static_cast<std::int64_t>(i)) *
         CyclotomicInt::integer(p, static_cast<long long>(rng.below(11)) - 5);
  return z;
}

FpVector random_vector(Prime p, std::size_t n, Rng& rng) {
  FpVector v(p, n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, static_cast<std::int64_t>(rng.below(p.value())));
  return v;
}

oracle::Vec as_vec(const FpVector& v) { return oracle::Vec(v.residues().begin(), v.residues().end()); }

}  // namespace

TEST(Cyclotomic, RootsSumToZero) {
  for (std::uint64_t q : {3, 5, 7, 11}) {
    Prime p(q);
    CyclotomicInt s(p);
    for (std::uint64_t i = 0; i < q; ++i) s += CyclotomicInt::root_power(p, static_cast<std::int64_t>(i));
    EXPECT_TRUE(s.is_zero());
    EXPECT_EQ(CyclotomicInt::root_power(p, static_cast<std::int64_t>(q)), CyclotomicInt::integer(p, 1));
    EXPECT_EQ(CyclotomicInt::root_power(p, -1), CyclotomicInt::root_power(p, static_cast<std::int64_t>(q - 1)));
  }
}

TEST(Cyclotomic, ArithmeticMatchesComplexEvaluation) {
  Rng rng(1);
  for (std::uint64_t q : {3, 5, 7}) {
    Prime p(q);
    for (int trial = 0; trial < 200; ++trial) {
      auto a = random_cyclotomic(p, rng), b = random_cyclotomic(p, rng);
      const auto m = rng.below(q);
      EXPECT_LT(std::abs(evaluate(a * b) - evaluate(a) * evaluate(b)), 1e-6);
      EXPECT_LT(std::abs(evaluate(a - b) - (evaluate(a) - evaluate(b))), 1e-9);
      EXPECT_LT(std::abs(evaluate(a.times_root(m)) -
                         evaluate(a) * std::polar(1.0, 2 * std::numbers::pi * m / q)),
                1e-6);
      auto c = a;
      c.sub_root_multiple(b, m);
      EXPECT_EQ(c, a - b.times_root(m));
      auto self = a;
      self.sub_root_multiple(self, m);
      EXPECT_EQ(self, a - a.times_root(m));
    }
  }
}

TEST(GroupRing, IndexRoundTripAndTranslation) {
  Rng rng(2);
  Prime p(5);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t i = 0; i < 125 && i < saturating_pow(5, n); ++i)
      EXPECT_EQ(vector_index(index_vector(p, n, i)), i);
    for (int trial = 0; trial < 10; ++trial) {
      auto v = random_vector(p, n, rng);
      auto table = translation_table(v);
      for (std::size_t u = 0; u < table.size(); ++u)
        EXPECT_EQ(table[u], vector_index(index_vector(p, n, u) + v));
    }
  }
}

TEST(GroupRing, OneMinusG) {
  Prime p(5);
  auto zero = one_minus_g<ModPRing>(p, 1, FpVector(p, {0}));
  EXPECT_TRUE(zero.is_zero());
  auto mod = one_minus_g<ModPRing>(p, 1, FpVector(p, {1}));
  EXPECT_EQ(mod.coeffs(), (std::vector<std::uint64_t>{1, 4, 0, 0, 0}));
  auto z = one_minus_g<IntegerRing>(p, 1, FpVector(p, {1}));
  EXPECT_EQ(z.coeffs(), (std::vector<BigInt>{1, -1, 0, 0, 0}));
}

TEST(GroupRing, Mul) {
  Prime p(5);
  auto x = one_minus_g<IntegerRing>(p, 1, FpVector(p, {1}));
  EXPECT_EQ(mul(x, GroupRingElem<IntegerRing>::identity(p, 1)), x);
  EXPECT_EQ(mul(x, x).coeffs(), (std::vector<BigInt>{1, -2, 1, 0, 0}));
  auto y = one_minus_g<ModPRing>(p, 1, FpVector(p, {1}));
  auto acc = GroupRingElem<ModPRing>::identity(p, 1);
  for (int i = 0; i < 5; ++i) acc = mul(acc, y);
  EXPECT_TRUE(acc.is_zero());
  EXPECT_THROW(mul(GroupRingElem<ModPRing>::identity(p, 2), y), RingMismatch);
  EXPECT_THROW(mul(GroupRingElem<ModPRing>::identity(Prime(7), 1), y), RingMismatch);
}

TEST(GroupRing, MulMatchesFactorApplication) {
  Rng rng(3);
  Prime p(5);
  for (int trial = 0; trial < 50; ++trial) {
    auto v = random_vector(p, 2, rng), w = random_vector(p, 2, rng);
    auto a = one_minus_g<IntegerRing>(p, 2, v);
    EXPECT_EQ(mul(a, one_minus_g<IntegerRing>(p, 2, w)), a.times_one_minus(w));
  }
}

TEST(GroupRing, ProductOfFactors) {
  Prime p(5);
  FactorSpec none{{FpVector(p, {1})}, {0}, {}};
  EXPECT_EQ(product_of_factors<ModPRing>(p, 1, none), GroupRingElem<ModPRing>::identity(p, 1));
  FactorSpec four{{FpVector(p, {1})}, {4}, {}};
  EXPECT_EQ(product_of_factors<ModPRing>(p, 1, four).coeffs(),
            (std::vector<std::uint64_t>{1, 1, 1, 1, 1}));
  auto id = FpMatrix::identity(p, 2);
  auto prod = product_of_factors<ModPRing>(p, 2, matrix_factors(id, {1, 1}, {1, 1}));
  EXPECT_FALSE(prod.is_zero());
  FactorSpec phased{{FpVector(p, {1})}, {1}, {{2}}};
  EXPECT_THROW(product_of_factors<ModPRing>(p, 1, phased), PhaseInNonCyclotomicRing);
  EXPECT_THROW(product_of_factors<IntegerRing>(p, 1, phased), PhaseInNonCyclotomicRing);
  FactorSpec bad_len{{FpVector(p, {1})}, {2}, {{2}}};
  EXPECT_THROW(product_of_factors<CyclotomicRing>(p, 1, bad_len), InputError);
  FactorSpec too_big{{FpVector(p, {1})}, {5}, {}};
  EXPECT_THROW(product_of_factors<ModPRing>(p, 1, too_big), InputError);
}

TEST(GroupRing, AgreesWithSparseOracle) {
  Rng rng(4);
  for (std::uint64_t q : {3, 5, 7}) {
    Prime p(q);
    for (std::size_t n = 1; n <= 2; ++n) {
      for (int trial = 0; trial < 40; ++trial) {
        FactorSpec spec;
        auto sparse = oracle::sparse_one(n);
        const auto factors = 1 + rng.below(4);
        for (std::uint64_t f = 0; f < factors; ++f) {
          auto v = random_vector(p, n, rng);
          const auto t = static_cast<unsigned>(rng.below(q));
          spec.vectors.push_back(v);
          spec.exponents.push_back(t);
          for (unsigned k = 0; k < t; ++k)
            sparse = oracle::sparse_mul(sparse, oracle::sparse_one_minus(as_vec(v), q), q);
        }
        auto z = product_of_factors<IntegerRing>(p, n, spec);
        auto fp = product_of_factors<ModPRing>(p, n, spec);
        for (std::size_t i = 0; i < z.size(); ++i) {
          auto key = as_vec(index_vector(p, n, i));
          const long long expected = sparse.count(key) ? sparse.at(key) : 0;
          ASSERT_EQ(z[i], BigInt(expected));
          // Ring homomorphism Z -> F_p.
          ASSERT_EQ(fp[i], static_cast<std::uint64_t>(oracle::mod(expected, q)));
        }
      }
    }
  }
}

TEST(GroupRing, PthPowerVanishesModP) {
  Rng rng(5);
  for (std::uint64_t q : {3, 5, 7}) {
    Prime p(q);
    for (int trial = 0; trial < 20; ++trial) {
      auto v = random_vector(p, 2, rng);
      if (v.is_zero()) continue;
      auto acc = GroupRingElem<ModPRing>::identity(p, 2);
      for (std::uint64_t i = 0; i < q; ++i) acc = acc.times_one_minus(v);
      EXPECT_TRUE(acc.is_zero());
      auto z = GroupRingElem<IntegerRing>::identity(p, 2);
      for (std::uint64_t i = 0; i < q; ++i) z = z.times_one_minus(v);
      EXPECT_FALSE(z.is_zero());
    }
  }
}

TEST(GroupRing, PhaseFreeCyclotomicMatchesInteger) {
  Rng rng(6);
  for (std::uint64_t q : {5, 7}) {
    Prime p(q);
    for (int trial = 0; trial < 30; ++trial) {
      FactorSpec spec;
      for (int f = 0; f < 3; ++f) {
        spec.vectors.push_back(random_vector(p, 2, rng));
        spec.exponents.push_back(static_cast<unsigned>(rng.below(3)));
        spec.phases.push_back(std::vector<std::uint64_t>(spec.exponents.back(), 0));
      }
      auto cyc = product_of_factors<CyclotomicRing>(p, 2, spec);
      auto plain = spec;
      plain.phases.clear();
      auto z = product_of_factors<IntegerRing>(p, 2, plain);
      EXPECT_EQ(cyc.is_zero(), z.is_zero());
      for (std::size_t i = 0; i < z.size(); ++i)
        EXPECT_EQ(cyc[i], CyclotomicInt::integer(p, z[i]));
    }
  }
}

TEST(CheckP3, Examples) {
  Prime p(5);
  FpMatrix one(p, {{1}});
  EXPECT_FALSE(check_p3(one, {{0}}, {{0}}));
  EXPECT_TRUE(check_p3(one, {{0, 1, 2}}, {{3, 4}}));
  EXPECT_EQ(check_p3(one, {{0}}, {{0}}), check_p3_integer(one));
  EXPECT_THROW(check_p3(FpMatrix(p, {{1, 2}, {2, 4}}), {{0}, {0}}, {{0}, {0}}), SingularMatrix);
}

TEST(CheckP4, Examples) {
  Prime p(5);
  FpMatrix one(p, {{1}});
  EXPECT_TRUE(check_p4(one, {3}, {2}));
  EXPECT_FALSE(check_p4(one, {1}, {1}));
  EXPECT_FALSE(check_p3_integer(one));
  std::size_t nonzero_p4 = 0, nonzero_z = 0;
  for_each_nonsingular(p, 2, Budget{}, [&](const FpMatrix& m) {
    nonzero_p4 += !check_p4(m, {1, 1}, {1, 1});
    nonzero_z += !check_p3_integer(m);
    return true;
  });
  EXPECT_EQ(nonzero_p4, 480u);
  EXPECT_EQ(nonzero_z, 480u);
}

TEST(CheckP4, TableBudget) {
  Budget tiny;
  tiny.max_entries = 24;
  EXPECT_THROW(check_p4(FpMatrix::identity(Prime(5), 2), {1, 1}, {1, 1}, tiny), BudgetExceeded);
}

TEST(CheckP3, ImpliesP4) {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Prime p(trial % 2 ? 5 : 7);
    const std::size_t n = 1 + rng.below(2);
    auto m = random_nonsingular(p, n, rng);
    std::vector<std::vector<std::uint64_t>> c(n), d(n);
    for (auto* lists : {&c, &d})
      for (auto& row : *lists)
        for (std::uint64_t r = 0; r < p.value(); ++r)
          if (rng.below(2)) row.push_back(r);
    std::vector<unsigned> t, tp;
    for (auto& row : c) t.push_back(static_cast<unsigned>(row.size()));
    for (auto& row : d) tp.push_back(static_cast<unsigned>(row.size()));
    bool ok = true;
    for (auto x : t) ok &= x < p.value();
    for (auto x : tp) ok &= x < p.value();
    if (!ok) continue;
    if (check_p3(m, c, d)) EXPECT_TRUE(check_p4(m, t, tp));
  }
}

TEST(CheckP4, MultiplierInvariance) {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    Prime p(trial % 2 ? 5 : 7);
    const std::size_t n = 1 + rng.below(2);
    auto m = random_nonsingular(p, n, rng);
    std::vector<unsigned> t(n), tp(n);
    for (auto& x : t) x = static_cast<unsigned>(rng.below(p.value()));
    for (auto& x : tp) x = static_cast<unsigned>(rng.below(p.value()));
    auto spec = matrix_factors(m, t, tp);
    const bool base = product_of_factors<ModPRing>(p, n, spec).is_zero();
    for (auto& v : spec.vectors) v = v.scaled(rng.nonzero_residue(p.value()));
    EXPECT_EQ(product_of_factors<ModPRing>(p, n, spec).is_zero(), base);
  }
}

TEST(Sigma, Conventions) {
  Prime p(5);
  FpMatrix one(p, {{1}});
  auto s = sigma_of_factors(one);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0], GroupRingElem<ModPRing>::identity(p, 1));
  auto w = one_minus_g<ModPRing>(p, 1, FpVector(p, {1}));
  std::vector<std::uint64_t> two_w(w.coeffs());
  for (auto& c : two_w) c = p.mul(c, 2);
  EXPECT_EQ(s[1].coeffs(), two_w);
  EXPECT_EQ(s[2], w.times_one_minus(FpVector(p, {1})));
  EXPECT_FALSE(s[2].is_zero());
  EXPECT_FALSE(sigma_vanishing_candidate(one));
}

TEST(Sigma, TopEqualsFullProduct) {
  Rng rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    Prime p(trial % 2 ? 5 : 3);
    auto m = random_nonsingular(p, 2, rng);
    auto s = sigma_of_factors(m);
    EXPECT_EQ(s.back(), product_of_factors<ModPRing>(p, 2, matrix_factors(m, {1, 1}, {1, 1})));
  }
}

TEST(Sigma, MatchesSubsetExpansion) {
  // sigma_j = sum over j-subsets of the 2n factors of their product.
  Rng rng(10);
  Prime p(5);
  auto m = random_nonsingular(p, 2, rng);
  std::vector<FpVector> ws{FpVector::unit(p, 2, 0), FpVector::unit(p, 2, 1), m.row(0), m.row(1)};
  auto s = sigma_of_factors(m);
  for (std::size_t j = 0; j <= 4; ++j) {
    std::vector<std::uint64_t> acc(25, 0);
    for (unsigned mask = 0; mask < 16; ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != j) continue;
      auto prod = GroupRingElem<ModPRing>::identity(p, 2);
      for (int b = 0; b < 4; ++b)
        if (mask >> b & 1) prod = prod.times_one_minus(ws[b]);
      for (std::size_t u = 0; u < 25; ++u) acc[u] = p.add(acc[u], prod[u]);
    }
    EXPECT_EQ(s[j].coeffs(), acc) << j;
  }
}

TEST(Sigma, SmallPrimeCandidateNeedsAllHigh) {
  // With p = 3, n = 2 the range i <= p-1 = 2 only reaches sigma_4..sigma_2.
  Prime p(3);
  std::size_t candidates = 0;
  for_each_nonsingular(p, 2, Budget{}, [&](const FpMatrix& m) {
    auto s = sigma_of_factors(m);
    const bool expected = s[4].is_zero() && s[3].is_zero() && s[2].is_zero();
    EXPECT_EQ(sigma_vanishing_candidate(m), expected);
    candidates += expected;
    return true;
  });
  SUCCEED() << candidates;
}

TEST(DeleteOne, Scan) {
  Prime p(5);
  for_each_nonsingular(p, 2, Budget{}, [&](const FpMatrix& m) {
    auto r = delete_one_factor_scan(m, 1);
    EXPECT_EQ(r.zero_after_delete.size(), 2u);
    EXPECT_FALSE(r.full_product_zero);
    for (bool z : r.zero_after_delete) EXPECT_FALSE(z);
    return true;
  });
  auto r = delete_one_factor_scan(FpMatrix(p, {{1}}), 3);
  ASSERT_EQ(r.zero_after_delete.size(), 1u);
  EXPECT_FALSE(r.zero_after_delete[0]);
}

TEST(GroupRing, JsonDump) {
  Prime p(5);
  auto x = one_minus_g<IntegerRing>(p, 1, FpVector(p, {1}));
  auto j = to_json(x);
  EXPECT_EQ(j["ring"], "Z");
  ASSERT_EQ(j["nonzero"].size(), 2u);
  EXPECT_EQ(j["nonzero"][1]["vector"], nlohmann::json::array({1}));
  EXPECT_EQ(j["nonzero"][1]["coeff"], -1);
  auto c = GroupRingElem<CyclotomicRing>::identity(p, 1).times_one_minus(FpVector(p, {1}), 1);
  auto jc = to_json(c);
  EXPECT_EQ(jc["nonzero"][1]["coeff"], nlohmann::json::array({0, -1, 0, 0}));
}
