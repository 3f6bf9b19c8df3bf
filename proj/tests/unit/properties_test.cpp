#include <gtest/gtest.h>

#include "ajt/errors.hpp"
#include "ajt/group_ring.hpp"
#include "ajt/poly.hpp"
#include "ajt/properties.hpp"

using namespace ajt;

namespace {

// All of F_p^n in table order.
std::vector<FpVector> all_vectors(Prime p, std::size_t n) {
  std::vector<FpVector> out;
  for (std::size_t i = 0; i < saturating_pow(p.value(), n); ++i) out.push_back(index_vector(p, n, i));
  return out;
}

bool contains(const std::vector<std::uint64_t>& l, std::uint64_t x) {
  return std::find(l.begin(), l.end(), x) != l.end();
}

bool avoids(const FpVector& x, const ResidueLists& c, const std::vector<FpVector>& rows,
            const ResidueLists& d) {
  for (std::size_t i = 0; i < c.size(); ++i)
    if (contains(c[i], x[i])) return false;
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (contains(d[r], rows[r].dot(x))) return false;
  return true;
}

std::vector<FpVector> rows_of(const FpMatrix& m) {
  std::vector<FpVector> r;
  for (std::size_t i = 0; i < m.dim(); ++i) r.push_back(m.row(i));
  return r;
}

bool brute_exists(const FpMatrix& m, const ForbiddenSpec& s) {
  for (const auto& x : all_vectors(m.prime(), m.dim()))
    if (avoids(x, s.c, rows_of(m), s.d)) return true;
  return false;
}

FunctionTable from_poly(const ReducedPoly& f) {
  return FunctionTable(f.prime(), f.vars(), evaluate_all(f));
}

}  // namespace

TEST(CheckP1, Examples) {
  Prime p(5);
  auto w = check_p1(FpMatrix::identity(p, 2), ForbiddenSpec::defaults(2));
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, FpVector(p, {1, 1}));
  EXPECT_FALSE(check_p1(FpMatrix(p, {{1}}), ForbiddenSpec{{{0, 1, 2}}, {{3, 4}}}));
  EXPECT_THROW(check_p1(FpMatrix(p, {{1, 2}, {2, 4}}), ForbiddenSpec::defaults(2)), SingularMatrix);
  EXPECT_THROW(check_p1(FpMatrix(p, {{1}}), ForbiddenSpec{{{0, 0}}, {{1}}}), InputError);
  EXPECT_THROW(check_p1(FpMatrix(p, {{1}}), ForbiddenSpec{{{0, 1, 2, 3, 4}}, {{1}}}), InputError);
  EXPECT_THROW(check_p1(FpMatrix(p, {{1}}), ForbiddenSpec{{{7}}, {{1}}}), InputError);
}

TEST(CheckP1, SmallPrimesAccepted) {
  Prime two(2), three(3);
  EXPECT_TRUE(check_p1(FpMatrix(two, {{1}}), ForbiddenSpec::defaults(1)));
  // x = (1, 1) is the only nowhere-zero vector and Mx = (0, 1).
  EXPECT_FALSE(check_p1(FpMatrix(two, {{1, 1}, {0, 1}}), ForbiddenSpec::defaults(2)));
  EXPECT_TRUE(check_p1(FpMatrix(three, {{1}}), ForbiddenSpec::defaults(1)));
}

TEST(CheckP1, AgreesWithBruteForce) {
  Rng rng(11);
  int absent = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    Prime p(trial % 3 == 0 ? 3 : (trial % 3 == 1 ? 5 : 7));
    const std::size_t n = 1 + rng.below(3);
    const auto m = random_nonsingular(p, n, rng);
    const auto s = ForbiddenSpec::random(p, n, rng);
    const auto w = check_p1(m, s);
    ASSERT_EQ(w.has_value(), brute_exists(m, s));
    if (w) ASSERT_TRUE(avoids(*w, s.c, rows_of(m), s.d));
    absent += !w;
  }
  EXPECT_GT(absent, 100);
}

TEST(CheckP1, NodeBudget) {
  Prime p(7);
  Budget b;
  b.max_nodes = 3;
  ForbiddenSpec covering{{{}, {}, {}}, {{0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 5}, {0}}};
  EXPECT_THROW(check_p1(FpMatrix::identity(p, 3), covering, b), BudgetExceeded);
}

TEST(FindAvoiding, RectangularAgreesWithBruteForce) {
  Rng rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    Prime p(trial % 2 ? 5 : 7);
    const std::size_t n = 1 + rng.below(2);
    const std::size_t k = 1 + rng.below(4);
    std::vector<FpVector> rows;
    ResidueLists c(n), d;
    for (std::size_t r = 0; r < k * n; ++r) {
      std::vector<std::uint64_t> e(n);
      for (auto& x : e) x = rng.below(p.value());
      rows.emplace_back(p, e);
      d.push_back(rng.below(3) ? std::vector<std::uint64_t>{0} : std::vector<std::uint64_t>{});
    }
    for (auto& l : c)
      if (rng.below(2)) l.push_back(rng.below(p.value()));
    bool expected = false;
    for (const auto& x : all_vectors(p, n)) expected = expected || avoids(x, c, rows, d);
    const auto w = find_avoiding_vector(p, n, c, rows, d);
    ASSERT_EQ(w.has_value(), expected);
    if (w) ASSERT_TRUE(avoids(*w, c, rows, d));
  }
}

TEST(CheckMulti, Examples) {
  Prime p(7);
  auto id = FpMatrix::identity(p, 3);
  auto w = check_multi({id, id, id});
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, FpVector(p, {1, 1, 1}));
  EXPECT_THROW(check_multi({}), InputError);
  EXPECT_THROW(check_multi({id, FpMatrix::identity(Prime(5), 3)}), InputError);
}

TEST(CheckMulti, SingleMatrixMatchesUnconstrainedP1) {
  Rng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    Prime p(trial % 2 ? 3 : 5);
    const std::size_t n = 1 + rng.below(3);
    const auto m = random_nonsingular(p, n, rng);
    const ForbiddenSpec s{ResidueLists(n), ResidueLists(n, {0})};
    EXPECT_EQ(check_multi({m}), check_p1(m, s));
  }
}

TEST(CheckMulti, RandomTriplesAtSeven) {
  Rng rng(14);
  int found = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    Prime p(7);
    std::vector<FpMatrix> ms;
    for (int k = 0; k < 3; ++k) ms.push_back(random_nonsingular(p, 2, rng));
    const auto w = check_multi(ms);
    bool expected = false;
    for (const auto& x : all_vectors(p, 2)) {
      bool ok = true;
      for (const auto& m : ms) ok = ok && (m * x).is_nowhere_zero();
      expected = expected || ok;
    }
    ASSERT_EQ(w.has_value(), expected);
    found += w.has_value();
  }
  RecordProperty("witness_rate", found);
}

TEST(Delta, Examples) {
  Prime p(5);
  Rng rng(15);
  const auto zero = FunctionTable::zero(p, 2);
  const FunctionTable constant(p, 2, std::vector<std::uint64_t>(25, 3));
  EXPECT_EQ(delta(constant, FpVector(p, {1, 2})), zero);
  for (int trial = 0; trial < 50; ++trial) {
    auto f = FunctionTable::random(p, 2, rng);
    const FpVector v(p, std::vector<std::uint64_t>{rng.below(5), rng.below(5)});
    auto g = f;
    for (int k = 0; k < 5; ++k) g = delta(g, v);
    EXPECT_EQ(g, zero);
    const FpVector u(p, std::vector<std::uint64_t>{rng.below(5), rng.below(5)});
    EXPECT_EQ(delta(delta(f, u), v), delta(delta(f, v), u));
  }
  EXPECT_THROW(FunctionTable(p, 2, std::vector<std::uint64_t>(24, 0)), InputError);
}

TEST(LineSums, Examples) {
  Prime p(5);
  const std::vector<FpVector> basis{FpVector::unit(p, 2, 0), FpVector::unit(p, 2, 1)};
  EXPECT_TRUE(line_sums_zero(FunctionTable::zero(p, 2), basis));
  std::vector<std::uint64_t> point(25, 0);
  point[7] = 1;
  EXPECT_FALSE(line_sums_zero(FunctionTable(p, 2, point), basis));
  const auto x1 = from_poly(ReducedPoly::variable(p, 2, 0));
  EXPECT_TRUE(line_sums_zero(x1, basis));
}

TEST(ImageMembership, Examples) {
  Prime p(5);
  EXPECT_TRUE(image_membership_delta(FunctionTable::zero(p, 2)));
  EXPECT_FALSE(image_membership_delta(from_poly(ReducedPoly::term(p, {4, 1}, 1))));
  EXPECT_TRUE(image_membership_delta(from_poly(ReducedPoly::term(p, {3, 3}, 2))));
}

TEST(ImageMembership, RoutesAgreeOnMixedTables) {
  Prime p(5);
  Rng rng(16);
  const FpVector e1 = FpVector::unit(p, 2, 0), e2 = FpVector::unit(p, 2, 1);
  int inside = 0;
  for (int trial = 0; trial < 1200; ++trial) {
    auto f = FunctionTable::random(p, 2, rng);
    if (trial % 3 == 1) f = delta(delta(f, e1), e2);
    if (trial % 3 == 2) {
      // An image element plus a small perturbation at one point.
      f = delta(delta(f, e1), e2);
      f.values[rng.below(25)] = rng.below(5);
    }
    const bool a = image_membership_by_line_sums(f);
    ASSERT_EQ(a, image_membership_by_degree(f));
    inside += a;
  }
  EXPECT_GE(inside, 400);
  EXPECT_LT(inside, 1200);
}

TEST(Pairing, ZeroFunction) {
  Prime p(5);
  Rng rng(17);
  EXPECT_EQ(pairing(FunctionTable::zero(p, 2), FunctionTable::random(p, 2, rng)), 0u);
}

TEST(Pairing, ExhaustiveNonzeroPairAtFive) {
  // M = [1] fails P4, so some f, g of degree <= 3 pair to a nonzero value.
  Prime p(5);
  const FpMatrix m(p, {{1}});
  EXPECT_FALSE(check_p4(m, {1}, {1}));
  std::vector<FunctionTable> polys;
  for (std::uint64_t code = 0; code < 625; ++code) {
    ReducedPoly f(p, 1);
    auto c = code;
    for (std::uint64_t e = 0; e < 4; ++e, c /= 5) f.accumulate({e}, static_cast<std::int64_t>(c % 5));
    polys.push_back(from_poly(f));
  }
  std::uint64_t nonzero = 0;
  for (const auto& f : polys)
    for (const auto& g : polys) nonzero += pairing(f, g) != 0;
  EXPECT_GT(nonzero, 0u);
  auto rep = pairing_test(m, 50, 1);
  EXPECT_FALSE(rep.p4);
  EXPECT_GT(rep.nonzero_pairings, 0u);
  EXPECT_FALSE(rep.violation);
}

TEST(Pairing, VanishesWhenP4Holds) {
  Prime p(5);
  auto rep = pairing_test(FpMatrix(p, {{1}}), {3}, {2}, 200, 2);
  EXPECT_TRUE(rep.p4);
  EXPECT_EQ(rep.nonzero_pairings, 0u);
  Rng rng(18);
  int p4_true = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Prime q(trial % 2 ? 5 : 7);
    const std::size_t n = 1 + rng.below(2);
    const auto m = random_nonsingular(q, n, rng);
    std::vector<unsigned> t(n), tp(n);
    for (auto& x : t) x = static_cast<unsigned>(rng.below(q.value()));
    for (auto& x : tp) x = static_cast<unsigned>(rng.below(q.value()));
    const auto r = pairing_test(m, t, tp, 5, trial);
    ASSERT_FALSE(r.violation);
    p4_true += r.p4;
  }
  EXPECT_GT(p4_true, 20);
}

TEST(Pairing, UnitExponentsAtFiveByTwo) {
  Prime p(5);
  Rng rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const auto r = pairing_test(random_nonsingular(p, 2, rng), 20, trial);
    EXPECT_FALSE(r.p4);
    EXPECT_FALSE(r.violation);
    EXPECT_GT(r.nonzero_pairings, 0u);
  }
}

TEST(CheckAll, Examples) {
  Prime p(5);
  const FpMatrix one(p, {{1}});
  auto r = check_all(one, ForbiddenSpec::defaults(1));
  EXPECT_FALSE(r.p1);
  EXPECT_FALSE(r.p2);
  EXPECT_FALSE(r.p3);
  EXPECT_FALSE(r.p4);
  EXPECT_FALSE(r.p5);
  EXPECT_TRUE(r.ok());
  ASSERT_TRUE(r.witness);
  auto cover = check_all(one, ForbiddenSpec{{{0, 1, 2}}, {{3, 4}}});
  EXPECT_TRUE(cover.p1 && cover.p2 && cover.p3 && cover.p4 && cover.p5);
  EXPECT_TRUE(cover.ok());
  EXPECT_THROW(check_all(FpMatrix(Prime(3), {{1}}), ForbiddenSpec::defaults(1)),
               PreconditionViolated);
  const auto j = r.to_json();
  EXPECT_EQ(j["P1"]["vanishes"], false);
  EXPECT_EQ(j["P1"]["witness"], nlohmann::json::array({1}));
  EXPECT_EQ(j["violations"].size(), 0u);
  EXPECT_EQ(j["matrix"]["rows"][0][0], 1);
}

TEST(CheckAll, ViolationFlags) {
  EXPECT_TRUE(implication_violations(true, true, true, true, true).empty());
  EXPECT_TRUE(implication_violations(false, false, false, true, true).empty());
  EXPECT_EQ(implication_violations(true, false, false, false, false).size(), 1u);
  EXPECT_EQ(implication_violations(false, false, true, false, false).size(), 2u);
  EXPECT_EQ(implication_violations(false, false, false, true, false).size(), 1u);
}

TEST(CheckAll, RandomInstancesHaveNoViolations) {
  Rng rng(20);
  int vanishing = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    Prime p(trial % 2 ? 5 : 7);
    const std::size_t n = 1 + rng.below(2);
    const auto m = random_nonsingular(p, n, rng);
    const auto r = check_all(m, ForbiddenSpec::random(p, n, rng));
    ASSERT_TRUE(r.ok()) << r.to_json().dump();
    ASSERT_EQ(r.p1, !brute_exists(m, r.spec));
    vanishing += r.p1;
  }
  EXPECT_GT(vanishing, 100);
}

TEST(MultiplierInvariance, Examples) {
  Prime p(5);
  const FpMatrix one(p, {{1}});
  EXPECT_EQ(check_p4_scaled(one, {1}, {1}, {1}, {1}), check_p4(one, {1}, {1}));
  for (std::uint64_t l = 1; l < 5; ++l)
    for (std::uint64_t u = 1; u < 5; ++u) EXPECT_TRUE(check_p4_scaled(one, {3}, {2}, {l}, {u}));
  EXPECT_THROW(check_p4_scaled(one, {1}, {1}, {0}, {1}), InputError);
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    Prime q(trial % 2 ? 5 : 7);
    const std::size_t n = 1 + rng.below(2);
    const auto m = random_nonsingular(q, n, rng);
    std::vector<unsigned> t(n), tp(n);
    for (auto& x : t) x = static_cast<unsigned>(rng.below(q.value()));
    for (auto& x : tp) x = static_cast<unsigned>(rng.below(q.value()));
    const auto r = multiplier_invariance_test(m, t, tp, 3, trial);
    EXPECT_EQ(r.mismatches, 0u);
  }
}

TEST(Sweep, FiveByTwo) {
  Prime p(5);
  const auto p1 = sweep(p, 2, SweepKind::P1, 1);
  EXPECT_EQ(p1.matrices, 480u);
  EXPECT_EQ(p1.positive, 480u);
  EXPECT_TRUE(p1.exceptions.empty());
  const auto p4 = sweep(p, 2, SweepKind::P4, 3);
  EXPECT_EQ(p4.positive, 480u);
  EXPECT_EQ(p4.positive_integer, 480u);
  EXPECT_EQ(p4.to_json()["nonzero_fp"], 480);
}

TEST(Sweep, SevenByTwoWitnesses) {
  const auto r = sweep(Prime(7), 2, SweepKind::P1, 4);
  EXPECT_EQ(r.matrices, 2016u);
  EXPECT_EQ(r.positive, 2016u);
}

TEST(Sweep, ThreeByTwoReportsWitnessFreeMatrices) {
  const auto a = sweep(Prime(3), 2, SweepKind::P1, 1);
  const auto b = sweep(Prime(3), 2, SweepKind::P1, 5);
  EXPECT_EQ(a.matrices, 48u);
  EXPECT_EQ(a.to_json(), b.to_json());
  // Oracle count of matrices over F_3 with no nowhere-zero x, Mx.
  std::uint64_t expected = 0;
  for (const auto& m : enumerate_nonsingular(Prime(3), 2, Budget{}))
    expected += !brute_exists(m, ForbiddenSpec::defaults(2));
  EXPECT_EQ(a.exceptions.size(), expected);
  EXPECT_EQ(a.positive + expected, 48u);
}

TEST(Sweep, Budget) {
  Budget b;
  b.max_enumeration = 10;
  EXPECT_THROW(sweep(Prime(5), 2, SweepKind::P1, 1, b), BudgetExceeded);
}
