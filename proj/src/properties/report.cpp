#include <algorithm>
#include <mutex>
#include <thread>

#include "ajt/errors.hpp"
#include "ajt/group_ring.hpp"
#include "ajt/poly.hpp"
#include "ajt/properties.hpp"

namespace ajt {

nlohmann::json matrix_json(const FpMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) rows.push_back(vector_json(m.row(i)));
  return {{"p", m.prime().value()}, {"n", m.dim()}, {"rows", rows}};
}

nlohmann::json vector_json(const FpVector& v) {
  return nlohmann::json(std::vector<std::uint64_t>(v.residues().begin(), v.residues().end()));
}

std::vector<std::string> implication_violations(bool p1, bool p2, bool p3, bool p4, bool p5) {
  std::vector<std::string> out;
  if (p1 != p2) out.emplace_back("P1 != P2");
  if (p2 != p3) out.emplace_back("P2 != P3");
  if (p3 && !p4) out.emplace_back("P3 without P4");
  if (p4 && !p5) out.emplace_back("P4 without P5");
  return out;
}

PropertyReport check_all(const FpMatrix& m, const ForbiddenSpec& spec, const Budget& budget) {
  if (m.prime().value() <= 3) throw PreconditionViolated("check_all needs p > 3");
  auto witness = check_p1(m, spec, budget);
  const auto t = spec.t(), tp = spec.t_prime();
  PropertyReport r{m,
                   spec,
                   !witness.has_value(),
                   witness,
                   check_p2(m, spec.c, spec.d, budget),
                   check_p3(m, spec.c, spec.d, budget),
                   check_p4(m, t, tp, budget),
                   check_p5(m, t, tp, budget),
                   {}};
  r.violations = implication_violations(r.p1, r.p2, r.p3, r.p4, r.p5);
  return r;
}

nlohmann::json PropertyReport::to_json() const {
  return {{"matrix", matrix_json(matrix)},
          {"spec", {{"c", spec.c}, {"d", spec.d}}},
          {"P1", {{"vanishes", p1}, {"witness", witness ? vector_json(*witness) : nlohmann::json()}}},
          {"P2", p2},
          {"P3", p3},
          {"P4", p4},
          {"P5", p5},
          {"violations", violations}};
}

bool check_p4_scaled(const FpMatrix& m, const std::vector<unsigned>& t,
                     const std::vector<unsigned>& t_prime,
                     const std::vector<std::uint64_t>& lambda,
                     const std::vector<std::uint64_t>& mu, const Budget& budget) {
  const auto p = m.prime();
  const auto n = m.dim();
  if (!m.is_nonsingular()) throw SingularMatrix("matrix is singular");
  if (lambda.size() != n || mu.size() != n || t.size() != n || t_prime.size() != n)
    throw InputError("multiplier and exponent vectors need length n");
  FactorSpec spec;
  for (std::size_t i = 0; i < n; ++i) {
    if (lambda[i] % p.value() == 0) throw InputError("multiplier is zero mod p");
    spec.vectors.push_back(FpVector::unit(p, n, i).scaled(lambda[i]));
    spec.exponents.push_back(t[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (mu[i] % p.value() == 0) throw InputError("multiplier is zero mod p");
    spec.vectors.push_back(m.row(i).scaled(mu[i]));
    spec.exponents.push_back(t_prime[i]);
  }
  return product_of_factors<ModPRing>(p, n, spec, budget).is_zero();
}

InvarianceReport multiplier_invariance_test(const FpMatrix& m, const std::vector<unsigned>& t,
                                            const std::vector<unsigned>& t_prime,
                                            std::uint64_t trials, std::uint64_t seed,
                                            const Budget& budget) {
  const auto p = m.prime().value();
  InvarianceReport rep{seed, trials, check_p4(m, t, t_prime, budget), 0, std::nullopt};
  Rng rng(seed);
  for (std::uint64_t k = 0; k < trials; ++k) {
    std::vector<std::uint64_t> lambda(m.dim()), mu(m.dim());
    for (auto& x : lambda) x = rng.nonzero_residue(p);
    for (auto& x : mu) x = rng.nonzero_residue(p);
    if (check_p4_scaled(m, t, t_prime, lambda, mu, budget) != rep.base_value) {
      ++rep.mismatches;
      if (!rep.first_mismatch) rep.first_mismatch = {lambda, mu};
    }
  }
  return rep;
}

nlohmann::json InvarianceReport::to_json() const {
  nlohmann::json j = {{"seed", seed},
                      {"trials", trials},
                      {"P4", base_value},
                      {"mismatches", mismatches},
                      {"first_mismatch", nullptr}};
  if (first_mismatch)
    j["first_mismatch"] = {{"lambda", first_mismatch->first}, {"mu", first_mismatch->second}};
  return j;
}

namespace {

struct Outcome {
  bool positive = false;
  bool positive_integer = false;
  bool exception = false;
};

Outcome evaluate(const FpMatrix& m, SweepKind kind, const Budget& budget) {
  Outcome o;
  switch (kind) {
    case SweepKind::P1:
      o.positive = check_p1(m, ForbiddenSpec::defaults(m.dim()), budget).has_value();
      o.exception = !o.positive;
      break;
    case SweepKind::P4: {
      const std::vector<unsigned> ones(m.dim(), 1);
      o.positive = !check_p4(m, ones, ones, budget);
      o.positive_integer = !check_p3_integer(m, budget);
      o.exception = !o.positive || !o.positive_integer;
      break;
    }
    case SweepKind::Sigma:
      o.positive = sigma_vanishing_candidate(m, budget);
      o.exception = o.positive;
      break;
  }
  return o;
}

const char* kind_name(SweepKind k) {
  switch (k) {
    case SweepKind::P1: return "p1";
    case SweepKind::P4: return "p4";
    case SweepKind::Sigma: return "sigma";
  }
  return "";
}

}  // namespace

SweepReport sweep(Prime p, std::size_t n, SweepKind kind, unsigned threads,
                  const Budget& budget) {
  SweepReport rep;
  rep.p = p.value();
  rep.n = n;
  rep.kind = kind;
  threads = std::max(1u, threads);
  constexpr std::size_t kBatch = 4096;
  std::vector<FpMatrix> batch;
  std::vector<Outcome> out;

  auto flush = [&] {
    out.assign(batch.size(), Outcome{});
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < batch.size(); i += threads) out[i] = evaluate(batch[i], kind, budget);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    for (std::size_t i = 0; i < batch.size(); ++i) {
      rep.positive += out[i].positive;
      rep.positive_integer += out[i].positive_integer;
      if (out[i].exception) rep.exceptions.emplace_back(rep.matrices, batch[i]);
      ++rep.matrices;
    }
    batch.clear();
  };

  for_each_nonsingular(p, n, budget, [&](const FpMatrix& m) {
    batch.push_back(m);
    if (batch.size() == kBatch) flush();
    return true;
  });
  flush();
  return rep;
}

nlohmann::json SweepReport::to_json() const {
  nlohmann::json ex = nlohmann::json::array();
  for (const auto& [idx, m] : exceptions) ex.push_back({{"index", idx}, {"matrix", matrix_json(m)}});
  nlohmann::json j = {{"p", p}, {"n", n}, {"what", kind_name(kind)}, {"matrices", matrices}};
  switch (kind) {
    case SweepKind::P1:
      j["witness_found"] = positive;
      j["witness_free"] = ex;
      break;
    case SweepKind::P4:
      j["nonzero_fp"] = positive;
      j["nonzero_z"] = positive_integer;
      j["vanishing"] = ex;
      break;
    case SweepKind::Sigma:
      j["candidates"] = positive;
      j["candidate_matrices"] = ex;
      break;
  }
  return j;
}

}  // namespace ajt
