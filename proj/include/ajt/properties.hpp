#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ajt/budget.hpp"
#include "ajt/fp.hpp"
#include "ajt/matrix.hpp"
#include "ajt/rng.hpp"
#include "json.hpp"

namespace ajt {

using ResidueLists = std::vector<std::vector<std::uint64_t>>;

// Forbidden values for x_i (c) and for <a_i, x> (d). An empty list leaves
// the coordinate unconstrained.
struct ForbiddenSpec {
  ResidueLists c;
  ResidueLists d;

  // c_i = d_i = {0}.
  static ForbiddenSpec defaults(std::size_t n);
  // Each list is a uniformly random subset with size uniform in [0, p-1].
  static ForbiddenSpec random(Prime p, std::size_t n, Rng& rng);

  // Throws InputError on wrong row count, residues >= p, repeats, or a list
  // longer than p-1.
  void validate(Prime p, std::size_t n) const;
  std::vector<unsigned> t() const;
  std::vector<unsigned> t_prime() const;
};

// Some x with x_i outside c_i for every i < n and <rows_j, x> outside d_j for
// every row, in lexicographic order of the search. Coordinates are visited
// by ascending number of allowed values. Rows may outnumber coordinates.
std::optional<FpVector> find_avoiding_vector(Prime p, std::size_t n, const ResidueLists& c,
                                             const std::vector<FpVector>& rows,
                                             const ResidueLists& d,
                                             const Budget& budget = Budget{});

// Witness against the vanishing statement (P1); empty when none exists.
std::optional<FpVector> check_p1(const FpMatrix& m, const ForbiddenSpec& spec,
                                 const Budget& budget = Budget{});

// x with every M_i x nowhere-zero; x itself is unconstrained.
std::optional<FpVector> check_multi(const std::vector<FpMatrix>& ms,
                                    const Budget& budget = Budget{});

// Dense function F_p^n -> F_p, indexed like the group-ring tables.
struct FunctionTable {
  Prime prime;
  std::size_t n;
  std::vector<std::uint64_t> values;

  FunctionTable(Prime p, std::size_t n, std::vector<std::uint64_t> values);
  static FunctionTable zero(Prime p, std::size_t n, const Budget& budget = Budget{});
  static FunctionTable random(Prime p, std::size_t n, Rng& rng, const Budget& budget = Budget{});

  std::size_t size() const noexcept { return values.size(); }
  friend bool operator==(const FunctionTable&, const FunctionTable&) = default;
};

// f(x) - f(x + v).
FunctionTable delta(const FunctionTable& f, const FpVector& v);
// Every line {x + t v} along every listed direction sums to zero.
bool line_sums_zero(const FunctionTable& f, const std::vector<FpVector>& directions);

// Image of delta_1 o ... o delta_n, decided from line sums along e_i.
bool image_membership_by_line_sums(const FunctionTable& f);
// Same set, decided by every interpolated exponent being at most p-2.
bool image_membership_by_degree(const FunctionTable& f);
// Runs both routes; throws std::logic_error if they disagree.
bool image_membership_delta(const FunctionTable& f);

struct PairingReport {
  std::uint64_t seed;
  std::uint64_t trials;
  std::vector<unsigned> t;
  std::vector<unsigned> t_prime;
  bool p4;
  std::uint64_t nonzero_pairings;
  // Set when P4 holds and a sampled pairing is nonzero.
  bool violation;
  nlohmann::json to_json() const;
};

// f has degree at most p-1-t_i in x_i; g has degree at most p-1-t'_i in
// y_i = <a'_i, x>, with a'_i the columns of M^{-1}. Counts nonzero sums of f*g.
PairingReport pairing_test(const FpMatrix& m, const std::vector<unsigned>& t,
                           const std::vector<unsigned>& t_prime, std::uint64_t trials,
                           std::uint64_t seed, const Budget& budget = Budget{});
PairingReport pairing_test(const FpMatrix& m, std::uint64_t trials, std::uint64_t seed,
                           const Budget& budget = Budget{});
std::uint64_t pairing(const FunctionTable& f, const FunctionTable& g);

struct PropertyReport {
  FpMatrix matrix;
  ForbiddenSpec spec;
  // Each flag is the vanishing statement; p1 is true when no witness exists.
  bool p1;
  std::optional<FpVector> witness;
  bool p2;
  bool p3;
  bool p4;
  bool p5;
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
  nlohmann::json to_json() const;
};

// Requires p > 3 and a nonsingular matrix.
PropertyReport check_all(const FpMatrix& m, const ForbiddenSpec& spec,
                         const Budget& budget = Budget{});
std::vector<std::string> implication_violations(bool p1, bool p2, bool p3, bool p4, bool p5);

struct InvarianceReport {
  std::uint64_t seed;
  std::uint64_t trials;
  bool base_value;
  std::uint64_t mismatches;
  // (lambda, mu) of the first mismatch.
  std::optional<std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>> first_mismatch;
  nlohmann::json to_json() const;
};

// P4 on the factors lambda_i e_i and mu_i a_i against the unscaled value.
bool check_p4_scaled(const FpMatrix& m, const std::vector<unsigned>& t,
                     const std::vector<unsigned>& t_prime,
                     const std::vector<std::uint64_t>& lambda,
                     const std::vector<std::uint64_t>& mu, const Budget& budget = Budget{});
InvarianceReport multiplier_invariance_test(const FpMatrix& m, const std::vector<unsigned>& t,
                                            const std::vector<unsigned>& t_prime,
                                            std::uint64_t trials, std::uint64_t seed,
                                            const Budget& budget = Budget{});

enum class SweepKind { P1, P4, Sigma };

struct SweepReport {
  std::uint64_t p;
  std::size_t n;
  SweepKind kind;
  std::uint64_t matrices = 0;
  // P1: witnesses found. P4: nonzero F_p products. Sigma: candidates.
  std::uint64_t positive = 0;
  // P4 only: nonzero products over Z.
  std::uint64_t positive_integer = 0;
  // Matrices outside the expected outcome, with their enumeration index:
  // witness-free (P1), a vanishing product (P4), or a sigma candidate.
  std::vector<std::pair<std::uint64_t, FpMatrix>> exceptions;
  nlohmann::json to_json() const;
};

// All nonsingular n x n matrices in lexicographic order, checked in parallel
// batches; the report does not depend on the thread count.
SweepReport sweep(Prime p, std::size_t n, SweepKind kind, unsigned threads = 1,
                  const Budget& budget = Budget{});

nlohmann::json matrix_json(const FpMatrix& m);
nlohmann::json vector_json(const FpVector& v);

}  // namespace ajt
