#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ajt/budget.hpp"
#include "ajt/fp.hpp"

namespace ajt {

class Rng;

// Subset of F_p as a p-bit vector with a cached cardinality.
class ResidueSet {
 public:
  explicit ResidueSet(Prime p);
  // Values are reduced mod p; duplicates collapse.
  ResidueSet(Prime p, std::initializer_list<std::int64_t> values);
  ResidueSet(Prime p, const std::vector<std::int64_t>& values);

  static ResidueSet full(Prime p);

  Prime prime() const noexcept { return prime_; }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  bool contains(std::uint64_t r) const noexcept { return (words_[r >> 6] >> (r & 63)) & 1; }
  void insert(std::uint64_t r);
  void erase(std::uint64_t r);

  // First member m with m >= from, or p when there is none.
  std::uint64_t next_member(std::uint64_t from) const noexcept;

  // Ascending residues.
  std::vector<std::uint64_t> elements() const;

  // {a + c : a in A} and {lambda * a : a in A}.
  ResidueSet shifted(std::int64_t c) const;
  ResidueSet dilated(std::uint64_t lambda) const;

  bool is_subset_of(const ResidueSet& o) const;
  bool intersects(const ResidueSet& o) const;
  ResidueSet united(const ResidueSet& o) const;

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

 private:
  Prime prime_;
  std::vector<std::uint64_t> words_;
  std::size_t count_ = 0;
};

std::ostream& operator<<(std::ostream& os, const ResidueSet& s);

// element + i*step lies in the set for -radius <= i <= radius (S-witness)
// or for 1 <= i <= radius (N-witness, element outside the set).
struct ApWitness {
  std::uint64_t element;
  std::uint64_t step;
  unsigned radius;
  friend bool operator==(const ApWitness&, const ApWitness&) = default;
};

struct SkCheck {
  // One witness per member, ascending by element; complete only when ok.
  std::vector<ApWitness> witnesses;
  std::optional<std::uint64_t> failing_element;
  bool ok() const noexcept { return !failing_element.has_value(); }
  explicit operator bool() const noexcept { return ok(); }
};

struct NkCheck {
  SkCheck inside;
  // One witness per non-member b, ascending by b.
  std::vector<ApWitness> outside;
  std::optional<std::uint64_t> failing_outside;
  bool ok() const noexcept { return inside.ok() && !failing_outside.has_value(); }
  explicit operator bool() const noexcept { return ok(); }
};

// Steps are tried in ascending order 1..p-1 and the first hit is kept.
// Throws RadiusTooLarge when p < 2k+1.
SkCheck is_sk_type(const ResidueSet& a, unsigned k);
NkCheck is_nk_type(const ResidueSet& a, unsigned k);

// The logarithmic-size S_1-type set: {-1, 0, 1, (p-1)/2} together with the
// halving chain m, m/2, ..., 1 and its negatives, where m = (p-1)/4 or (p+1)/4
// by p mod 4. Requires p >= 5 (PreconditionViolated otherwise).
ResidueSet build_s1_log(Prime p);

struct SkBuild {
  ResidueSet set;
  std::uint64_t x;
  SkCheck certificate;
};

// Staged construction with x = ceil(p^(1/(4k+4))), certified before return.
// Throws PreconditionViolated for k < 2 and ConstructionFailed when the
// certification fails.
SkBuild build_sk(Prime p, unsigned k);

struct Partition {
  Prime prime;
  std::vector<ResidueSet> parts;
  std::uint64_t seed;
  std::uint64_t attempts;
};

// Each residue goes to a uniformly random part; whole partitions are redrawn
// until every part is N_k-type. Throws PartitionNotFound after max_tries.
Partition partition_nk(Prime p, unsigned k, std::size_t parts, std::uint64_t seed,
                       std::uint64_t max_tries);

struct MinS1Result {
  std::size_t size;
  ResidueSet set;
  bool proven_optimal;
  std::uint64_t nodes;
};

// Branch and bound for the smallest S_1-type set. Every S_1-type set is an
// affine image of one containing {-1, 0, 1}, so the search is restricted to
// those. Sizes are tried in increasing order; a size is ruled out only when
// its tree was exhausted within budget.max_nodes. When the budget runs out
// the best set known is returned with proven_optimal = false.
MinS1Result min_s1_search(Prime p, const Budget& budget, unsigned threads = 1);

// Finds lambda in (F_p^*)^n with sum x_i e_i != sum lambda_i y_i f_i for all
// x_i in U_i, y_i in V_i. Each candidate is verified exhaustively over the
// smaller side's tuples by solving for coordinates in the other basis.
// Throws PreconditionViolated (rank, 0 in a set, product bound) and NotFound.
std::vector<FpScalar> random_multipliers(const std::vector<FpVector>& e_basis,
                                         const std::vector<FpVector>& f_basis,
                                         const std::vector<ResidueSet>& u,
                                         const std::vector<ResidueSet>& v, std::uint64_t seed,
                                         std::uint64_t max_tries);

// True iff sum x_i e_i == sum y_i f_i for some x_i in U_i, y_i in V_i.
bool has_sum_collision(const std::vector<FpVector>& e_basis,
                       const std::vector<FpVector>& f_basis, const std::vector<ResidueSet>& u,
                       const std::vector<ResidueSet>& v);

struct GoodSubsets {
  std::vector<ResidueSet> a;
  std::vector<ResidueSet> b;
  std::vector<FpScalar> lambda;
};

// Sets A_i (S_k-type) and B_i (N_k-type) inside F_p^* such that no
// sum x_i e_i equals a sum y_i f_i with x_i in A_i, y_i in B_i.
GoodSubsets good_subsets(Prime p, unsigned k, const std::vector<FpVector>& e_basis,
                         const std::vector<FpVector>& f_basis, std::uint64_t seed = 1,
                         std::uint64_t max_tries = 1000);

struct AppendixRow {
  Prime prime;
  std::string construction;  // as printed
  ResidueSet set;
  std::size_t size;          // as printed
};

// Parses the appendix CSV (header "p,construction,size"). Throws InputError.
std::vector<AppendixRow> parse_appendix(std::string_view csv);
const std::vector<AppendixRow>& appendix_rows();
std::string_view appendix_csv();
std::optional<AppendixRow> appendix_row(std::uint64_t p);

struct AppendixRowReport {
  std::uint64_t p;
  std::size_t stated_size;
  std::size_t actual_size;
  bool s1_type;
  bool size_matches;
  bool square_below;  // size^2 < p - 1
  bool pass() const noexcept { return s1_type && size_matches && square_below; }
};

struct AppendixReport {
  std::vector<AppendixRowReport> rows;
  // The row primes are exactly the primes 61 < p < 199, p != 79, and 257.
  bool primes_match;
  bool pass() const noexcept;
};

AppendixReport verify_appendix();
AppendixReport verify_appendix(const std::vector<AppendixRow>& rows);

}  // namespace ajt
