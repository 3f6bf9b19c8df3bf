#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

#include "ajt/apsets.hpp"
#include "ajt/errors.hpp"

namespace ajt {
namespace {

constexpr std::size_t kNoBranch = std::numeric_limits<std::size_t>::max();

struct Shared {
  std::uint64_t max_nodes;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> out_of_budget{false};
  // Lowest top-level branch known to succeed; higher branches stop early.
  std::atomic<std::size_t> best_branch{kNoBranch};
};

struct Choice {
  std::uint64_t element;
  std::vector<std::uint64_t> steps;
};

// Depth-first completion of a partial set containing {-1, 0, 1} to an
// S_1-type set of at most `target` elements. Each node picks the unsatisfied
// member with the fewest feasible steps d in [1, (p-1)/2] and branches on d,
// adding a-d and a+d.
class Searcher {
 public:
  Searcher(Prime p, std::size_t target, Shared& shared)
      : p_(p), q_(p.value()), target_(target), shared_(shared), in_(q_, 0) {}

  void add(std::uint64_t r) {
    if (!in_[r]) {
      in_[r] = 1;
      members_.push_back(r);
    }
  }

  // Branching choice. With no steps, element 0 means every member is
  // satisfied and element p means a dead end.
  Choice choose() const {
    const std::size_t room = target_ - members_.size();
    Choice best{q_, {}};
    bool have = false;
    bool any_unsatisfied = false;
    std::vector<std::uint64_t> steps;
    for (auto a : members_) {
      if (satisfied(a)) continue;
      any_unsatisfied = true;
      if (room == 0) return Choice{q_, {}};
      steps.clear();
      for (std::uint64_t d = 1; d <= (q_ - 1) / 2; ++d) {
        const std::size_t need = !in_[(a + d) % q_] + !in_[(a + q_ - d) % q_];
        if (need <= room) steps.push_back(d);
      }
      if (steps.empty()) return Choice{q_, {}};
      if (!have || steps.size() < best.steps.size() ||
          (steps.size() == best.steps.size() && a < best.element)) {
        best = Choice{a, steps};
        have = true;
      }
    }
    if (!any_unsatisfied) return Choice{0, {}};
    return best;
  }

  bool satisfied(std::uint64_t a) const {
    for (auto x : members_) {
      if (x == a) continue;
      if (in_[(2 * a + q_ - x) % q_]) return true;
    }
    return false;
  }

  // Returns true when the current set was completed.
  bool descend(std::size_t branch) {
    if (shared_.out_of_budget.load(std::memory_order_relaxed)) return false;
    if (shared_.best_branch.load(std::memory_order_relaxed) < branch) return false;
    if (shared_.nodes.fetch_add(1, std::memory_order_relaxed) >= shared_.max_nodes) {
      shared_.out_of_budget = true;
      return false;
    }
    auto choice = choose();
    if (choice.steps.empty()) return choice.element == 0;
    for (auto d : choice.steps) {
      if (try_step(choice.element, d, branch)) return true;
    }
    return false;
  }

  bool try_step(std::uint64_t a, std::uint64_t d, std::size_t branch) {
    const auto before = members_.size();
    add((a + d) % q_);
    add((a + q_ - d) % q_);
    if (descend(branch)) return true;
    while (members_.size() > before) {
      in_[members_.back()] = 0;
      members_.pop_back();
    }
    return false;
  }

  ResidueSet result() const {
    ResidueSet s(p_);
    for (auto r : members_) s.insert(r);
    return s;
  }

 private:
  Prime p_;
  std::uint64_t q_;
  std::size_t target_;
  Shared& shared_;
  std::vector<char> in_;
  std::vector<std::uint64_t> members_;
};

enum class Outcome { kFound, kExhausted, kBudget };

Outcome search_size(Prime p, std::size_t target, Shared& shared, unsigned threads,
                    ResidueSet& found) {
  Searcher root(p, target, shared);
  root.add(p.value() - 1);
  root.add(0);
  root.add(1);
  auto top = root.choose();
  if (top.steps.empty()) {
    if (top.element == 0) {
      found = root.result();
      return Outcome::kFound;
    }
    return Outcome::kExhausted;
  }

  const std::size_t branches = top.steps.size();
  std::vector<std::optional<ResidueSet>> results(branches);
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  auto worker = [&] {
    while (true) {
      const auto i = next.fetch_add(1);
      if (i >= branches || i > shared.best_branch.load()) return;
      Searcher s = root;
      if (s.try_step(top.element, top.steps[i], i)) {
        std::lock_guard lock(mu);
        results[i] = s.result();
        auto cur = shared.best_branch.load();
        while (i < cur && !shared.best_branch.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(branches)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  // Lowest succeeding branch wins, so the answer does not depend on thread
  // count provided no lower branch was cut short by the budget.
  for (std::size_t i = 0; i < branches; ++i) {
    if (results[i]) {
      found = *results[i];
      return Outcome::kFound;
    }
  }
  return shared.out_of_budget ? Outcome::kBudget : Outcome::kExhausted;
}

}  // namespace

MinS1Result min_s1_search(Prime p, const Budget& budget, unsigned threads) {
  if (p.value() < 5) throw PreconditionViolated("min_s1_search needs p >= 5");
  const auto upper = build_s1_log(p);
  Shared shared;
  shared.max_nodes = budget.max_nodes;
  for (std::size_t target = 4; target < upper.size(); ++target) {
    shared.best_branch = kNoBranch;
    ResidueSet found(p);
    switch (search_size(p, target, shared, threads, found)) {
      case Outcome::kFound:
        return MinS1Result{found.size(), found, true, shared.nodes.load()};
      case Outcome::kBudget:
        return MinS1Result{upper.size(), upper, false, shared.nodes.load()};
      case Outcome::kExhausted:
        break;
    }
  }
  return MinS1Result{upper.size(), upper, true, shared.nodes.load()};
}

}  // namespace ajt
