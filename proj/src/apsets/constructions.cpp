#include <string>

#include "ajt/apsets.hpp"
#include "ajt/errors.hpp"
#include "ajt/rng.hpp"

namespace ajt {

ResidueSet build_s1_log(Prime p) {
  const auto q = p.value();
  if (q < 5) throw PreconditionViolated("build_s1_log needs p >= 5");
  ResidueSet a(p, {-1, 0, 1, static_cast<std::int64_t>((q - 1) / 2)});
  const auto m = q % 4 == 1 ? (q - 1) / 4 : (q + 1) / 4;
  for (auto c = m; c >= 1; c /= 2) {
    a.insert(c);
    a.insert(q - c);
  }
  return a;
}

namespace {

// Staged builder: f and g are the nearest members of a set reached from c by
// positive and negative multiples of a step.
class SkBuilder {
 public:
  SkBuilder(Prime p, unsigned k) : p_(p), k_(k) {}

  std::uint64_t forward(std::uint64_t c, const ResidueSet& set, std::uint64_t step) const {
    auto r = c;
    for (std::uint64_t i = 0; i < p_.value(); ++i) {
      r = p_.add(r, step);
      if (set.contains(r)) return r;
    }
    throw ConstructionFailed("nearest hit in an empty set");
  }

  std::uint64_t backward(std::uint64_t c, const ResidueSet& set, std::uint64_t step) const {
    return forward(c, set, p_.neg(step));
  }

  SkBuild run() {
    const auto q = p_.value();
    const unsigned stages = 4 * k_ + 3;
    std::uint64_t x = 2;
    while (saturating_pow(x, 4 * k_ + 4) < q) ++x;
    const std::uint64_t len = 2 * std::uint64_t{k_} * x;  // 2kx
    const auto kx = static_cast<std::int64_t>(k_ * x);
    const auto k = static_cast<std::int64_t>(k_);
    auto res = [&](std::int64_t v) { return p_.reduce(v); };

    ResidueSet a1(p_);
    for (auto j = -kx; j <= kx; ++j) a1.insert(res(j));
    const auto x1 = x % q;
    ResidueSet b(p_), c(p_);
    for (auto j = -kx; j <= -kx + k; ++j) b.insert(res(j));
    for (auto j = kx - k; j <= kx; ++j) b.insert(forward(res(j), a1, x1));
    for (auto j = kx - k; j <= kx; ++j) c.insert(res(j));
    for (auto j = -kx; j <= -kx + k; ++j) c.insert(backward(res(j), a1, x1));

    ResidueSet all = a1;
    ResidueSet last = a1;
    std::uint64_t step = x1;  // x^(i-1)
    for (unsigned i = 2; i <= stages; ++i) {
      const auto next_step = p_.mul(step, x1);  // x^i
      ResidueSet ai(p_);
      const auto cs = c.elements();
      const auto bs = b.elements();
      for (auto a : cs)
        for (std::uint64_t j = 1; j <= len; ++j) ai.insert(p_.add(a, p_.mul(j % q, step)));
      for (auto a : bs)
        for (std::uint64_t j = 1; j <= len; ++j) ai.insert(p_.sub(a, p_.mul(j % q, step)));
      ResidueSet bi(p_), ci(p_);
      for (std::uint64_t j = len - k_; j <= len; ++j) {
        const auto off = p_.mul(j % q, step);
        for (auto a : bs) bi.insert(p_.sub(a, off));
        for (auto a : cs) bi.insert(forward(p_.add(a, off), ai, next_step));
        for (auto a : cs) ci.insert(p_.add(a, off));
        for (auto a : bs) ci.insert(backward(p_.sub(a, off), ai, next_step));
      }
      all = all.united(ai);
      last = std::move(ai);
      b = std::move(bi);
      c = std::move(ci);
      step = next_step;
    }
    // Close each C-end with the progression up to its next hit in the last stage.
    for (auto a : c.elements()) {
      const auto stop = forward(a, last, step);
      for (auto r = a; r != stop; r = p_.add(r, step)) all.insert(r);
      all.insert(stop);
    }

    auto cert = is_sk_type(all, k_);
    if (!cert.ok()) {
      throw ConstructionFailed("staged S_k construction for p = " + std::to_string(q) +
                               ", k = " + std::to_string(k_) + " is not S_k-type (element " +
                               std::to_string(*cert.failing_element) + " fails)");
    }
    return SkBuild{std::move(all), x, std::move(cert)};
  }

 private:
  Prime p_;
  unsigned k_;
};

}  // namespace

SkBuild build_sk(Prime p, unsigned k) {
  if (k < 2) throw PreconditionViolated("build_sk needs k >= 2");
  if (p.value() < 2 * std::uint64_t{k} + 1) throw RadiusTooLarge("p is below 2k+1");
  return SkBuilder(p, k).run();
}

Partition partition_nk(Prime p, unsigned k, std::size_t parts, std::uint64_t seed,
                       std::uint64_t max_tries) {
  if (parts == 0) throw InputError("partition needs at least one part");
  if (p.value() < 2 * std::uint64_t{k} + 1) throw RadiusTooLarge("p is below 2k+1");
  Rng rng(seed);
  for (std::uint64_t attempt = 1; attempt <= max_tries; ++attempt) {
    std::vector<ResidueSet> sets(parts, ResidueSet(p));
    for (std::uint64_t r = 0; r < p.value(); ++r) sets[rng.below(parts)].insert(r);
    bool good = true;
    for (const auto& s : sets) {
      if (!is_nk_type(s, k).ok()) {
        good = false;
        break;
      }
    }
    if (good) return Partition{p, std::move(sets), seed, attempt};
  }
  throw PartitionNotFound("no N_" + std::to_string(k) + "-type partition of F_" +
                          std::to_string(p.value()) + " into " + std::to_string(parts) +
                          " parts within " + std::to_string(max_tries) + " tries");
}

}  // namespace ajt
