#include <algorithm>
#include <numeric>

#include "ajt/errors.hpp"
#include "ajt/properties.hpp"

namespace ajt {

namespace {

std::vector<bool> mask_of(Prime p, const std::vector<std::uint64_t>& list, const char* what) {
  std::vector<bool> mask(p.value(), false);
  for (auto r : list) {
    if (r >= p.value()) throw InputError(std::string(what) + " residue out of range");
    if (mask[r]) throw InputError(std::string(what) + " list repeats a residue");
    mask[r] = true;
  }
  return mask;
}

void require_nonsingular(const FpMatrix& m) {
  if (!m.is_nonsingular()) throw SingularMatrix("matrix is singular");
}

std::vector<unsigned> lengths(const ResidueLists& lists) {
  std::vector<unsigned> out;
  for (const auto& l : lists) out.push_back(static_cast<unsigned>(l.size()));
  return out;
}

}  // namespace

ForbiddenSpec ForbiddenSpec::defaults(std::size_t n) {
  return {ResidueLists(n, {0}), ResidueLists(n, {0})};
}

ForbiddenSpec ForbiddenSpec::random(Prime p, std::size_t n, Rng& rng) {
  const auto q = p.value();
  auto draw = [&] {
    std::vector<std::uint64_t> all(q);
    std::iota(all.begin(), all.end(), 0);
    const auto size = rng.below(q);
    // Partial Fisher-Yates.
    for (std::uint64_t i = 0; i < size; ++i) std::swap(all[i], all[i + rng.below(q - i)]);
    all.resize(size);
    std::sort(all.begin(), all.end());
    return all;
  };
  ForbiddenSpec s;
  for (std::size_t i = 0; i < n; ++i) s.c.push_back(draw());
  for (std::size_t i = 0; i < n; ++i) s.d.push_back(draw());
  return s;
}

void ForbiddenSpec::validate(Prime p, std::size_t n) const {
  if (c.size() != n || d.size() != n) throw InputError("forbidden lists need one row per coordinate");
  for (const auto* lists : {&c, &d}) {
    for (const auto& l : *lists) {
      if (l.size() > p.value() - 1) throw InputError("forbidden list longer than p-1");
      mask_of(p, l, "forbidden");
    }
  }
}

std::vector<unsigned> ForbiddenSpec::t() const { return lengths(c); }
std::vector<unsigned> ForbiddenSpec::t_prime() const { return lengths(d); }

std::optional<FpVector> find_avoiding_vector(Prime p, std::size_t n, const ResidueLists& c,
                                             const std::vector<FpVector>& rows,
                                             const ResidueLists& d, const Budget& budget) {
  const auto q = p.value();
  if (c.size() != n) throw InputError("need one c-list per coordinate");
  if (d.size() != rows.size()) throw InputError("need one d-list per row");
  std::vector<std::vector<bool>> cmask, dmask;
  for (const auto& l : c) cmask.push_back(mask_of(p, l, "c"));
  for (const auto& l : d) dmask.push_back(mask_of(p, l, "d"));
  for (const auto& r : rows)
    if (r.size() != n || r.prime() != p) throw InputError("row shape mismatch");

  // Fewest allowed values first; ties by index.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return c[a].size() > c[b].size(); });
  std::vector<std::size_t> pos(n);
  for (std::size_t k = 0; k < n; ++k) pos[order[k]] = k;

  // Rows are checked at the depth where their last supported coordinate is set.
  std::vector<std::vector<std::size_t>> closing(n);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::optional<std::size_t> last;
    for (std::size_t j = 0; j < n; ++j)
      if (rows[r][j] != 0) last = std::max(last.value_or(0), pos[j]);
    if (!last) {
      if (dmask[r][0]) return std::nullopt;
      continue;
    }
    closing[*last].push_back(r);
  }

  std::vector<std::uint64_t> x(n, 0), partial(rows.size(), 0);
  std::uint64_t nodes = 0;
  auto dfs = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    const auto j = order[depth];
    for (std::uint64_t v = 0; v < q; ++v) {
      if (cmask[j][v]) continue;
      if (++nodes > budget.max_nodes) throw BudgetExceeded("witness search exceeded node budget");
      x[j] = v;
      for (std::size_t r = 0; r < rows.size(); ++r)
        partial[r] = p.add(partial[r], p.mul(rows[r][j], v));
      bool ok = true;
      for (auto r : closing[depth]) ok = ok && !dmask[r][partial[r]];
      if (ok && self(self, depth + 1)) return true;
      for (std::size_t r = 0; r < rows.size(); ++r)
        partial[r] = p.sub(partial[r], p.mul(rows[r][j], v));
    }
    return false;
  };
  if (!dfs(dfs, 0)) return std::nullopt;
  return FpVector(p, x);
}

std::optional<FpVector> check_p1(const FpMatrix& m, const ForbiddenSpec& spec,
                                 const Budget& budget) {
  require_nonsingular(m);
  spec.validate(m.prime(), m.dim());
  std::vector<FpVector> rows;
  for (std::size_t i = 0; i < m.dim(); ++i) rows.push_back(m.row(i));
  return find_avoiding_vector(m.prime(), m.dim(), spec.c, rows, spec.d, budget);
}

std::optional<FpVector> check_multi(const std::vector<FpMatrix>& ms, const Budget& budget) {
  if (ms.empty()) throw InputError("need at least one matrix");
  const auto p = ms.front().prime();
  const auto n = ms.front().dim();
  std::vector<FpVector> rows;
  for (const auto& m : ms) {
    if (m.prime() != p || m.dim() != n) throw InputError("matrices differ in p or n");
    require_nonsingular(m);
    for (std::size_t i = 0; i < n; ++i) rows.push_back(m.row(i));
  }
  return find_avoiding_vector(p, n, ResidueLists(n), rows, ResidueLists(rows.size(), {0}),
                              budget);
}

}  // namespace ajt
