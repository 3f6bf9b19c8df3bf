#include <string>

#include "ajt/apsets.hpp"
#include "ajt/errors.hpp"

namespace ajt {
namespace {

void check_radius(Prime p, unsigned k) {
  if (k == 0) throw InputError("radius must be at least 1");
  if (p.value() < 2 * std::uint64_t{k} + 1)
    throw RadiusTooLarge("p = " + std::to_string(p.value()) + " is below 2k+1 for k = " +
                         std::to_string(k));
}

// Calls visit(d) for d = x - from over members x != from, in ascending d.
// Stops at the first d for which visit returns true and returns it, else 0.
template <typename Visit>
std::uint64_t first_step(const ResidueSet& a, std::uint64_t from, Visit&& visit) {
  const auto p = a.prime().value();
  for (auto x = a.next_member(from + 1); x < p; x = a.next_member(x + 1))
    if (visit(x - from)) return x - from;
  for (auto x = a.next_member(0); x < from; x = a.next_member(x + 1))
    if (visit(x + p - from)) return x + p - from;
  return 0;
}

}  // namespace

SkCheck is_sk_type(const ResidueSet& a, unsigned k) {
  const auto p = a.prime();
  check_radius(p, k);
  SkCheck out;
  for (auto e : a.elements()) {
    auto d = first_step(a, e, [&](std::uint64_t step) {
      for (unsigned i = 1; i <= k; ++i) {
        const auto off = p.mul(i, step);
        if (!a.contains(p.add(e, off)) || !a.contains(p.sub(e, off))) return false;
      }
      return true;
    });
    if (d == 0) {
      out.failing_element = e;
      return out;
    }
    out.witnesses.push_back({e, d, k});
  }
  return out;
}

NkCheck is_nk_type(const ResidueSet& a, unsigned k) {
  const auto p = a.prime();
  check_radius(p, k);
  NkCheck out;
  out.inside = is_sk_type(a, k);
  if (!out.inside.ok()) return out;
  for (std::uint64_t b = 0; b < p.value(); ++b) {
    if (a.contains(b)) continue;
    auto d = first_step(a, b, [&](std::uint64_t step) {
      for (unsigned i = 2; i <= k; ++i)
        if (!a.contains(p.add(b, p.mul(i, step)))) return false;
      return true;
    });
    if (d == 0) {
      out.failing_outside = b;
      return out;
    }
    out.outside.push_back({b, d, k});
  }
  return out;
}

}  // namespace ajt
