#pragma once

#include <cstdint>
#include <string_view>

namespace ajt {

// Desk-scale guardrails shared by every exhaustive routine.
struct Budget {
  // Dense group-ring / polynomial tables: p^n entries.
  std::uint64_t max_entries = std::uint64_t{1} << 24;
  // Search nodes for branch-and-bound and witness DFS.
  std::uint64_t max_nodes = 1'000'000'000;
  // Candidate matrices p^(n^2) scanned by exhaustive enumeration.
  std::uint64_t max_enumeration = 100'000'000;

  // Parses "entries=N,nodes=N,enumeration=N" (any subset, any order).
  // Throws InputError on malformed text.
  static Budget parse(std::string_view spec);
  static Budget parse(std::string_view spec, Budget base);
  // Defaults overridden by the AJT_BUDGET environment variable when set.
  static Budget from_env();
};

// p^e, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t p, std::uint64_t e) noexcept;

}  // namespace ajt
