#pragma once

#include <cstddef>
#include <cstdint>

namespace permkit {

/// Search and enumeration budgets shared by realization and the checks.
struct Limits {
  /// Per-length cap on composition pairs and inflation candidates.
  std::uint64_t pair_budget = 10'000'000;
  /// Longest host permutation a merge search will color.
  std::size_t max_merge_host = 16;
};

}  // namespace permkit
