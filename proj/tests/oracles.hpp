#pragma once

// Brute-force reference implementations used only by the tests. They work
// on plain std::vector<int> and share no code with the library's search
// routines.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Seq = std::vector<int>;

/// Rank-counting standardization.
inline Seq standardize(const Seq& s) {
  Seq out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    int rank = 1;
    for (std::size_t j = 0; j < s.size(); ++j) rank += s[j] < s[i] ? 1 : 0;
    out[i] = rank;
  }
  return out;
}

inline Seq subsequence(const Seq& s, std::uint32_t mask) {
  Seq out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (mask & (1u << i)) out.push_back(s[i]);
  }
  return out;
}

/// Lexicographically least embedding by enumerating every index subset.
inline std::optional<std::vector<std::size_t>> contains(const Seq& host, const Seq& pattern) {
  const std::size_t n = host.size();
  const std::size_t m = pattern.size();
  if (m > n) return std::nullopt;
  std::optional<std::vector<std::size_t>> best;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != m) continue;
    if (standardize(subsequence(host, mask)) != pattern) continue;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) idx.push_back(i);
    }
    if (!best || idx < *best) best = idx;
  }
  return best;
}

/// Every pattern (as standardized sequence) of host, including the empty one.
inline std::set<Seq> all_patterns(const Seq& host) {
  std::set<Seq> out;
  for (std::uint32_t mask = 0; mask < (1u << host.size()); ++mask) {
    out.insert(standardize(subsequence(host, mask)));
  }
  return out;
}

inline std::size_t longest_monotone(const Seq& s, bool increasing) {
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << s.size()); ++mask) {
    const auto sub = subsequence(s, mask);
    bool ok = true;
    for (std::size_t i = 1; i < sub.size() && ok; ++i) {
      ok = increasing ? sub[i - 1] < sub[i] : sub[i - 1] > sub[i];
    }
    if (ok) best = std::max(best, sub.size());
  }
  return best;
}

/// (red pattern, blue pattern) for the 2-coloring given by mask (bit set = blue).
inline std::pair<Seq, Seq> split(const Seq& host, std::uint32_t mask) {
  const std::uint32_t full = (1u << host.size()) - 1;
  return {standardize(subsequence(host, full & ~mask)), standardize(subsequence(host, mask))};
}

/// All permutations of length n, lexicographic.
inline std::vector<Seq> permutations(std::size_t n) {
  std::vector<Seq> out;
  Seq v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

inline std::vector<Seq> permutations_upto(std::size_t n) {
  std::vector<Seq> out;
  for (std::size_t k = 0; k <= n; ++k) {
    auto level = permutations(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

/// sigma_i = a_{b_i}.
inline Seq compose(const Seq& a, const Seq& b) {
  Seq out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i]) - 1];
  return out;
}

}  // namespace oracle
