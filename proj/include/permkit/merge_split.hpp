#pragma once

// Merges of permutations and classes: coloring searches, k-fold class
// merges, split certificates and witnesses, exact-splitting checks, and the
// de-merge/re-merge view of composition with a merge of increasing runs.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "permkit/coloring.hpp"
#include "permkit/error.hpp"
#include "permkit/finite_class.hpp"
#include "permkit/limits.hpp"
#include "permkit/permutation.hpp"

namespace permkit {

namespace detail {

// Growing value sequence of one color class.
struct ColorRun {
  std::array<Permutation::value_type, kMaxLength> values{};
  std::size_t size = 0;

  Permutation pattern() const {
    return pattern_of(std::span<const Permutation::value_type>(values.data(), size));
  }
};

inline void check_host(const Permutation& host, const Limits& limits) {
  if (host.size() > limits.max_merge_host) {
    throw resource_limit("max_merge_host", "host of length " + std::to_string(host.size()) +
                                               " exceeds " +
                                               std::to_string(limits.max_merge_host));
  }
}

}  // namespace detail

/// First 2-coloring (in lexicographic order of color vectors) whose red
/// part is order isomorphic to `a` and blue part to `b`.
inline std::optional<Coloring> is_merge(const Permutation& host, const Permutation& a,
                                        const Permutation& b, const Limits& limits = {}) {
  if (host.size() != a.size() + b.size()) {
    throw invalid_input("is_merge: host length " + std::to_string(host.size()) +
                        " differs from " + std::to_string(a.size()) + " + " +
                        std::to_string(b.size()));
  }
  detail::check_host(host, limits);

  const std::array<const Permutation*, 2> targets{&a, &b};
  std::array<std::array<std::size_t, kMaxLength>, 2> placed{};  // host positions per color
  std::array<std::size_t, 2> used{0, 0};
  Coloring coloring{std::vector<std::uint8_t>(host.size()), 2};

  // The j-th entry of a color class must relate to the earlier ones exactly
  // as target[j] relates to target[0..j).
  auto fits = [&](std::size_t color, std::size_t pos) {
    const auto& t = *targets[color];
    const std::size_t j = used[color];
    if (j >= t.size()) return false;
    for (std::size_t i = 0; i < j; ++i) {
      if ((host[placed[color][i]] < host[pos]) != (t[i] < t[j])) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == host.size()) return true;
    for (std::uint8_t c = 0; c < 2; ++c) {
      if (!fits(c, pos)) continue;
      placed[c][used[c]++] = pos;
      coloring.colors[pos] = c;
      if (self(self, pos + 1)) return true;
      --used[c];
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return coloring;
}

/// First k-coloring whose i-th color class is a member of parts[i].
/// Branches are cut as soon as a partial color class leaves its part,
/// which is sound because the parts are downward closed.
inline std::optional<Coloring> in_merge_class(const Permutation& host,
                                              std::span<const FiniteClass> parts,
                                              const Limits& limits = {}) {
  if (parts.empty()) throw invalid_input("in_merge_class: no part classes given");
  for (const auto& part : parts) {
    if (part.cap() < host.size()) {
      throw out_of_range("in_merge_class: part class cap " + std::to_string(part.cap()) +
                         " is below host length " + std::to_string(host.size()));
    }
  }
  detail::check_host(host, limits);

  const std::size_t k = parts.size();
  std::vector<detail::ColorRun> runs(k);
  Coloring coloring{std::vector<std::uint8_t>(host.size()), k};

  auto search = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == host.size()) return true;
    for (std::size_t c = 0; c < k; ++c) {
      auto& run = runs[c];
      run.values[run.size++] = static_cast<Permutation::value_type>(host[pos]);
      if (parts[c].contains(run.pattern())) {
        coloring.colors[pos] = static_cast<std::uint8_t>(c);
        if (self(self, pos + 1)) return true;
      }
      --run.size;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return coloring;
}

inline std::optional<Coloring> in_merge_class(const Permutation& host,
                                              std::initializer_list<FiniteClass> parts,
                                              const Limits& limits = {}) {
  return in_merge_class(host, std::span<const FiniteClass>(parts.begin(), parts.size()),
                        limits);
}

namespace detail {

// Truncated merge of two downward-closed sets. The merge is itself downward
// closed, so each level is found among one-point extensions of the last.
inline FiniteClass merge_pair(const FiniteClass& a, const FiniteClass& b, std::size_t cap,
                              const Limits& limits) {
  const std::array<FiniteClass, 2> parts{a, b};
  Levels levels(cap + 1);
  levels[0].push_back(Permutation{});
  for (std::size_t n = 1; n <= cap; ++n) {
    std::set<Permutation> candidates;
    for (const auto& p : levels[n - 1]) {
      for (const auto& q : one_point_extensions(p)) candidates.insert(q);
    }
    for (const auto& q : candidates) {
      if (in_merge_class(q, parts, limits)) levels[n].push_back(q);
    }
    if (levels[n].empty()) break;
  }
  return FiniteClass(cap, std::move(levels));
}

}  // namespace detail

/// parts[0] ⊙ parts[1] ⊙ ... truncated at cap, folded left pairwise.
inline FiniteClass merge_classes_upto(std::span<const FiniteClass> parts, std::size_t cap,
                                      const Limits& limits = {}) {
  if (parts.empty()) throw invalid_input("merge_classes_upto: no part classes given");
  for (const auto& part : parts) {
    if (part.cap() < cap) {
      throw out_of_range("merge_classes_upto: part class cap " + std::to_string(part.cap()) +
                         " is below " + std::to_string(cap));
    }
  }
  FiniteClass acc = parts[0].truncate(cap);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    acc = detail::merge_pair(acc, parts[i].truncate(cap), cap, limits);
  }
  return acc;
}

inline FiniteClass merge_classes_upto(std::initializer_list<FiniteClass> parts, std::size_t cap,
                                      const Limits& limits = {}) {
  return merge_classes_upto(std::span<const FiniteClass>(parts.begin(), parts.size()), cap,
                            limits);
}

struct SplitWitnessResult {
  bool holds = false;
  /// A coloring with red avoiding pi and blue avoiding pi2, when !holds.
  std::optional<Coloring> counterexample;
  std::uint64_t nodes_visited = 0;

  explicit operator bool() const noexcept { return holds; }
};

/// Whether every red/blue coloring of sigma has a red copy of pi or a blue
/// copy of pi2. Otherwise returns the first coloring that has neither.
inline SplitWitnessResult split_witness_check(const Permutation& sigma, const Permutation& pi,
                                              const Permutation& pi2) {
  SplitWitnessResult result;
  const std::array<const Permutation*, 2> forbidden{&pi, &pi2};
  std::array<detail::ColorRun, 2> runs{};
  Coloring coloring{std::vector<std::uint8_t>(sigma.size()), 2};

  // Containment only grows as a color class grows, so a branch whose class
  // already holds its forbidden pattern can never produce a counterexample.
  auto clean = [&](std::size_t c) {
    return avoids(runs[c].pattern(), *forbidden[c]);
  };
  if (!clean(0) || !clean(1)) {
    result.holds = true;
    return result;
  }
  auto search = [&](auto&& self, std::size_t pos) -> bool {
    ++result.nodes_visited;
    if (pos == sigma.size()) return true;
    for (std::uint8_t c = 0; c < 2; ++c) {
      auto& run = runs[c];
      run.values[run.size++] = static_cast<Permutation::value_type>(sigma[pos]);
      if (clean(c)) {
        coloring.colors[pos] = c;
        if (self(self, pos + 1)) return true;
      }
      --run.size;
    }
    return false;
  };
  if (search(search, 0)) {
    result.counterexample = coloring;
  } else {
    result.holds = true;
  }
  return result;
}

/// Shortest, then lexicographically least, member of c of length <= maxlen
/// every 2-coloring of which has a red pi or a blue pi2. Not finding one is
/// not evidence of splittability.
inline std::optional<Permutation> find_unsplittability_witness(const FiniteClass& c,
                                                               const Permutation& pi,
                                                               const Permutation& pi2,
                                                               std::size_t maxlen) {
  if (maxlen > c.cap()) {
    throw out_of_range("find_unsplittability_witness: maxlen " + std::to_string(maxlen) +
                       " exceeds class cap " + std::to_string(c.cap()));
  }
  for (std::size_t n = 0; n <= maxlen; ++n) {
    for (const auto& sigma : c.level(n)) {
      if (split_witness_check(sigma, pi, pi2)) return sigma;
    }
  }
  return std::nullopt;
}

struct SplitCheckResult {
  bool holds = true;
  std::optional<Permutation> counterexample;
  std::uint64_t members_checked = 0;

  explicit operator bool() const noexcept { return holds; }
};

namespace detail {

inline void require_proper_subclass(const FiniteClass& part, const FiniteClass& whole,
                                    std::size_t upto, const std::string& name) {
  if (!subclass_upto(part, whole, upto)) {
    throw precondition_violation(name + " is not a subclass of the split class up to length " +
                                 std::to_string(upto));
  }
  if (subclass_upto(whole, part, upto)) {
    throw precondition_violation(name + " equals the split class up to length " +
                                 std::to_string(upto) + "; it must be a proper subclass");
  }
}

inline void require_caps(std::span<const FiniteClass> classes, std::size_t upto,
                         const std::string& op) {
  for (const auto& c : classes) {
    if (c.cap() < upto) {
      throw out_of_range(op + ": class cap " + std::to_string(c.cap()) + " is below " +
                         std::to_string(upto));
    }
  }
}

}  // namespace detail

/// Whether every member of c of length <= upto lies in a ⊙ b, where a and b
/// are required to be proper subclasses of c within the bound.
inline SplitCheckResult split_check_upto(const FiniteClass& c, const FiniteClass& a,
                                         const FiniteClass& b, std::size_t upto,
                                         const Limits& limits = {}) {
  const std::array<FiniteClass, 2> parts{a, b};
  detail::require_caps(std::array{c}, upto, "split_check_upto");
  detail::require_caps(parts, upto, "split_check_upto");
  detail::require_proper_subclass(a, c, upto, "first part");
  detail::require_proper_subclass(b, c, upto, "second part");

  SplitCheckResult result;
  for (std::size_t n = 0; n <= upto; ++n) {
    for (const auto& p : c.level(n)) {
      ++result.members_checked;
      if (!in_merge_class(p, parts, limits)) {
        result.holds = false;
        result.counterexample = p;
        return result;
      }
    }
  }
  return result;
}

struct ExactSplitResult {
  bool equal = true;
  /// Members of c outside the merge.
  std::vector<Permutation> missing;
  /// Members of the merge outside c.
  std::vector<Permutation> extra;

  explicit operator bool() const noexcept { return equal; }
};

/// Whether c and parts[0] ⊙ ... ⊙ parts[k-1] agree exactly up to length upto.
inline ExactSplitResult exact_split_check(const FiniteClass& c,
                                          std::span<const FiniteClass> parts, std::size_t upto,
                                          const Limits& limits = {}) {
  detail::require_caps(std::array{c}, upto, "exact_split_check");
  const auto merged = merge_classes_upto(parts, upto, limits);
  ExactSplitResult result;
  for (std::size_t n = 0; n <= upto; ++n) {
    std::set_difference(c.level(n).begin(), c.level(n).end(), merged.level(n).begin(),
                        merged.level(n).end(), std::back_inserter(result.missing));
    std::set_difference(merged.level(n).begin(), merged.level(n).end(), c.level(n).begin(),
                        c.level(n).end(), std::back_inserter(result.extra));
  }
  result.equal = result.missing.empty() && result.extra.empty();
  return result;
}

inline ExactSplitResult exact_split_check(const FiniteClass& c,
                                          std::initializer_list<FiniteClass> parts,
                                          std::size_t upto, const Limits& limits = {}) {
  return exact_split_check(c, std::span<const FiniteClass>(parts.begin(), parts.size()), upto,
                           limits);
}

struct DemergeRemergeResult {
  /// Sorted, deduplicated.
  std::vector<Permutation> perms;
  /// Whether perms equals { p ∘ η : η avoids δ_{n+1}, |η| = |p| }.
  bool matches_composition = false;
};

/// Splits p's positions into at most n classes and re-interleaves the
/// extracted subsequences (values kept) in every possible order.
inline DemergeRemergeResult demerge_remerge_set(const Permutation& p, std::size_t n) {
  if (n == 0) throw invalid_input("demerge_remerge_set: n must be at least 1");
  const std::size_t len = p.size();
  std::set<Permutation> out;

  std::vector<std::uint8_t> color(len);
  std::vector<std::vector<Permutation::value_type>> blocks;
  std::array<Permutation::value_type, kMaxLength> buffer{};

  auto shuffle = [&](auto&& self, std::vector<std::size_t>& next, std::size_t filled) -> void {
    if (filled == len) {
      out.insert(Permutation::from_unchecked({buffer.data(), len}));
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (next[b] == blocks[b].size()) continue;
      buffer[filled] = blocks[b][next[b]++];
      self(self, next, filled + 1);
      --next[b];
    }
  };

  // Restricted growth strings enumerate each set partition once.
  auto partition = [&](auto&& self, std::size_t pos, std::size_t used) -> void {
    if (pos == len) {
      blocks.assign(used, {});
      for (std::size_t i = 0; i < len; ++i) {
        blocks[color[i]].push_back(static_cast<Permutation::value_type>(p[i]));
      }
      std::vector<std::size_t> next(used, 0);
      shuffle(shuffle, next, 0);
      return;
    }
    const std::size_t limit = std::min(used + 1, n);
    for (std::size_t c = 0; c < limit; ++c) {
      color[pos] = static_cast<std::uint8_t>(c);
      self(self, pos + 1, std::max(used, c + 1));
    }
  };
  partition(partition, 0, 0);

  DemergeRemergeResult result;
  result.perms.assign(out.begin(), out.end());

  std::set<Permutation> composed;
  if (n >= len) {
    for (const auto& eta : all_permutations(len)) composed.insert(compose(p, eta));
  } else {
    const auto etas = avoiders_upto({Permutation::decreasing(n + 1)}, len);
    for (const auto& eta : etas.level(len)) composed.insert(compose(p, eta));
  }
  result.matches_composition = std::equal(out.begin(), out.end(), composed.begin(),
                                          composed.end());
  return result;
}

}  // namespace permkit
