#pragma once

// Composition at the class level: sum decompositions, the layered
// factorization of members of I[D[I]], truncated class compositions, and
// the exhaustive check that compositions of I_k/D_k members avoid δ_{kl+1}.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "permkit/error.hpp"
#include "permkit/finite_class.hpp"
#include "permkit/limits.hpp"
#include "permkit/permutation.hpp"
#include "permkit/report.hpp"

namespace permkit {

/// Maximal decomposition p = c_1 ⊕ ... ⊕ c_n into sum-indecomposables.
struct SumDecomposition {
  std::vector<Permutation> components;

  std::vector<std::size_t> lengths() const {
    std::vector<std::size_t> out;
    for (const auto& c : components) out.push_back(c.size());
    return out;
  }

  Permutation recombine() const {
    Permutation out;
    for (const auto& c : components) out = direct_sum(out, c);
    return out;
  }
};

namespace detail {

// Cuts p after every prefix that is a block of the requested kind.
inline std::vector<Permutation> split_blocks(const Permutation& p, bool skew) {
  std::vector<Permutation> out;
  std::size_t start = 0;
  int extreme = skew ? static_cast<int>(p.size()) + 1 : 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    extreme = skew ? std::min(extreme, p[i]) : std::max(extreme, p[i]);
    const bool closes = skew ? extreme == static_cast<int>(p.size() - i)
                             : extreme == static_cast<int>(i + 1);
    if (closes) {
      std::vector<int> block(p.begin() + static_cast<std::ptrdiff_t>(start),
                             p.begin() + static_cast<std::ptrdiff_t>(i + 1));
      out.push_back(pattern_of(std::span<const int>(block)));
      start = i + 1;
    }
  }
  return out;
}

inline bool is_increasing(const Permutation& p) { return p == Permutation::identity(p.size()); }
inline bool is_decreasing(const Permutation& p) {
  return p == Permutation::decreasing(p.size());
}

}  // namespace detail

inline SumDecomposition sum_decompose(const Permutation& p) {
  return {detail::split_blocks(p, false)};
}

/// Maximal decomposition into skew-indecomposable components.
inline std::vector<Permutation> skew_decompose(const Permutation& p) {
  return detail::split_blocks(p, true);
}

/// Member of D[I]: a skew sum of increasing runs.
inline bool in_d_of_i(const Permutation& p) {
  const auto parts = skew_decompose(p);
  return std::all_of(parts.begin(), parts.end(), detail::is_increasing);
}

/// Member of I[D[I]]: every sum component lies in D[I].
inline bool idi_member(const Permutation& p) {
  const auto d = sum_decompose(p);
  return std::all_of(d.components.begin(), d.components.end(), in_d_of_i);
}

/// Member of L = I[D]: a direct sum of decreasing runs.
inline bool is_layered(const Permutation& p) {
  const auto d = sum_decompose(p);
  return std::all_of(d.components.begin(), d.components.end(), detail::is_decreasing);
}

struct LayeredPair {
  Permutation alpha;
  Permutation beta;
};

/// For p = p_1 ⊕ ... ⊕ p_n in I[D[I]], returns the layered pair
/// alpha = p_1^r ⊕ ... ⊕ p_n^r and beta = δ_{|p_1|} ⊕ ... ⊕ δ_{|p_n|},
/// which satisfies compose(alpha, beta) == p.
inline LayeredPair layered_decomposition(const Permutation& p) {
  if (!idi_member(p)) {
    throw domain_error("layered_decomposition: " + p.str() + " is not in I[D[I]]");
  }
  LayeredPair out;
  for (const auto& c : sum_decompose(p).components) {
    out.alpha = direct_sum(out.alpha, reverse(c));
    out.beta = direct_sum(out.beta, Permutation::decreasing(c.size()));
  }
  return out;
}

/// Raw (not closed) truncation of a class composition.
struct CompositionSet {
  std::size_t cap = 0;
  Levels levels;
  /// Result of auditing closure under one-point deletion.
  bool hereditary = false;
  std::uint64_t pairs_examined = 0;

  bool contains(const Permutation& p) const {
    if (p.size() > cap) return false;
    return std::binary_search(levels[p.size()].begin(), levels[p.size()].end(), p);
  }

  std::size_t count(std::size_t n) const { return n <= cap ? levels[n].size() : 0; }

  /// Downward closure of the raw set.
  FiniteClass to_class() const {
    std::vector<Permutation> all;
    for (const auto& level : levels) all.insert(all.end(), level.begin(), level.end());
    return closure_of(all, cap);
  }
};

namespace detail {

inline void check_pairs(std::uint64_t pairs, std::size_t n, const Limits& limits) {
  if (pairs > limits.pair_budget) {
    throw resource_limit("pair_budget", std::to_string(pairs) + " composition pairs at length " +
                                            std::to_string(n) + " (budget " +
                                            std::to_string(limits.pair_budget) + ")");
  }
}

inline std::vector<Permutation> compose_level(std::span<const Permutation> left,
                                              std::span<const Permutation> right,
                                              std::size_t n, const Limits& limits,
                                              std::uint64_t& pairs) {
  const auto count = static_cast<std::uint64_t>(left.size()) * right.size();
  check_pairs(count, n, limits);
  pairs += count;
  std::unordered_set<Permutation, PermutationHash> seen;
  for (const auto& a : left) {
    for (const auto& b : right) seen.insert(compose(a, b));
  }
  std::vector<Permutation> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

inline bool audit_hereditary(const Levels& levels) {
  for (std::size_t n = 1; n < levels.size(); ++n) {
    for (const auto& p : levels[n]) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!std::binary_search(levels[n - 1].begin(), levels[n - 1].end(),
                                delete_point(p, i))) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace detail

/// { a ∘ b : a ∈ A, b ∈ B, |a| = |b| } up to length cap, with each length
/// paired independently and subject to the per-length pair budget.
inline CompositionSet compose_classes_upto(const FiniteClass& a, const FiniteClass& b,
                                           std::size_t cap, const Limits& limits = {}) {
  if (a.cap() < cap || b.cap() < cap) {
    throw out_of_range("compose_classes_upto: class cap is below " + std::to_string(cap));
  }
  CompositionSet out;
  out.cap = cap;
  out.levels.resize(cap + 1);
  for (std::size_t n = 0; n <= cap; ++n) {
    out.levels[n] = detail::compose_level(a.level(n), b.level(n), n, limits, out.pairs_examined);
  }
  out.hereditary = detail::audit_hereditary(out.levels);
  return out;
}

/// parts[0] ∘ parts[1] ∘ ... ∘ parts[k-1] up to length cap.
inline CompositionSet compose_chain_upto(std::span<const FiniteClass> parts, std::size_t cap,
                                         const Limits& limits = {}) {
  if (parts.empty()) throw invalid_input("compose_chain_upto: no classes given");
  for (const auto& p : parts) {
    if (p.cap() < cap) {
      throw out_of_range("compose_chain_upto: class cap is below " + std::to_string(cap));
    }
  }
  CompositionSet out;
  out.cap = cap;
  out.levels.resize(cap + 1);
  for (std::size_t n = 0; n <= cap; ++n) {
    auto level = std::vector<Permutation>(parts[0].level(n).begin(), parts[0].level(n).end());
    for (std::size_t i = 1; i < parts.size(); ++i) {
      level = detail::compose_level(level, parts[i].level(n), n, limits, out.pairs_examined);
    }
    out.levels[n] = std::move(level);
  }
  out.hereditary = detail::audit_hereditary(out.levels);
  return out;
}

/// Whether every member of c of length <= cap is a composition of members
/// of parts (in order). Each part must be a proper subclass of c.
inline InclusionResult composability_check_upto(const FiniteClass& c,
                                                std::span<const FiniteClass> parts,
                                                std::size_t cap, const Limits& limits = {}) {
  if (c.cap() < cap) {
    throw out_of_range("composability_check_upto: class cap is below " + std::to_string(cap));
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto name = "part " + std::to_string(i + 1);
    if (parts[i].cap() < cap) {
      throw out_of_range("composability_check_upto: " + name + " cap is below " +
                         std::to_string(cap));
    }
    if (!subclass_upto(parts[i], c, cap)) {
      throw precondition_violation(name + " is not a subclass of the composed class");
    }
    if (subclass_upto(c, parts[i], cap)) {
      throw precondition_violation(name + " equals the composed class up to length " +
                                   std::to_string(cap) + "; it must be a proper subclass");
    }
  }
  const auto chain = compose_chain_upto(parts, cap, limits);
  for (std::size_t n = 0; n <= cap; ++n) {
    for (const auto& p : c.level(n)) {
      if (!chain.contains(p)) return {false, p};
    }
  }
  return {};
}

inline InclusionResult composability_check_upto(const FiniteClass& c,
                                                std::initializer_list<FiniteClass> parts,
                                                std::size_t cap, const Limits& limits = {}) {
  return composability_check_upto(c, std::span<const FiniteClass>(parts.begin(), parts.size()),
                                  cap, limits);
}

enum class LemmaMode { increasing_case, decreasing_case };

inline std::string_view to_string(LemmaMode m) {
  return m == LemmaMode::increasing_case ? "increasing" : "decreasing";
}

/// Composes every equal-length pair from I_k × I_l (or D_k × D_l) up to
/// length cap and checks that no composition contains δ_{kl+1}.
inline VerificationReport lemma_decreasing_check(std::size_t k, std::size_t l, std::size_t cap,
                                                 LemmaMode mode, const Limits& limits = {}) {
  if (k < 1 || l < 1) throw invalid_input("lemma_decreasing_check: k and l must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.check = "lemma-decreasing";
  report.params["k"] = k;
  report.params["l"] = l;
  report.params["maxlen"] = cap;
  report.params["mode"] = std::string(to_string(mode));

  auto monotone_class = [&](std::size_t m) {
    const auto forbidden = mode == LemmaMode::increasing_case
                               ? Permutation::decreasing(std::min(m + 1, cap + 1))
                               : Permutation::identity(std::min(m + 1, cap + 1));
    return avoiders_upto({forbidden}, cap);
  };
  const auto left = monotone_class(k);
  const auto right = monotone_class(l);
  const std::size_t bound = k * l;

  std::uint64_t pairs = 0;
  std::uint64_t results = 0;
  for (std::size_t n = 0; n <= cap && report.verdict == Verdict::pass; ++n) {
    const auto count = static_cast<std::uint64_t>(left.count(n)) * right.count(n);
    detail::check_pairs(count, n, limits);
    for (const auto& a : left.level(n)) {
      for (const auto& b : right.level(n)) {
        ++pairs;
        const auto g = compose(a, b);
        if (monotone_stats(g).lds_length > bound) {
          report.fail({g, std::nullopt, a.str() + " o " + b.str()});
          break;
        }
      }
      if (report.verdict == Verdict::fail) break;
    }
    ++results;
  }
  report.stats["pairs_composed"] = pairs;
  report.stats["lengths_checked"] = results;
  report.stats["left_members"] = left.size();
  report.stats["right_members"] = right.size();
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace permkit
