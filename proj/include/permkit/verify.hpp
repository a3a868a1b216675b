#pragma once

// Named verification checks. Each returns a VerificationReport whose body
// (everything but elapsed_ms) is deterministic.

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permkit/compose_ops.hpp"
#include "permkit/error.hpp"
#include "permkit/finite_class.hpp"
#include "permkit/limits.hpp"
#include "permkit/merge_split.hpp"
#include "permkit/realize.hpp"
#include "permkit/report.hpp"

namespace permkit {

struct CheckParams {
  std::optional<std::size_t> k;
  std::optional<std::size_t> l;
  std::optional<std::size_t> m;
  std::optional<std::size_t> n;
  std::optional<std::size_t> maxlen;
  /// "increasing", "decreasing" or "both" (lemma-decreasing only).
  std::string mode = "both";
};

inline const std::vector<std::string_view>& check_names() {
  static const std::vector<std::string_view> names{
      "lemma-decreasing", "idi-composable", "exact-split-example",
      "im-merge",         "av1324-split",   "demerge-equiv"};
  return names;
}

namespace detail {

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::string join(const std::vector<Permutation>& perms, std::size_t limit = 8) {
  std::string out;
  for (std::size_t i = 0; i < perms.size() && i < limit; ++i) {
    if (i > 0) out += ' ';
    out += perms[i].str();
  }
  if (perms.size() > limit) out += " ...";
  return out;
}

}  // namespace detail

/// Both cases of the decreasing-subsequence bound for compositions.
inline VerificationReport verify_lemma_decreasing(std::size_t k, std::size_t l, std::size_t cap,
                                                  std::string_view mode,
                                                  const Limits& limits = {}) {
  if (mode == "increasing") return lemma_decreasing_check(k, l, cap, LemmaMode::increasing_case, limits);
  if (mode == "decreasing") return lemma_decreasing_check(k, l, cap, LemmaMode::decreasing_case, limits);
  if (mode != "both") throw invalid_input("unknown mode '" + std::string(mode) + "'");

  detail::Stopwatch clock;
  auto inc = lemma_decreasing_check(k, l, cap, LemmaMode::increasing_case, limits);
  auto dec = lemma_decreasing_check(k, l, cap, LemmaMode::decreasing_case, limits);
  VerificationReport report;
  report.check = "lemma-decreasing";
  report.params["k"] = k;
  report.params["l"] = l;
  report.params["maxlen"] = cap;
  report.params["mode"] = "both";
  for (const auto* part : {&inc, &dec}) {
    if (part->verdict == Verdict::fail) {
      auto ce = *part->counterexample;
      ce.detail = part->params["mode"].get<std::string>() + " case: " + ce.detail;
      report.fail(ce);
    }
  }
  report.stats["increasing_pairs"] = inc.stats["pairs_composed"];
  report.stats["decreasing_pairs"] = dec.stats["pairs_composed"];
  report.elapsed_ms = clock.ms();
  return report;
}

/// Every member of I[D[I]] up to cap factors as layered ∘ layered via the
/// sum-component construction.
inline VerificationReport verify_idi_composable(std::size_t cap, const Limits& limits = {}) {
  detail::Stopwatch clock;
  VerificationReport report;
  report.check = "idi-composable";
  report.params["maxlen"] = cap;

  const auto idi = realize(*ClassExpr::builtin(Builtin::IDI), cap, limits);
  const auto layered = realize(*ClassExpr::builtin(Builtin::L), cap, limits);
  std::uint64_t checked = 0;
  for (const auto& p : idi.members(cap)) {
    ++checked;
    const auto [alpha, beta] = layered_decomposition(p);
    if (!layered.contains(alpha) || !layered.contains(beta) || compose(alpha, beta) != p) {
      report.fail({p, std::nullopt, "alpha=" + alpha.str() + " beta=" + beta.str()});
      break;
    }
  }
  const auto proper = subclass_upto(idi, layered, cap);
  report.stats["members_checked"] = checked;
  report.stats["idi_members"] = idi.size();
  report.stats["layered_members"] = layered.size();
  report.stats["layered_is_proper_subclass"] =
      static_cast<bool>(subclass_upto(layered, idi, cap)) && !proper.holds;
  report.elapsed_ms = clock.ms();
  return report;
}

/// The length-6 class with two different irreducible exact splittings.
inline FiniteClass exact_split_example_class() {
  auto all = all_upto(6);
  Levels levels = all.levels();
  std::erase(levels[6], Permutation::identity(6));
  std::erase(levels[6], Permutation::decreasing(6));
  return FiniteClass(6, std::move(levels));
}

inline VerificationReport verify_exact_split_example(const Limits& limits = {}) {
  detail::Stopwatch clock;
  VerificationReport report;
  report.check = "exact-split-example";
  report.params["maxlen"] = 6;

  const auto c = exact_split_example_class();
  const auto g1 = closure_of({Permutation{1}}, 6);
  const auto g12 = closure_of({Permutation{1, 2}}, 6);
  const auto g21 = closure_of({Permutation{2, 1}}, 6);
  const auto g3 = closure_of(
      {Permutation{1, 3, 2}, Permutation{2, 1, 3}, Permutation{2, 3, 1}, Permutation{3, 1, 2}}, 6);

  const std::vector<std::pair<std::string, std::vector<FiniteClass>>> splittings{
      {"G(1),G(1),G(12),G(21)", {g1, g1, g12, g21}},
      {"G(1),G(1),G(1),G(132,213,231,312)", {g1, g1, g1, g3}}};
  report.stats["class_members"] = c.size();
  std::size_t index = 0;
  for (const auto& [name, parts] : splittings) {
    const auto r = exact_split_check(c, parts, 6, limits);
    const auto key = "splitting_" + std::to_string(++index);
    report.stats[key + "_equal"] = r.equal;
    report.stats[key + "_missing"] = r.missing.size();
    report.stats[key + "_extra"] = r.extra.size();
    if (!r.equal) {
      Counterexample ce;
      ce.permutation = r.missing.empty() ? r.extra.front() : r.missing.front();
      ce.detail = name + ": missing [" + detail::join(r.missing) + "] extra [" +
                  detail::join(r.extra) + "]";
      report.fail(ce);
    }
  }
  report.elapsed_ms = clock.ms();
  return report;
}

/// The merge of m copies of I equals I_m up to cap.
inline VerificationReport verify_im_merge(std::size_t m, std::size_t cap,
                                          const Limits& limits = {}) {
  if (m < 1) throw invalid_input("im-merge: m must be at least 1");
  detail::Stopwatch clock;
  VerificationReport report;
  report.check = "im-merge";
  report.params["m"] = m;
  report.params["maxlen"] = cap;

  const auto inc = realize(*ClassExpr::builtin(Builtin::I), cap, limits);
  const std::vector<FiniteClass> copies(m, inc);
  const auto merged = merge_classes_upto(copies, cap, limits);
  const auto target = realize(*ClassExpr::builtin(Builtin::I_m, static_cast<int>(m)), cap, limits);
  if (auto r = subclass_upto(target, merged, cap); !r) {
    report.fail({r.counterexample, std::nullopt, "in I_m but not in the merge"});
  }
  if (auto r = subclass_upto(merged, target, cap); !r) {
    report.fail({r.counterexample, std::nullopt, "in the merge but not in I_m"});
  }
  report.stats["merge_members"] = merged.size();
  report.stats["im_members"] = target.size();
  report.elapsed_ms = clock.ms();
  return report;
}

/// Every 1324-avoider up to cap is a merge of a 132-avoider and a
/// 213-avoider.
inline VerificationReport verify_av1324_split(std::size_t cap, const Limits& limits = {}) {
  detail::Stopwatch clock;
  VerificationReport report;
  report.check = "av1324-split";
  report.params["maxlen"] = cap;

  const auto c = avoiders_upto({Permutation{1, 3, 2, 4}}, cap);
  const auto a = avoiders_upto({Permutation{1, 3, 2}}, cap);
  const auto b = avoiders_upto({Permutation{2, 1, 3}}, cap);
  const auto r = split_check_upto(c, a, b, cap, limits);
  if (!r) report.fail({r.counterexample, std::nullopt, "no coloring into Av(132) and Av(213)"});
  report.stats["members_checked"] = r.members_checked;
  report.stats["class_members"] = c.size();
  report.elapsed_ms = clock.ms();
  return report;
}

/// De-merging into at most n parts and re-merging equals composing with
/// members of I_n, for every permutation up to cap.
inline VerificationReport verify_demerge_equiv(std::size_t n, std::size_t cap) {
  detail::Stopwatch clock;
  VerificationReport report;
  report.check = "demerge-equiv";
  report.params["n"] = n;
  report.params["maxlen"] = cap;
  std::uint64_t checked = 0;
  std::uint64_t produced = 0;
  for (std::size_t len = 0; len <= cap && report.verdict == Verdict::pass; ++len) {
    for (const auto& p : all_permutations(len)) {
      ++checked;
      const auto r = demerge_remerge_set(p, n);
      produced += r.perms.size();
      if (!r.matches_composition) {
        report.fail({p, std::nullopt, "re-merge set differs from compositions with I_n"});
        break;
      }
    }
  }
  report.stats["permutations_checked"] = checked;
  report.stats["remerges_produced"] = produced;
  report.elapsed_ms = clock.ms();
  return report;
}

/// Dispatches a named check with per-check defaults for missing params.
inline VerificationReport run_check(std::string_view name, const CheckParams& params,
                                    const Limits& limits = {}) {
  if (name == "lemma-decreasing") {
    return verify_lemma_decreasing(params.k.value_or(2), params.l.value_or(2),
                                   params.maxlen.value_or(7), params.mode, limits);
  }
  if (name == "idi-composable") return verify_idi_composable(params.maxlen.value_or(7), limits);
  if (name == "exact-split-example") return verify_exact_split_example(limits);
  if (name == "im-merge") {
    return verify_im_merge(params.m.value_or(2), params.maxlen.value_or(7), limits);
  }
  if (name == "av1324-split") return verify_av1324_split(params.maxlen.value_or(7), limits);
  if (name == "demerge-equiv") {
    return verify_demerge_equiv(params.n.value_or(2), params.maxlen.value_or(5));
  }
  throw invalid_input("unknown check '" + std::string(name) + "'");
}

/// Bounded search for a σ in the class every 2-coloring of which has a red
/// pi or a blue pi2. Inconclusive when none exists up to maxlen.
inline VerificationReport witness_report(std::string_view class_expr, const Permutation& pi,
                                         const Permutation& pi2, std::size_t maxlen,
                                         const Limits& limits = {}) {
  detail::Stopwatch clock;
  VerificationReport report;
  report.check = "witness";
  const auto expr = parse_class_expr(class_expr);
  report.params["class"] = to_string(*expr);
  report.params["pi"] = pi.str();
  report.params["pi2"] = pi2.str();
  report.params["maxlen"] = maxlen;

  const auto c = realize(*expr, maxlen, limits);
  const auto w = find_unsplittability_witness(c, pi, pi2, maxlen);
  if (w) {
    report.verdict = Verdict::pass;
    report.stats["witness"] = w->str();
  } else {
    report.verdict = Verdict::inconclusive;
    report.stats["witness"] = nullptr;
    report.stats["note"] = "no witness of length <= " + std::to_string(maxlen);
  }
  report.stats["class_members"] = c.size();
  report.elapsed_ms = clock.ms();
  return report;
}

}  // namespace permkit
