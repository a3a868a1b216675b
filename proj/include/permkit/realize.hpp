#pragma once

// Turns a class expression into its truncation at a length cap.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "permkit/class_expr.hpp"
#include "permkit/compose_ops.hpp"
#include "permkit/error.hpp"
#include "permkit/finite_class.hpp"
#include "permkit/limits.hpp"
#include "permkit/merge_split.hpp"
#include "permkit/permutation.hpp"

namespace permkit {

/// Mixed inflation A[B]: every π[σ_1, ..., σ_m] with π ∈ A and nonempty
/// σ_i ∈ B chosen independently per slot, plus the empty permutation.
inline FiniteClass inflate_classes_upto(const FiniteClass& outer, const FiniteClass& inner,
                                        std::size_t cap, const Limits& limits = {}) {
  if (outer.cap() < cap || inner.cap() < cap) {
    throw out_of_range("inflate_classes_upto: class cap is below " + std::to_string(cap));
  }
  Levels levels(cap + 1);
  levels[0].push_back(Permutation{});
  std::vector<Permutation> blocks;
  for (std::size_t n = 1; n <= cap; ++n) {
    std::unordered_set<Permutation, PermutationHash> found;
    std::uint64_t candidates = 0;
    for (std::size_t m = 1; m <= n; ++m) {
      for (const auto& skeleton : outer.level(m)) {
        blocks.assign(m, Permutation{});
        auto fill = [&](auto&& self, std::size_t slot, std::size_t remaining) -> void {
          if (slot == m) {
            if (remaining != 0) return;
            if (++candidates > limits.pair_budget) {
              throw resource_limit("pair_budget", "more than " +
                                                      std::to_string(limits.pair_budget) +
                                                      " inflation candidates at length " +
                                                      std::to_string(n));
            }
            found.insert(inflate(skeleton, blocks));
            return;
          }
          const std::size_t slots_after = m - slot - 1;
          for (std::size_t len = 1; len + slots_after <= remaining; ++len) {
            for (const auto& b : inner.level(len)) {
              blocks[slot] = b;
              self(self, slot + 1, remaining - len);
            }
          }
        };
        fill(fill, 0, n);
      }
    }
    levels[n].assign(found.begin(), found.end());
  }
  return FiniteClass(cap, std::move(levels));
}

inline FiniteClass realize(const ClassExpr& expr, std::size_t cap, const Limits& limits = {}) {
  using K = ClassExpr::Kind;
  switch (expr.kind()) {
    case K::builtin: {
      const auto m = static_cast<std::size_t>(expr.param());
      switch (expr.which()) {
        case Builtin::I:
          return avoiders_upto({Permutation{2, 1}}, cap);
        case Builtin::D:
          return avoiders_upto({Permutation{1, 2}}, cap);
        case Builtin::I_m:
          return avoiders_upto({Permutation::decreasing(std::min(m + 1, cap + 1))}, cap);
        case Builtin::D_m:
          return avoiders_upto({Permutation::identity(std::min(m + 1, cap + 1))}, cap);
        case Builtin::L:
          return inflate_classes_upto(realize(*ClassExpr::builtin(Builtin::I), cap, limits),
                                      realize(*ClassExpr::builtin(Builtin::D), cap, limits),
                                      cap, limits);
        case Builtin::L_k:
          return inflate_classes_upto(closure_of({Permutation::identity(std::min(m, cap))}, cap),
                                      realize(*ClassExpr::builtin(Builtin::D), cap, limits),
                                      cap, limits);
        case Builtin::IDI: {
          const auto i = realize(*ClassExpr::builtin(Builtin::I), cap, limits);
          const auto d = realize(*ClassExpr::builtin(Builtin::D), cap, limits);
          return inflate_classes_upto(i, inflate_classes_upto(d, i, cap, limits), cap, limits);
        }
      }
      break;
    }
    case K::av:
      return avoiders_upto(expr.perms(), cap);
    case K::generated:
      return closure_of(expr.perms(), cap);
    case K::inflate:
      return inflate_classes_upto(realize(expr.left(), cap, limits),
                                  realize(expr.right(), cap, limits), cap, limits);
    case K::merge: {
      const std::vector<FiniteClass> parts{realize(expr.left(), cap, limits),
                                           realize(expr.right(), cap, limits)};
      return merge_classes_upto(parts, cap, limits);
    }
    case K::compose:
      return compose_classes_upto(realize(expr.left(), cap, limits),
                                  realize(expr.right(), cap, limits), cap, limits)
          .to_class();
    case K::union_of:
      return union_of(realize(expr.left(), cap, limits), realize(expr.right(), cap, limits));
  }
  throw invalid_input("realize: unknown expression kind");
}

inline FiniteClass realize(std::string_view text, std::size_t cap, const Limits& limits = {}) {
  return realize(*parse_class_expr(text), cap, limits);
}

}  // namespace permkit
