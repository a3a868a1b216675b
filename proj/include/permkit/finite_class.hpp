#pragma once

// Finite truncations of permutation classes and the queries answered on
// them: membership, inclusion, basis, atomicity, and the line-oriented
// text export.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "permkit/error.hpp"
#include "permkit/permutation.hpp"

namespace permkit {

/// Sorted, deduplicated permutations grouped by length 0..cap.
using Levels = std::vector<std::vector<Permutation>>;

/// All members of length <= cap of a downward-closed set of permutations.
///
/// Always contains the empty permutation. Construction verifies closure
/// under one-point deletion, which is equivalent to closure under patterns.
class FiniteClass {
 public:
  FiniteClass() : FiniteClass(0, Levels{{Permutation{}}}) {}

  FiniteClass(std::size_t cap, Levels levels) : cap_(cap), levels_(std::move(levels)) {
    levels_.resize(cap_ + 1);
    for (std::size_t n = 0; n <= cap_; ++n) {
      auto& level = levels_[n];
      std::sort(level.begin(), level.end());
      level.erase(std::unique(level.begin(), level.end()), level.end());
      for (const auto& p : level) {
        if (p.size() != n) {
          throw invalid_input("FiniteClass: " + p.str() + " listed under length " +
                              std::to_string(n));
        }
        lookup_.insert(p);
      }
    }
    if (levels_[0].empty()) {
      levels_[0].push_back(Permutation{});
      lookup_.insert(Permutation{});
    }
    for (std::size_t n = 1; n <= cap_; ++n) {
      for (const auto& p : levels_[n]) {
        for (std::size_t i = 0; i < n; ++i) {
          if (!lookup_.contains(delete_point(p, i))) {
            throw invalid_input("FiniteClass: set is not downward closed (" +
                                p.str() + " has a pattern outside the set)");
          }
        }
      }
    }
  }

  std::size_t cap() const noexcept { return cap_; }

  std::span<const Permutation> level(std::size_t n) const {
    if (n > cap_) return {};
    return levels_[n];
  }
  const Levels& levels() const noexcept { return levels_; }

  std::size_t count(std::size_t n) const { return level(n).size(); }

  std::size_t size() const noexcept { return lookup_.size(); }

  /// Membership without the cap check; anything longer than cap is "no".
  bool contains(const Permutation& p) const { return lookup_.contains(p); }

  /// Every member in canonical order (length, then lexicographic).
  std::vector<Permutation> members(std::size_t upto) const {
    std::vector<Permutation> out;
    for (std::size_t n = 0; n <= std::min(upto, cap_); ++n) {
      out.insert(out.end(), levels_[n].begin(), levels_[n].end());
    }
    return out;
  }

  /// Same members truncated at a smaller cap.
  FiniteClass truncate(std::size_t cap) const {
    if (cap > cap_) {
      throw out_of_range("truncate: cap " + std::to_string(cap) + " exceeds class cap " +
                         std::to_string(cap_));
    }
    return FiniteClass(cap, Levels(levels_.begin(), levels_.begin() + cap + 1));
  }

  friend bool operator==(const FiniteClass& a, const FiniteClass& b) {
    return a.cap_ == b.cap_ && a.levels_ == b.levels_;
  }

 private:
  std::size_t cap_;
  Levels levels_;
  std::unordered_set<Permutation, PermutationHash> lookup_;
};

inline bool member(const FiniteClass& c, const Permutation& p) {
  if (p.size() > c.cap()) {
    throw out_of_range("member: permutation " + p.str() + " is longer than class cap " +
                       std::to_string(c.cap()));
  }
  return c.contains(p);
}

/// Downward closure of a set of generators, truncated at cap.
inline FiniteClass closure_of(std::span<const Permutation> generators, std::size_t cap) {
  Levels levels(cap + 1);
  std::size_t top = 0;
  for (const auto& g : generators) top = std::max(top, g.size());
  std::vector<std::vector<Permutation>> pending(top + 1);
  for (const auto& g : generators) pending[g.size()].push_back(g);

  std::unordered_set<Permutation, PermutationHash> visited;
  for (std::size_t n = top + 1; n-- > 0;) {
    for (const auto& p : pending[n]) {
      if (!visited.insert(p).second) continue;
      if (n <= cap) levels[n].push_back(p);
      if (n == 0) continue;
      for (std::size_t i = 0; i < n; ++i) pending[n - 1].push_back(delete_point(p, i));
    }
    pending[n].clear();
  }
  levels[0].assign(1, Permutation{});
  return FiniteClass(cap, std::move(levels));
}

inline FiniteClass closure_of(std::initializer_list<Permutation> generators,
                              std::size_t cap) {
  return closure_of(std::span<const Permutation>(generators.begin(), generators.size()),
                    cap);
}

/// Av(basis) up to cap, grown level by level from one-point insertions into
/// the previous level's members.
inline FiniteClass avoiders_upto(std::span<const Permutation> basis, std::size_t cap) {
  for (const auto& b : basis) {
    if (b.empty()) throw invalid_input("Av: the empty permutation cannot be a basis element");
  }
  Levels levels(cap + 1);
  levels[0].push_back(Permutation{});
  for (std::size_t n = 1; n <= cap; ++n) {
    std::unordered_set<Permutation, PermutationHash> candidates;
    for (const auto& p : levels[n - 1]) {
      for (std::size_t pos = 0; pos < n; ++pos) {
        for (int v = 1; v <= static_cast<int>(n); ++v) {
          candidates.insert(insert_point(p, pos, v));
        }
      }
    }
    for (const auto& q : candidates) {
      const bool ok = std::all_of(basis.begin(), basis.end(),
                                  [&](const Permutation& b) { return avoids(q, b); });
      if (ok) levels[n].push_back(q);
    }
    if (levels[n].empty()) break;
  }
  return FiniteClass(cap, std::move(levels));
}

inline FiniteClass avoiders_upto(std::initializer_list<Permutation> basis, std::size_t cap) {
  return avoiders_upto(std::span<const Permutation>(basis.begin(), basis.size()), cap);
}

/// Every permutation of length <= cap.
inline FiniteClass all_upto(std::size_t cap) {
  Levels levels(cap + 1);
  for (std::size_t n = 0; n <= cap; ++n) levels[n] = all_permutations(n);
  return FiniteClass(cap, std::move(levels));
}

inline FiniteClass union_of(const FiniteClass& a, const FiniteClass& b) {
  const std::size_t cap = std::min(a.cap(), b.cap());
  Levels levels(cap + 1);
  for (std::size_t n = 0; n <= cap; ++n) {
    std::set_union(a.level(n).begin(), a.level(n).end(), b.level(n).begin(),
                   b.level(n).end(), std::back_inserter(levels[n]));
  }
  return FiniteClass(cap, std::move(levels));
}

/// Outcome of an inclusion-type query with its first failing permutation.
struct InclusionResult {
  bool holds = true;
  std::optional<Permutation> counterexample;

  explicit operator bool() const noexcept { return holds; }
};

/// Whether every member of `a` of length <= upto lies in `b`; the
/// counterexample is the shortest, then lexicographically least, failure.
inline InclusionResult subclass_upto(const FiniteClass& a, const FiniteClass& b,
                                     std::size_t upto) {
  if (upto > a.cap() || upto > b.cap()) {
    throw out_of_range("subclass_upto: bound " + std::to_string(upto) +
                       " exceeds a class cap");
  }
  for (std::size_t n = 0; n <= upto; ++n) {
    for (const auto& p : a.level(n)) {
      if (!b.contains(p)) return {false, p};
    }
  }
  return {};
}

/// Minimal non-members of length <= upto.
inline std::vector<Permutation> basis_upto(const FiniteClass& c, std::size_t upto) {
  if (upto > c.cap()) {
    throw out_of_range("basis_upto: bound " + std::to_string(upto) + " exceeds class cap " +
                       std::to_string(c.cap()));
  }
  std::vector<Permutation> basis;
  for (std::size_t n = 1; n <= upto; ++n) {
    std::set<Permutation> candidates;
    for (const auto& p : c.level(n - 1)) {
      for (const auto& q : one_point_extensions(p)) {
        if (!c.contains(q)) candidates.insert(q);
      }
    }
    for (const auto& q : candidates) {
      bool minimal = true;
      for (std::size_t i = 0; i < n && minimal; ++i) minimal = c.contains(delete_point(q, i));
      if (minimal) basis.push_back(q);
    }
  }
  return basis;
}

/// Every pattern of p of length <= max_len (including p and the empty one).
inline std::vector<Permutation> patterns_of(const Permutation& p, std::size_t max_len) {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> frontier{p};
  std::vector<Permutation> out;
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& q : frontier) {
      if (!seen.insert(q).second) continue;
      if (q.size() <= max_len) out.push_back(q);
      for (std::size_t i = 0; i < q.size(); ++i) next.push_back(delete_point(q, i));
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct AtomicityResult {
  bool holds = true;
  std::optional<std::pair<Permutation, Permutation>> failing_pair;

  explicit operator bool() const noexcept { return holds; }
};

/// Whether every two members of length <= pair_len share a superpattern in
/// the class of length <= witness_len. Pairs are scanned in canonical
/// order (first element, then second, with first <= second).
inline AtomicityResult atomic_upto(const FiniteClass& c, std::size_t pair_len,
                                   std::size_t witness_len) {
  if (pair_len > witness_len || witness_len > c.cap()) {
    throw out_of_range("atomic_upto: need pair_len <= witness_len <= cap");
  }
  const auto small = c.members(pair_len);
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  for (std::size_t i = 0; i < small.size(); ++i) index.emplace(small[i], i);

  const std::size_t m = small.size();
  std::vector<bool> covered(m * m, false);
  for (std::size_t n = 0; n <= witness_len; ++n) {
    for (const auto& w : c.level(n)) {
      std::vector<std::size_t> ids;
      for (const auto& q : patterns_of(w, pair_len)) ids.push_back(index.at(q));
      for (auto i : ids) {
        for (auto j : ids) covered[i * m + j] = true;
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      if (!covered[i * m + j]) return {false, std::pair{small[i], small[j]}};
    }
  }
  return {};
}

/// Audits closure under all patterns by enumerating every subsequence of
/// every member. Returns the first member with a pattern outside the class.
inline std::optional<Permutation> downward_closure_violation(const FiniteClass& c) {
  for (std::size_t n = 0; n <= c.cap(); ++n) {
    for (const auto& p : c.level(n)) {
      const std::uint32_t full = n == 32 ? 0xffffffffu : ((1u << n) - 1);
      std::vector<std::size_t> pos;
      for (std::uint32_t mask = 0; mask < full; ++mask) {
        pos.clear();
        for (std::size_t i = 0; i < n; ++i) {
          if (mask & (1u << i)) pos.push_back(i);
        }
        if (!c.contains(pattern_at(p, pos))) return p;
      }
    }
  }
  return std::nullopt;
}

/// Writes "# class <expr> cap <N>" followed by one permutation per line.
/// Readers skip any further lines starting with '#'.
inline void write_class(std::ostream& os, const std::string& expr, const FiniteClass& c) {
  os << "# class " << expr << " cap " << c.cap() << '\n';
  for (std::size_t n = 0; n <= c.cap(); ++n) {
    for (const auto& p : c.level(n)) os << p.str() << '\n';
  }
}

struct ClassFile {
  std::string expr;
  FiniteClass cls;
};

inline ClassFile read_class(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw parse_error("missing class header", 0);
  const std::string prefix = "# class ";
  const auto cap_at = header.rfind(" cap ");
  if (header.rfind(prefix, 0) != 0 || cap_at == std::string::npos || cap_at < prefix.size()) {
    throw parse_error("malformed class header '" + header + "'", 0);
  }
  ClassFile out;
  out.expr = header.substr(prefix.size(), cap_at - prefix.size());
  std::size_t cap = 0;
  try {
    std::size_t used = 0;
    cap = std::stoul(header.substr(cap_at + 5), &used);
    if (cap_at + 5 + used != header.size()) throw std::invalid_argument("trailing");
  } catch (const std::logic_error&) {
    throw parse_error("malformed cap in class header", cap_at + 5);
  }
  Levels levels(cap + 1);
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    Permutation p;
    try {
      p = Permutation::parse(line);
    } catch (const parse_error& e) {
      throw parse_error("line " + std::to_string(line_no) + ": " + e.what(), 0);
    }
    if (p.size() > cap) {
      throw out_of_range("line " + std::to_string(line_no) + ": " + p.str() +
                         " is longer than cap " + std::to_string(cap));
    }
    levels[p.size()].push_back(p);
  }
  out.cls = FiniteClass(cap, std::move(levels));
  return out;
}

}  // namespace permkit
