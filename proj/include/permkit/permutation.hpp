#pragma once

// Permutations in one-line notation and the pointwise constructions built
// on them: standardization, containment, direct sum, reversal, inflation,
// composition and monotone subsequence statistics.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permkit/error.hpp"

namespace permkit {

/// Longest permutation the library can represent.
inline constexpr std::size_t kMaxLength = 32;

/// A bijection of {1..n} stored inline. The empty permutation is valid.
///
/// Ordering is by length first, then lexicographic on the values, which is
/// the canonical order used by every listing and report.
class Permutation {
 public:
  using value_type = std::uint8_t;

  Permutation() = default;

  Permutation(std::initializer_list<int> values)
      : Permutation(std::span<const int>(values.begin(), values.size())) {}

  explicit Permutation(std::span<const int> values) {
    check_length(values.size());
    std::array<bool, kMaxLength + 1> seen{};
    const auto n = static_cast<int>(values.size());
    for (int v : values) {
      if (v < 1 || v > n) {
        throw invalid_input("not a permutation: value " + std::to_string(v) +
                            " outside 1.." + std::to_string(n));
      }
      if (seen[static_cast<std::size_t>(v)]) {
        throw invalid_input("not a permutation: duplicate value " +
                            std::to_string(v));
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
    size_ = static_cast<std::uint8_t>(n);
    for (std::size_t i = 0; i < values.size(); ++i) {
      values_[i] = static_cast<value_type>(values[i]);
    }
  }

  /// Builds from values already known to form a bijection of {1..n}.
  static Permutation from_unchecked(std::span<const value_type> values) {
    Permutation p;
    p.size_ = static_cast<std::uint8_t>(values.size());
    std::copy(values.begin(), values.end(), p.values_.begin());
    return p;
  }

  static Permutation identity(std::size_t n) {
    check_length(n);
    Permutation p;
    p.size_ = static_cast<std::uint8_t>(n);
    for (std::size_t i = 0; i < n; ++i) p.values_[i] = static_cast<value_type>(i + 1);
    return p;
  }

  static Permutation decreasing(std::size_t n) {
    check_length(n);
    Permutation p;
    p.size_ = static_cast<std::uint8_t>(n);
    for (std::size_t i = 0; i < n; ++i) p.values_[i] = static_cast<value_type>(n - i);
    return p;
  }

  /// Parses "e", a digit string such as "2413", or a comma list "2,4,10,...".
  static Permutation parse(std::string_view text);

  /// Digits when n <= 9, comma-separated otherwise, "e" for the empty one.
  std::string str() const {
    if (size_ == 0) return "e";
    std::string out;
    for (std::size_t i = 0; i < size_; ++i) {
      if (size_ > 9 && i > 0) out.push_back(',');
      out += std::to_string(values_[i]);
    }
    return out;
  }

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  /// Value at zero-based position i (values are one-based).
  int operator[](std::size_t i) const noexcept { return values_[i]; }

  std::span<const value_type> values() const noexcept {
    return {values_.data(), size_};
  }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.begin() + size_; }

  friend bool operator==(const Permutation& a, const Permutation& b) noexcept {
    return a.size_ == b.size_ &&
           std::equal(a.begin(), a.end(), b.begin());
  }

  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) noexcept {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.begin(), a.end(),
                                                  b.begin(), b.end());
  }

  std::size_t hash() const noexcept {
    std::uint64_t h = 1469598103934665603ull ^ size_;
    for (std::size_t i = 0; i < size_; ++i) {
      h ^= values_[i];
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }

  static void check_length(std::size_t n) {
    if (n > kMaxLength) {
      throw invalid_input("permutation length " + std::to_string(n) +
                          " exceeds the supported maximum of " +
                          std::to_string(kMaxLength));
    }
  }

 private:
  std::array<value_type, kMaxLength> values_{};
  std::uint8_t size_ = 0;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept { return p.hash(); }
};

/// Standardizes a sequence of distinct integers to the order-isomorphic
/// permutation.
template <typename T>
Permutation pattern_of(std::span<const T> seq) {
  Permutation::check_length(seq.size());
  std::array<std::uint8_t, kMaxLength> order{};
  std::iota(order.begin(), order.begin() + seq.size(), std::uint8_t{0});
  std::sort(order.begin(), order.begin() + seq.size(),
            [&](std::uint8_t a, std::uint8_t b) { return seq[a] < seq[b]; });
  std::array<Permutation::value_type, kMaxLength> out{};
  for (std::size_t r = 0; r < seq.size(); ++r) {
    if (r > 0 && !(seq[order[r - 1]] < seq[order[r]])) {
      throw invalid_input("pattern_of: entries are not pairwise distinct");
    }
    out[order[r]] = static_cast<Permutation::value_type>(r + 1);
  }
  return Permutation::from_unchecked({out.data(), seq.size()});
}

inline Permutation pattern_of(std::initializer_list<int> seq) {
  return pattern_of(std::span<const int>(seq.begin(), seq.size()));
}

/// Pattern formed by the host entries at the given increasing positions.
inline Permutation pattern_at(const Permutation& host,
                              std::span<const std::size_t> positions) {
  std::array<Permutation::value_type, kMaxLength> sub{};
  for (std::size_t i = 0; i < positions.size(); ++i) sub[i] = host.values()[positions[i]];
  return pattern_of(std::span<const Permutation::value_type>(sub.data(), positions.size()));
}

/// The permutation with the entry at position i removed and standardized.
inline Permutation delete_point(const Permutation& p, std::size_t i) {
  std::array<Permutation::value_type, kMaxLength> out{};
  const auto removed = p.values()[i];
  std::size_t k = 0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (j == i) continue;
    const auto v = p.values()[j];
    out[k++] = static_cast<Permutation::value_type>(v > removed ? v - 1 : v);
  }
  return Permutation::from_unchecked({out.data(), k});
}

/// Inserts `value` (1..n+1) before position `pos` (0..n), shifting larger
/// entries up by one.
inline Permutation insert_point(const Permutation& p, std::size_t pos, int value) {
  Permutation::check_length(p.size() + 1);
  std::array<Permutation::value_type, kMaxLength> out{};
  std::size_t k = 0;
  for (std::size_t j = 0; j <= p.size(); ++j) {
    if (j == pos) out[k++] = static_cast<Permutation::value_type>(value);
    if (j == p.size()) break;
    const auto v = p.values()[j];
    out[k++] = static_cast<Permutation::value_type>(v >= value ? v + 1 : v);
  }
  return Permutation::from_unchecked({out.data(), k});
}

/// Zero-based host positions i_1 < ... < i_m realizing a pattern.
struct Embedding {
  std::vector<std::size_t> indices;

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

namespace detail {

// Depth-first over positions in increasing order; the first complete
// assignment found is the lexicographically least one.
inline bool extend_embedding(const Permutation& host, const Permutation& pattern,
                             std::array<std::size_t, kMaxLength>& chosen,
                             std::size_t depth, std::size_t from) {
  const std::size_t m = pattern.size();
  if (depth == m) return true;
  const std::size_t last = host.size() - (m - depth);
  const int pv = pattern[depth];
  for (std::size_t i = from; i <= last; ++i) {
    const int hv = host[i];
    bool ok = true;
    for (std::size_t t = 0; t < depth; ++t) {
      if ((host[chosen[t]] < hv) != (pattern[t] < pv)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen[depth] = i;
    if (extend_embedding(host, pattern, chosen, depth + 1, i + 1)) return true;
  }
  return false;
}

}  // namespace detail

/// Lexicographically least embedding of `pattern` into `host`, if any.
inline std::optional<Embedding> contains(const Permutation& host,
                                         const Permutation& pattern) {
  const std::size_t m = pattern.size();
  if (m > host.size()) return std::nullopt;
  std::array<std::size_t, kMaxLength> chosen{};
  if (!detail::extend_embedding(host, pattern, chosen, 0, 0)) return std::nullopt;
  return Embedding{{chosen.begin(), chosen.begin() + m}};
}

inline bool avoids(const Permutation& host, const Permutation& pattern) {
  return !contains(host, pattern).has_value();
}

inline Permutation direct_sum(const Permutation& a, const Permutation& b) {
  Permutation::check_length(a.size() + b.size());
  std::array<Permutation::value_type, kMaxLength> out{};
  std::copy(a.begin(), a.end(), out.begin());
  const auto shift = static_cast<int>(a.size());
  std::transform(b.begin(), b.end(), out.begin() + static_cast<std::ptrdiff_t>(a.size()),
                 [shift](int v) { return static_cast<Permutation::value_type>(v + shift); });
  return Permutation::from_unchecked({out.data(), a.size() + b.size()});
}

/// Skew sum: a placed above and to the left of b.
inline Permutation skew_sum(const Permutation& a, const Permutation& b) {
  Permutation::check_length(a.size() + b.size());
  std::array<Permutation::value_type, kMaxLength> out{};
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = static_cast<Permutation::value_type>(a[i] + b.size());
  }
  std::copy(b.begin(), b.end(), out.begin() + a.size());
  return Permutation::from_unchecked({out.data(), a.size() + b.size()});
}

inline Permutation reverse(const Permutation& p) {
  std::array<Permutation::value_type, kMaxLength> out{};
  std::reverse_copy(p.begin(), p.end(), out.begin());
  return Permutation::from_unchecked({out.data(), p.size()});
}

/// result_i = a_{b_i}.
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) {
    throw invalid_input("compose: length mismatch (" + std::to_string(a.size()) +
                        " vs " + std::to_string(b.size()) + ")");
  }
  std::array<Permutation::value_type, kMaxLength> out{};
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = static_cast<Permutation::value_type>(a[static_cast<std::size_t>(b[i]) - 1]);
  }
  return Permutation::from_unchecked({out.data(), a.size()});
}

inline Permutation inverse(const Permutation& p) {
  std::array<Permutation::value_type, kMaxLength> out{};
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[static_cast<std::size_t>(p[i]) - 1] = static_cast<Permutation::value_type>(i + 1);
  }
  return Permutation::from_unchecked({out.data(), p.size()});
}

/// Replaces entry i of the skeleton by a block order isomorphic to blocks[i];
/// blocks are stacked by the skeleton's values. Blocks must be nonempty.
inline Permutation inflate(const Permutation& skeleton,
                           std::span<const Permutation> blocks) {
  if (blocks.size() != skeleton.size()) {
    throw invalid_input("inflate: skeleton has length " +
                        std::to_string(skeleton.size()) + " but " +
                        std::to_string(blocks.size()) + " blocks were given");
  }
  std::size_t total = 0;
  for (const auto& b : blocks) {
    if (b.empty()) throw invalid_input("inflate: blocks must be nonempty");
    total += b.size();
  }
  Permutation::check_length(total);

  // offset[v] = number of entries in blocks whose skeleton value is below v.
  std::array<std::size_t, kMaxLength + 2> offset{};
  for (std::size_t i = 0; i < skeleton.size(); ++i) {
    offset[static_cast<std::size_t>(skeleton[i]) + 1] = blocks[i].size();
  }
  for (std::size_t v = 1; v <= skeleton.size() + 1; ++v) offset[v] += offset[v - 1];

  std::array<Permutation::value_type, kMaxLength> out{};
  std::size_t k = 0;
  for (std::size_t i = 0; i < skeleton.size(); ++i) {
    const auto base = offset[static_cast<std::size_t>(skeleton[i])];
    for (int v : blocks[i]) out[k++] = static_cast<Permutation::value_type>(base + v);
  }
  return Permutation::from_unchecked({out.data(), total});
}

inline Permutation inflate(const Permutation& skeleton,
                           std::initializer_list<Permutation> blocks) {
  return inflate(skeleton, std::span<const Permutation>(blocks.begin(), blocks.size()));
}

namespace detail {

// Patience sorting; strictly increasing subsequences.
inline std::size_t longest_increasing(std::span<const Permutation::value_type> v) {
  std::vector<int> tails;
  for (int x : v) {
    auto it = std::lower_bound(tails.begin(), tails.end(), x);
    if (it == tails.end()) {
      tails.push_back(x);
    } else {
      *it = x;
    }
  }
  return tails.size();
}

}  // namespace detail

struct MonotoneStats {
  std::size_t lis_length = 0;
  std::size_t lds_length = 0;

  friend bool operator==(const MonotoneStats&, const MonotoneStats&) = default;
};

inline MonotoneStats monotone_stats(const Permutation& p) {
  const auto r = reverse(p);
  return {detail::longest_increasing(p.values()),
          detail::longest_increasing(r.values())};
}

/// All permutations of length n in lexicographic order.
inline std::vector<Permutation> all_permutations(std::size_t n) {
  Permutation::check_length(n);
  std::vector<Permutation> out;
  std::array<Permutation::value_type, kMaxLength> v{};
  std::iota(v.begin(), v.begin() + n, Permutation::value_type{1});
  do {
    out.push_back(Permutation::from_unchecked({v.data(), n}));
  } while (std::next_permutation(v.begin(), v.begin() + n));
  return out;
}

/// Every permutation obtainable by one-point insertion, deduplicated and
/// sorted.
inline std::vector<Permutation> one_point_extensions(const Permutation& p) {
  std::vector<Permutation> out;
  out.reserve((p.size() + 1) * (p.size() + 1));
  for (std::size_t pos = 0; pos <= p.size(); ++pos) {
    for (int v = 1; v <= static_cast<int>(p.size()) + 1; ++v) {
      out.push_back(insert_point(p, pos, v));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline Permutation Permutation::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
      s.remove_suffix(1);
    }
    return s;
  };
  text = trim(text);
  if (text == "e" || text == "ε") return Permutation{};
  if (text.empty()) throw parse_error("empty permutation literal", 0);

  std::vector<int> values;
  if (text.find(',') == std::string_view::npos) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char c = text[i];
      if (c < '1' || c > '9') {
        throw parse_error(std::string("unexpected character '") + c +
                              "' in permutation literal",
                          i);
      }
      values.push_back(c - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto comma = text.find(',', start);
      const auto end = comma == std::string_view::npos ? text.size() : comma;
      const auto field = trim(text.substr(start, end - start));
      if (field.empty()) throw parse_error("empty field in permutation literal", start);
      int v = 0;
      for (std::size_t i = 0; i < field.size(); ++i) {
        const char c = field[i];
        if (c < '0' || c > '9') {
          throw parse_error(std::string("unexpected character '") + c +
                                "' in permutation literal",
                            start + i);
        }
        v = v * 10 + (c - '0');
        if (v > 1000) throw parse_error("value too large in permutation literal", start);
      }
      values.push_back(v);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  return Permutation(std::span<const int>(values));
}

}  // namespace permkit

template <>
struct std::hash<permkit::Permutation> {
  std::size_t operator()(const permkit::Permutation& p) const noexcept { return p.hash(); }
};
