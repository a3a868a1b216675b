#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "permkit/error.hpp"
#include "permkit/permutation.hpp"

namespace permkit {

/// Assignment of each host position to one of k colors. Color 0 is "red",
/// color 1 "blue" in the two-color case.
struct Coloring {
  std::vector<std::uint8_t> colors;
  std::size_t k = 2;

  /// Digit string, one digit per position, e.g. "0110".
  std::string str() const {
    std::string out;
    out.reserve(colors.size());
    for (auto c : colors) out.push_back(static_cast<char>('0' + c));
    return out;
  }

  static Coloring parse(std::string_view text, std::size_t k = 2) {
    Coloring out{{}, k};
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char c = text[i];
      if (c < '0' || c > '9' || static_cast<std::size_t>(c - '0') >= k) {
        throw parse_error("invalid color digit", i);
      }
      out.colors.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return out;
  }

  /// Pattern of each color class, read in position order.
  std::vector<Permutation> parts(const Permutation& host) const {
    if (colors.size() != host.size()) {
      throw invalid_input("coloring length does not match host length");
    }
    std::vector<std::vector<std::size_t>> positions(k);
    for (std::size_t i = 0; i < colors.size(); ++i) positions.at(colors[i]).push_back(i);
    std::vector<Permutation> out;
    out.reserve(k);
    for (const auto& pos : positions) out.push_back(pattern_at(host, pos));
    return out;
  }

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

}  // namespace permkit
