#pragma once

#include <string_view>
#include <vector>

#include "oracles.hpp"
#include "permkit/permkit.hpp"

namespace permkit::test {

inline Permutation P(std::string_view text) { return Permutation::parse(text); }

inline oracle::Seq to_seq(const Permutation& p) { return {p.begin(), p.end()}; }

inline Permutation from_seq(const oracle::Seq& s) {
  return Permutation(std::span<const int>(s.data(), s.size()));
}

inline std::vector<Permutation> perms(std::initializer_list<std::string_view> texts) {
  std::vector<Permutation> out;
  for (auto t : texts) out.push_back(P(t));
  return out;
}

inline std::vector<Permutation> as_vector(std::span<const Permutation> s) {
  return {s.begin(), s.end()};
}

}  // namespace permkit::test
