#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "permkit/coloring.hpp"
#include "permkit/permutation.hpp"

namespace permkit {

enum class Verdict { pass, fail, inconclusive };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

struct Counterexample {
  std::optional<Permutation> permutation;
  std::optional<Coloring> coloring;
  std::string detail;
};

/// Outcome of a named check. Everything except elapsed_ms is deterministic
/// for identical inputs.
struct VerificationReport {
  std::string check;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  Verdict verdict = Verdict::pass;
  std::optional<Counterexample> counterexample;
  nlohmann::ordered_json stats = nlohmann::ordered_json::object();
  double elapsed_ms = 0.0;

  void fail(Counterexample ce) {
    verdict = Verdict::fail;
    if (!counterexample) counterexample = std::move(ce);
  }

  nlohmann::ordered_json to_json(bool with_elapsed = true) const {
    nlohmann::ordered_json j;
    j["check"] = check;
    j["params"] = params;
    j["verdict"] = std::string(to_string(verdict));
    if (counterexample) {
      auto& ce = j["counterexample"];
      ce = nlohmann::ordered_json::object();
      if (counterexample->permutation) ce["permutation"] = counterexample->permutation->str();
      if (counterexample->coloring) ce["coloring"] = counterexample->coloring->str();
      if (!counterexample->detail.empty()) ce["detail"] = counterexample->detail;
    }
    j["stats"] = stats;
    if (with_elapsed) j["elapsed_ms"] = elapsed_ms;
    return j;
  }

  std::string to_text(bool with_elapsed = true) const {
    std::ostringstream os;
    os << "check: " << check << '\n';
    os << "params:";
    for (const auto& [k, v] : params.items()) os << ' ' << k << '=' << render(v);
    os << "\nverdict: " << to_string(verdict) << '\n';
    if (counterexample) {
      os << "counterexample:";
      if (counterexample->permutation) os << " permutation=" << counterexample->permutation->str();
      if (counterexample->coloring) os << " coloring=" << counterexample->coloring->str();
      if (!counterexample->detail.empty()) os << " detail=\"" << counterexample->detail << '"';
      os << '\n';
    }
    os << "stats:";
    for (const auto& [k, v] : stats.items()) os << ' ' << k << '=' << render(v);
    os << '\n';
    if (with_elapsed) os << "elapsed_ms: " << elapsed_ms << '\n';
    return os.str();
  }

 private:
  static std::string render(const nlohmann::ordered_json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
  }
};

/// Process exit code for a verdict: 0 pass, 1 fail, 3 inconclusive.
inline int exit_code(Verdict v) {
  switch (v) {
    case Verdict::pass: return 0;
    case Verdict::fail: return 1;
    case Verdict::inconclusive: return 3;
  }
  return 1;
}

}  // namespace permkit
