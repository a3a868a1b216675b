#pragma once

// Command-line front end. Exit codes: 0 pass, 1 fail, 2 usage or parse
// error, 3 inconclusive, 4 resource budget exceeded.

#include <cstdlib>
#include <exception>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "permkit/permkit.hpp"

namespace permkit::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInconclusive = 3;
inline constexpr int kExitBudget = 4;

/// Default limits, with PERMKIT_BUDGET overriding the pair budget.
inline Limits default_limits() {
  Limits limits;
  if (const char* env = std::getenv("PERMKIT_BUDGET"); env != nullptr && *env != '\0') {
    try {
      limits.pair_budget = std::stoull(env);
    } catch (const std::logic_error&) {
      throw invalid_input(std::string("PERMKIT_BUDGET is not a number: '") + env + "'");
    }
  }
  return limits;
}

namespace detail {

inline void print_report(std::ostream& out, const VerificationReport& report,
                         const std::string& format) {
  if (format == "json") {
    out << report.to_json().dump(2) << '\n';
  } else {
    out << report.to_text();
  }
}

inline std::string join_counts(const FiniteClass& c) {
  std::string out;
  for (std::size_t n = 0; n <= c.cap(); ++n) {
    if (n > 0) out += ',';
    out += std::to_string(c.count(n));
  }
  return out;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"permkit: permutation patterns, merges, inflations and compositions"};
  app.require_subcommand(1);

  std::string format = "text";
  std::optional<std::uint64_t> budget;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--budget", budget,
                    "Per-length cap on compositions/inflation candidates (env PERMKIT_BUDGET)");
  };

  // eval
  auto* eval = app.add_subcommand("eval", "Realize a class expression up to --maxlen");
  std::string eval_expr;
  std::size_t eval_maxlen = 6;
  bool eval_count = false;
  bool eval_members = false;
  eval->add_option("expr", eval_expr, "Class expression, e.g. \"I[D[I]]\"")->required();
  eval->add_option("--maxlen", eval_maxlen, "Length cap");
  eval->add_flag("--count", eval_count, "Print per-length counts");
  eval->add_flag("--members", eval_members, "Print members (default unless --count)");
  add_common(eval);

  // verify
  auto* verify = app.add_subcommand("verify", "Run a named verification check");
  std::string check;
  CheckParams params;
  verify->add_option("--check", check, "Check name")->required();
  verify->add_option("--k", params.k, "k (lemma-decreasing)");
  verify->add_option("--l", params.l, "l (lemma-decreasing)");
  verify->add_option("--m", params.m, "m (im-merge)");
  verify->add_option("--n", params.n, "n (demerge-equiv)");
  verify->add_option("--maxlen", params.maxlen, "Length cap");
  verify->add_option("--mode", params.mode, "increasing|decreasing|both")
      ->check(CLI::IsMember({"increasing", "decreasing", "both"}));
  add_common(verify);

  // witness
  auto* witness = app.add_subcommand("witness", "Search for an unsplittability witness");
  std::string witness_class;
  std::string witness_pi;
  std::string witness_pi2;
  std::size_t witness_maxlen = 8;
  witness->add_option("--class", witness_class, "Class expression")->required();
  witness->add_option("--pi", witness_pi, "Permutation forbidden in red")->required();
  witness->add_option("--pi2", witness_pi2, "Permutation forbidden in blue")->required();
  witness->add_option("--maxlen", witness_maxlen, "Longest candidate");
  add_common(witness);

  // merge-check
  auto* merge_check = app.add_subcommand(
      "merge-check", "Is HOST a merge of A and B, or of members of the --part classes?");
  std::vector<std::string> merge_perms;
  std::vector<std::string> merge_parts;
  merge_check->add_option("perms", merge_perms, "HOST [A B]")->required();
  merge_check->add_option("--part", merge_parts, "Part class expression (repeatable)");
  add_common(merge_check);

  // compose
  auto* compose_cmd = app.add_subcommand("compose", "Compose two permutations: result_i = A_{B_i}");
  std::string compose_a;
  std::string compose_b;
  compose_cmd->add_option("a", compose_a)->required();
  compose_cmd->add_option("b", compose_b)->required();
  add_common(compose_cmd);

  // inflate
  auto* inflate_cmd = app.add_subcommand("inflate", "Inflate SKELETON by one block per entry");
  std::string skeleton;
  std::vector<std::string> blocks;
  inflate_cmd->add_option("skeleton", skeleton)->required();
  inflate_cmd->add_option("blocks", blocks)->required();
  add_common(inflate_cmd);

  std::vector<const char*> argv;
  argv.push_back("permkit");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    if (auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front()) {
      err << sub->help();
    }
    return kExitUsage;
  }

  try {
    Limits limits = default_limits();
    if (budget) limits.pair_budget = *budget;

    if (eval->parsed()) {
      const auto expr = parse_class_expr(eval_expr);
      const auto c = realize(*expr, eval_maxlen, limits);
      const bool show_members = eval_members || !eval_count;
      const auto canonical = to_string(*expr);
      if (format == "json") {
        nlohmann::ordered_json j;
        j["expr"] = canonical;
        j["cap"] = c.cap();
        j["counts"] = nlohmann::ordered_json::array();
        for (std::size_t n = 0; n <= c.cap(); ++n) j["counts"].push_back(c.count(n));
        if (show_members) {
          auto& levels = j["members"];
          levels = nlohmann::ordered_json::array();
          for (std::size_t n = 0; n <= c.cap(); ++n) {
            auto level = nlohmann::ordered_json::array();
            for (const auto& p : c.level(n)) level.push_back(p.str());
            levels.push_back(level);
          }
        }
        out << j.dump(2) << '\n';
      } else {
        if (show_members) {
          write_class(out, canonical, c);
          if (eval_count) out << "# counts " << detail::join_counts(c) << '\n';
        } else {
          out << "# class " << canonical << " cap " << c.cap() << '\n';
          out << "# counts " << detail::join_counts(c) << '\n';
        }
      }
      return kExitPass;
    }

    if (verify->parsed()) {
      const auto report = run_check(check, params, limits);
      detail::print_report(out, report, format);
      return exit_code(report.verdict);
    }

    if (witness->parsed()) {
      const auto report = witness_report(witness_class, Permutation::parse(witness_pi),
                                         Permutation::parse(witness_pi2), witness_maxlen, limits);
      detail::print_report(out, report, format);
      return exit_code(report.verdict);
    }

    if (merge_check->parsed()) {
      VerificationReport report;
      report.check = "merge-check";
      const auto host = Permutation::parse(merge_perms.front());
      report.params["host"] = host.str();
      std::optional<Coloring> coloring;
      if (merge_parts.empty()) {
        if (merge_perms.size() != 3) {
          err << "error: merge-check needs HOST A B, or HOST with --part classes\n";
          return kExitUsage;
        }
        const auto a = Permutation::parse(merge_perms[1]);
        const auto b = Permutation::parse(merge_perms[2]);
        report.params["a"] = a.str();
        report.params["b"] = b.str();
        coloring = is_merge(host, a, b, limits);
      } else {
        if (merge_perms.size() != 1) {
          err << "error: merge-check with --part takes only HOST\n";
          return kExitUsage;
        }
        std::vector<FiniteClass> parts;
        auto names = nlohmann::ordered_json::array();
        for (const auto& text : merge_parts) {
          const auto expr = parse_class_expr(text);
          names.push_back(to_string(*expr));
          parts.push_back(realize(*expr, host.size(), limits));
        }
        report.params["parts"] = names;
        coloring = in_merge_class(host, parts, limits);
      }
      if (coloring) {
        report.stats["coloring"] = coloring->str();
      } else {
        report.fail({host, std::nullopt, "no coloring exists"});
      }
      detail::print_report(out, report, format);
      return exit_code(report.verdict);
    }

    if (compose_cmd->parsed()) {
      const auto result = compose(Permutation::parse(compose_a), Permutation::parse(compose_b));
      if (format == "json") {
        out << nlohmann::ordered_json{{"result", result.str()}}.dump() << '\n';
      } else {
        out << result.str() << '\n';
      }
      return kExitPass;
    }

    if (inflate_cmd->parsed()) {
      std::vector<Permutation> parsed;
      for (const auto& b : blocks) parsed.push_back(Permutation::parse(b));
      const auto result = inflate(Permutation::parse(skeleton), parsed);
      if (format == "json") {
        out << nlohmann::ordered_json{{"result", result.str()}}.dump() << '\n';
      } else {
        out << result.str() << '\n';
      }
      return kExitPass;
    }
  } catch (const resource_limit& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace permkit::cli
