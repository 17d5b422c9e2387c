// Copyright 2026 The popmatch Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "popmatch/cli.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "popmatch/duplication.hpp"
#include "popmatch/gadgets.hpp"
#include "popmatch/io.hpp"
#include "popmatch/oracle.hpp"
#include "popmatch/solver.hpp"
#include "popmatch/stability.hpp"
#include "popmatch/vote.hpp"

namespace popmatch {
namespace {

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kError = 2;

class UsageError : public Error {
 public:
  using Error::Error;
};

Instance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

Matching load_matching(const Instance& instance, const std::string& path) {
  Matching m = parse_matching(instance, read_file(path));
  if (!is_valid(instance, m)) throw InvalidMatching(path + ": two edges share an agent");
  return m;
}

VoteRule rule_or_default(const Instance& instance, const std::string& text) {
  if (text.empty()) return rule_of(instance.mode());
  auto rule = parse_vote_rule(text);
  if (!rule) throw UsageError("unknown rule '" + text + "' (classic|weak|gamma|super)");
  return *rule;
}

StabilityNotion notion_or_default(const Instance& instance, const std::string& text) {
  if (text.empty()) return notion_of(instance.mode());
  auto notion = parse_stability_notion(text);
  if (!notion) throw UsageError("unknown notion '" + text + "' (weak-stable|gamma-min|super)");
  return *notion;
}

std::string ratio(std::size_t num, std::size_t den) {
  if (den == 0) return "n/a";
  return to_string(Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)));
}

std::vector<Rational> parse_levels(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    auto value = parse_rational(item);
    if (!value) throw UsageError("malformed number '" + item + "'");
    out.push_back(*value);
  }
  return out;
}

int print_verdict(const Instance& instance, const PopularityVerdict& verdict, std::ostream& out) {
  if (verdict.popular()) {
    out << "POPULAR\n";
    return kOk;
  }
  out << "NOT POPULAR delta=" << verdict.worst_delta << "\n# counterexample\n"
      << write_matching(instance, *verdict.counterexample);
  return kRefuted;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Near-maximum popular matchings under ties, with brute-force certification"};
  app.require_subcommand(1);

  std::string instance_path;
  std::string matching_path;
  std::string certificate_path;
  std::string rule_text;
  std::string notion_text;
  std::size_t limit = kDefaultEdgeLimit;

  auto* solve_cmd = app.add_subcommand("solve", "Run the approximation algorithm");
  bool emit_certificate = false;
  solve_cmd->add_option("instance", instance_path)->required();
  solve_cmd->add_flag("--emit-certificate", emit_certificate,
                      "Also print the stable assignment of edge copies");

  auto* verify_cmd = app.add_subcommand("verify", "Certify a matching popular by enumeration");
  verify_cmd->add_option("instance", instance_path)->required();
  verify_cmd->add_option("--matching", matching_path)->required();
  verify_cmd->add_option("--rule", rule_text);
  verify_cmd->add_option("--limit", limit);

  auto* stable_cmd = app.add_subcommand("check-stable", "List blocking edges or blocking copies");
  stable_cmd->add_option("instance", instance_path)->required();
  auto* stable_matching = stable_cmd->add_option("--matching", matching_path);
  stable_cmd->add_option("--notion", notion_text);
  auto* stable_cert = stable_cmd->add_option("--certificate", certificate_path,
                                             "Copy assignment checked in the duplicated instance");
  stable_matching->excludes(stable_cert);

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive queries");
  bool want_max_popular = false;
  bool want_super = false;
  std::string certify_path;
  std::string max_stable_notion;
  oracle_cmd->add_option("instance", instance_path)->required();
  oracle_cmd->add_option("--rule", rule_text);
  oracle_cmd->add_flag("--max-popular", want_max_popular);
  oracle_cmd->add_option("--certify", certify_path);
  oracle_cmd->add_option("--max-stable", max_stable_notion);
  oracle_cmd->add_flag("--super-exists", want_super);
  oracle_cmd->add_option("--limit", limit);

  auto* gadget_cmd = app.add_subcommand("gadget", "Build a reduction instance");
  std::string gadget_kind;
  std::string gadget_input;
  gadget_cmd->add_option("kind", gadget_kind)
      ->required()
      ->check(CLI::IsMember({"smti", "inapprox", "superpm"}));
  gadget_cmd->add_option("input", gadget_input)->required();

  auto* gen_cmd = app.add_subcommand("gen", "Generate instances");
  gen_cmd->require_subcommand(1);
  auto* gen_random = gen_cmd->add_subcommand("random", "Seeded random instance");
  RandomInstanceParams params;
  std::string values_text = "1,2";
  std::string gammas_text;
  gen_random->add_option("--seed", params.seed);
  gen_random->add_option("--u", params.u_count);
  gen_random->add_option("--w", params.w_count);
  gen_random->add_option("--edge-prob", params.edge_prob);
  gen_random->add_option("--values", values_text, "Comma-separated valuation levels");
  gen_random->add_option("--gammas", gammas_text, "Comma-separated thresholds; selects gamma mode");
  gen_random->add_flag("--one-sided-ties", params.one_sided_ties);
  gen_random->add_option("--parallel-prob", params.parallel_prob);
  gen_random->add_option("--max-edges", params.max_edges);
  auto* gen_fixture = gen_cmd->add_subcommand("fixture", "Built-in example instance");
  std::string fixture_name;
  gen_fixture->add_option("name", fixture_name)
      ->required()
      ->check(CLI::IsMember({"example1", "example2", "example3"}));

  auto* ratio_cmd = app.add_subcommand("ratio", "Compare the algorithm with exhaustive optima");
  ratio_cmd->add_option("instance", instance_path)->required();
  ratio_cmd->add_option("--limit", limit);

  auto* dump_cmd = app.add_subcommand("dump-duplicated", "Print the strict copy preferences");
  dump_cmd->add_option("instance", instance_path)->required();

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("popmatch");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kError;
  }

  try {
    if (solve_cmd->parsed()) {
      Instance instance = load_instance(instance_path);
      Solution solution = solve_with_certificate(instance);
      out << write_matching(instance, solution.matching);
      if (emit_certificate) out << write_strict_matching(instance, solution.certificate);
      return kOk;
    }

    if (verify_cmd->parsed()) {
      Instance instance = load_instance(instance_path);
      Matching m = load_matching(instance, matching_path);
      return print_verdict(instance,
                           certify_popular(instance, m, rule_or_default(instance, rule_text), limit),
                           out);
    }

    if (stable_cmd->parsed()) {
      Instance instance = load_instance(instance_path);
      if (!certificate_path.empty()) {
        DuplicatedInstance dup = build_duplicated(instance);
        StrictMatching s = parse_strict_matching(instance, read_file(certificate_path));
        auto blocking = check_strict_stability(dup, s);
        if (blocking.empty()) {
          out << "STABLE\n";
          return kOk;
        }
        out << "BLOCKED\n";
        for (EdgeCopy copy : blocking) out << to_string(instance, copy) << '\n';
        return kRefuted;
      }
      if (matching_path.empty()) throw UsageError("check-stable needs --matching or --certificate");
      Matching m = load_matching(instance, matching_path);
      auto blocking = blocking_edges(instance, m, notion_or_default(instance, notion_text));
      if (blocking.empty()) {
        out << "STABLE\n";
        return kOk;
      }
      out << "BLOCKED\n";
      for (EdgeIndex e : blocking) out << instance.edge(e).id << '\n';
      return kRefuted;
    }

    if (oracle_cmd->parsed()) {
      Instance instance = load_instance(instance_path);
      const int modes = int(want_max_popular) + int(!certify_path.empty()) +
                        int(!max_stable_notion.empty()) + int(want_super);
      if (modes != 1) {
        throw UsageError(
            "oracle needs exactly one of --max-popular, --certify, --max-stable, --super-exists");
      }
      const VoteRule rule = rule_or_default(instance, rule_text);
      if (want_max_popular) {
        auto best = max_popular(instance, rule, limit);
        if (!best) {
          out << "NONE\n";
          return kRefuted;
        }
        out << "max_popular=" << best->size << '\n' << write_matching(instance, best->witness);
        return kOk;
      }
      if (!certify_path.empty()) {
        Matching m = load_matching(instance, certify_path);
        return print_verdict(instance, certify_popular(instance, m, rule, limit), out);
      }
      if (!max_stable_notion.empty()) {
        auto best = max_stable(instance, notion_or_default(instance, max_stable_notion), limit);
        if (!best) {
          out << "NONE\n";
          return kRefuted;
        }
        out << "max_stable=" << best->size << '\n' << write_matching(instance, best->witness);
        return kOk;
      }
      auto witness = super_popular_exists(instance, limit);
      if (!witness) {
        out << "NONE\n";
        return kRefuted;
      }
      out << "SUPER-POPULAR\n" << write_matching(instance, *witness);
      return kOk;
    }

    if (gadget_cmd->parsed()) {
      const std::string text = read_file(gadget_input);
      if (gadget_kind == "smti") {
        out << write_instance(gadget_smti(parse_instance(text)));
      } else if (gadget_kind == "inapprox") {
        out << write_instance(gadget_inapprox(parse_instance(text)));
      } else {
        out << write_instance(gadget_superpm(parse_pm_restricted(text)));
      }
      return kOk;
    }

    if (gen_random->parsed()) {
      params.value_levels = parse_levels(values_text);
      if (!gammas_text.empty()) params.gamma_levels = parse_levels(gammas_text);
      out << write_instance(random_instance(params));
      return kOk;
    }

    if (gen_fixture->parsed()) {
      out << fixture_text(*parse_fixture(fixture_name));
      return kOk;
    }

    if (ratio_cmd->parsed()) {
      Instance instance = load_instance(instance_path);
      const std::size_t alg = solve(instance).size();
      const std::size_t mm = max_matching(instance);
      const auto pop = max_popular(instance, rule_of(instance.mode()), limit);
      const auto stab = max_stable(instance, notion_of(instance.mode()), limit);
      const std::size_t pop_size = pop ? pop->size : 0;
      const std::size_t stab_size = stab ? stab->size : 0;
      out << "alg=" << alg << " max_matching=" << mm << " max_popular=" << pop_size
          << " max_stable=" << stab_size << " ratio_matching=" << ratio(alg, mm)
          << " ratio_popular=" << ratio(alg, pop_size) << " ratio_stable=" << ratio(alg, stab_size)
          << '\n';
      return kOk;
    }

    if (dump_cmd->parsed()) {
      out << dump_duplicated(build_duplicated(load_instance(instance_path)));
      return kOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  err << app.help();
  return kError;
}

}  // namespace popmatch
