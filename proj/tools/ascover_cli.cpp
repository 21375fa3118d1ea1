// Copyright 2026 The Authors.
//
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

// Command-line front end: instance generation and ingestion, greedy runs,
// lower bounds, exact desk-scale oracles, benchmark reports, and curve
// export.  All randomized paths are deterministic in --seed.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ascover/analysis.hpp"
#include "ascover/bench.hpp"
#include "ascover/bounds.hpp"
#include "ascover/errors.hpp"
#include "ascover/greedy.hpp"
#include "ascover/oracle.hpp"

namespace {

using ascover::Rational;

int with_output(const std::string& out_path,
                const std::function<void(std::ostream&)>& write) {
  if (out_path.empty()) {
    write(std::cout);
    return 0;
  }
  std::ofstream file(out_path);
  if (!file) {
    std::cerr << "error: cannot write " << out_path << '\n';
    return 1;
  }
  write(file);
  return 0;
}

std::string csv_quote(const std::string& text) {
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

// "--moments 1,2,3" is a single comma-separated token so that it never
// swallows a following positional argument.
std::vector<int> parse_moment_list(const std::string& text) {
  std::vector<int> orders;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    std::size_t used = 0;
    int order = 0;
    try {
      order = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (token.empty() || used != token.size()) {
      throw ascover::ParseError("bad moment order '" + token +
                                "' in --moments");
    }
    orders.push_back(order);
  }
  if (orders.empty()) throw ascover::ParseError("--moments list is empty");
  return orders;
}

struct GenerateArgs {
  int m0 = 415;
  int n = 79;
  std::string density = "1/2";
  std::string unknown_rate = "1/10";
  std::uint64_t seed = 0;
  int variation = 0;
  int restrict_to = 0;
  std::string out;
};

int do_generate(const GenerateArgs& args) {
  ascover::WiserLikeParams params;
  params.m0 = args.m0;
  params.n = args.n;
  params.density = ascover::parse_rational(args.density);
  params.unknown_rate = ascover::parse_rational(args.unknown_rate);
  params.seed = args.seed;
  params.variation = args.variation;
  ascover::OdtInstance instance = ascover::generate_wiser_like(params);
  if (args.restrict_to > 0) {
    // The column subset draws from its own stream one past --seed.
    instance = ascover::restrict_tests(instance, args.restrict_to, args.seed + 1);
  }
  return with_output(args.out, [&](std::ostream& out) {
    ascover::save_odt_csv(out, instance);
  });
}

struct InstanceArgs {
  std::string instance;
  std::string kind = "odt";
  int quota = 0;
  int mc_samples = 0;
  std::uint64_t seed = 0;
  std::string moments = "1,2,3";
  std::string format = "csv";
  std::string out;
};

ascover::LoadedInstance load_from_args(const InstanceArgs& args) {
  ascover::LoadOptions options;
  options.quota = args.quota;
  options.mc_samples = args.mc_samples;
  options.seed = args.seed;
  return ascover::load_instance(ascover::parse_instance_kind(args.kind),
                                args.instance, options);
}

// Greedy policy, scenario view, and exact cost laws for a loaded instance.
struct GreedyRun {
  std::shared_ptr<const ascover::ScenarioDistribution> scenarios;
  std::vector<ascover::UtilityModel> utilities;
  ascover::PolicyCostLaws laws;
};

GreedyRun greedy_run(const ascover::LoadedInstance& inst) {
  if (inst.single) {
    const ascover::AscInstance& a = *inst.single;
    auto scenarios = ascover::as_scenarios(a.distribution, a.items.size());
    std::vector<ascover::UtilityModel> utilities = {a.utility};
    const ascover::Policy policy =
        ascover::greedy_policy(a.utility, a.distribution, a.items);
    auto laws = ascover::cost_distribution(policy, *scenarios, a.items, utilities);
    return GreedyRun{std::move(scenarios), std::move(utilities), std::move(laws)};
  }
  const ascover::MultiInstance& mi = *inst.multi;
  auto scenarios = ascover::as_scenarios(mi.distribution, mi.items.size());
  const ascover::Policy policy =
      ascover::multi_greedy_policy(mi.utilities, mi.distribution, mi.items);
  auto laws = ascover::cost_distribution(policy, *scenarios, mi.items,
                                         mi.utilities);
  return GreedyRun{std::move(scenarios), mi.utilities, std::move(laws)};
}

int do_run(const InstanceArgs& args) {
  const ascover::LoadedInstance inst = load_from_args(args);
  const GreedyRun run = greedy_run(inst);
  const std::vector<int> orders = parse_moment_list(args.moments);

  std::vector<Rational> moments;
  for (int p : orders) {
    Rational value(0);
    for (const ascover::CostDistribution& law : run.laws.cover_times) {
      value += ascover::moment_direct(law, p);
    }
    moments.push_back(value);
  }

  return with_output(args.out, [&](std::ostream& out) {
    if (args.format == "json") {
      nlohmann::ordered_json record;
      record["instance"] = inst.label;
      record["scenarios"] = run.scenarios->scenario_count();
      for (std::size_t i = 0; i < moments.size(); ++i) {
        record["greedy_moment_p" + std::to_string(orders[i])] =
            ascover::to_string(moments[i]);
      }
      nlohmann::ordered_json terminal = nlohmann::ordered_json::array();
      for (const auto& [cost, weight] : run.laws.terminal.atoms()) {
        terminal.push_back({ascover::to_string(cost), ascover::to_string(weight)});
      }
      record["terminal_law"] = std::move(terminal);
      nlohmann::ordered_json covers = nlohmann::ordered_json::array();
      for (const ascover::CostDistribution& law : run.laws.cover_times) {
        nlohmann::ordered_json atoms = nlohmann::ordered_json::array();
        for (const auto& [cost, weight] : law.atoms()) {
          atoms.push_back({ascover::to_string(cost), ascover::to_string(weight)});
        }
        covers.push_back(std::move(atoms));
      }
      record["cover_laws"] = std::move(covers);
      out << record.dump(2) << '\n';
    } else {
      out << "instance,scenarios";
      for (int p : orders) out << ",greedy_p" << p;
      out << '\n' << inst.label << ',' << run.scenarios->scenario_count();
      for (const Rational& value : moments) {
        out << ',' << ascover::decimal_string(value, 6);
      }
      out << '\n';
    }
  });
}

struct BoundArgs {
  std::int64_t m = 0;
  InstanceArgs inst;
  bool per_hypothesis = false;
};

int do_bound(const BoundArgs& args) {
  std::int64_t m = args.m;
  if (m == 0) {
    if (args.inst.instance.empty()) {
      throw ascover::Error("bound needs --m or --instance");
    }
    m = load_from_args(args.inst).hypotheses;
    if (m == 0) throw ascover::Error("--instance must be an odt instance");
  }
  const double entropy = ascover::entropy_bound(m);
  const std::vector<int> orders = parse_moment_list(args.inst.moments);
  std::vector<Rational> huffman;
  for (int p : orders) {
    huffman.push_back(ascover::huffman_bound(m, p, !args.per_hypothesis));
  }
  return with_output(args.inst.out, [&](std::ostream& out) {
    if (args.inst.format == "json") {
      nlohmann::ordered_json record;
      record["m"] = m;
      record["entropy_bound"] = entropy;
      for (std::size_t i = 0; i < huffman.size(); ++i) {
        record["huffman_bound_p" + std::to_string(orders[i])] =
            ascover::to_string(huffman[i]);
      }
      out << record.dump(2) << '\n';
    } else {
      out << "m,entropy";
      for (int p : orders) out << ",huffman_p" << p;
      out << '\n' << m << ',';
      char buffer[64];
      std::snprintf(buffer, sizeof buffer, "%.6f", entropy);
      out << buffer;
      for (const Rational& value : huffman) {
        out << ',' << ascover::decimal_string(value, 6);
      }
      out << '\n';
    }
  });
}

struct OracleArgs {
  InstanceArgs inst;
  bool full_key = false;
  int max_scenarios = 0;
  int max_items = 0;
  std::int64_t node_budget = 0;
};

int do_oracle(const OracleArgs& args) {
  const ascover::LoadedInstance inst = load_from_args(args.inst);
  ascover::OracleOptions options;
  if (!inst.single) {
    options.max_scenarios = 6;
    options.max_items = 8;
  }
  if (args.full_key) {
    options.key_mode = ascover::OracleOptions::KeyMode::full_realization;
  }
  if (args.max_scenarios > 0) options.max_scenarios = args.max_scenarios;
  if (args.max_items > 0) options.max_items = args.max_items;
  if (args.node_budget > 0) options.node_budget = args.node_budget;

  struct Result {
    int p;
    std::optional<Rational> value;
    std::string reason;
  };
  std::vector<Result> results;
  for (int p : parse_moment_list(args.inst.moments)) {
    Result result{p, std::nullopt, ""};
    try {
      if (inst.single) {
        const ascover::AscInstance& a = *inst.single;
        const auto scen = ascover::as_scenarios(a.distribution, a.items.size());
        result.value =
            p == 1 ? ascover::optimal_expected_cost(a.utility, *scen, a.items,
                                                    options)
                         .value
                   : ascover::optimal_moment(a.utility, *scen, a.items, p,
                                             options);
      } else {
        const ascover::MultiInstance& mi = *inst.multi;
        const auto scen =
            ascover::as_scenarios(mi.distribution, mi.items.size());
        result.value = ascover::optimal_multi_cover_sum(mi.utilities, *scen,
                                                        mi.items, p, options);
      }
    } catch (const ascover::InstanceTooLarge& e) {
      result.reason = e.what();
    } catch (const ascover::NonIntegralCosts& e) {
      result.reason = e.what();
    }
    results.push_back(std::move(result));
  }

  return with_output(args.inst.out, [&](std::ostream& out) {
    if (args.inst.format == "json") {
      nlohmann::ordered_json record;
      record["instance"] = inst.label;
      for (const Result& result : results) {
        const std::string key = "opt_p" + std::to_string(result.p);
        record[key] = result.value
                          ? nlohmann::ordered_json(ascover::to_string(*result.value))
                          : nlohmann::ordered_json(nullptr);
        if (!result.value) record[key + "_reason"] = result.reason;
      }
      out << record.dump(2) << '\n';
    } else {
      out << "instance";
      for (const Result& result : results) {
        out << ",opt_p" << result.p << ",opt_p" << result.p << "_reason";
      }
      out << '\n' << inst.label;
      for (const Result& result : results) {
        out << ',';
        if (result.value) out << ascover::decimal_string(*result.value, 6);
        out << ',' << csv_quote(result.reason);
      }
      out << '\n';
    }
  });
}

struct CurveArgs {
  InstanceArgs inst;
  int function = 0;
};

int do_curve(const CurveArgs& args) {
  const ascover::LoadedInstance inst = load_from_args(args.inst);
  const GreedyRun run = greedy_run(inst);
  if (args.function < 0 ||
      args.function >= static_cast<int>(run.laws.cover_times.size())) {
    throw ascover::Error("--function index out of range");
  }
  const ascover::StepCurve curve =
      ascover::tail_curve(run.laws.cover_times[args.function]);
  return with_output(args.inst.out, [&](std::ostream& out) {
    ascover::save_curve_csv(out, curve);
  });
}

struct BenchArgs {
  std::vector<std::string> instances;
  std::vector<std::string> positional_instances;
  bool generate = false;
  GenerateArgs gen;
  int variations = 5;
  std::string kind = "odt";
  std::string moments = "1,2,3";
  bool oracle = false;
  std::uint64_t seed = 0;
  std::string out;
  int mc_samples = 0;
  int quota = 0;
  std::string format = "csv";
};

int do_bench(const BenchArgs& args) {
  ascover::BenchConfig config;
  config.instance_paths = args.instances;
  config.instance_paths.insert(config.instance_paths.end(),
                               args.positional_instances.begin(),
                               args.positional_instances.end());
  if (args.generate) {
    ascover::GeneratorSpec spec;
    spec.params.m0 = args.gen.m0;
    spec.params.n = args.gen.n;
    spec.params.density = ascover::parse_rational(args.gen.density);
    spec.params.unknown_rate = ascover::parse_rational(args.gen.unknown_rate);
    spec.params.seed = args.seed;
    spec.variations = args.variations;
    if (args.gen.restrict_to > 0) spec.restrict_to = args.gen.restrict_to;
    config.generator = spec;
  }
  config.kind = ascover::parse_instance_kind(args.kind);
  config.moments = parse_moment_list(args.moments);
  config.oracle = args.oracle;
  config.seed = args.seed;
  config.out_path = args.out;
  config.mc_samples = args.mc_samples;
  config.quota = args.quota;
  config.format = args.format == "json" ? ascover::ReportFormat::json
                                        : ascover::ReportFormat::csv;
  return ascover::run_bench(config, std::cerr);
}

void add_instance_flags(CLI::App* cmd, InstanceArgs& args,
                        bool instance_required = true) {
  auto* opt = cmd->add_option("--instance", args.instance, "instance file");
  if (instance_required) opt->required();
  cmd->add_option("--kind", args.kind, "odt | viral | ssc | minsum");
  cmd->add_option("--quota", args.quota, "node quota (viral)");
  cmd->add_option("--mc-samples", args.mc_samples,
                  "Monte-Carlo scenario count (viral; 0 = exact)");
  cmd->add_option("--seed", args.seed, "random seed");
  cmd->add_option("--moments", args.moments, "moment orders, e.g. 1,2,3");
  cmd->add_option("--format", args.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", args.out, "output file (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adaptive submodular cover toolkit"};
  app.require_subcommand(1);

  GenerateArgs gen_args;
  CLI::App* gen = app.add_subcommand(
      "generate", "synthesize an identification matrix (CSV)");
  gen->add_option("--m0", gen_args.m0, "hypothesis rows before dedup");
  gen->add_option("--n", gen_args.n, "test columns");
  gen->add_option("--density", gen_args.density, "positive-outcome rate");
  gen->add_option("--unknown-rate", gen_args.unknown_rate,
                  "fraction of re-randomized cells");
  gen->add_option("--seed", gen_args.seed, "random seed");
  gen->add_option("--variation", gen_args.variation,
                  "which re-randomization of the unknown cells");
  gen->add_option("--restrict", gen_args.restrict_to,
                  "keep a random subset of this many tests");
  gen->add_option("--out", gen_args.out, "output file (default stdout)");

  InstanceArgs run_args;
  CLI::App* run = app.add_subcommand(
      "run", "run the greedy policy and report exact cost moments");
  add_instance_flags(run, run_args);

  BoundArgs bound_args;
  CLI::App* bound = app.add_subcommand(
      "bound", "entropy and balanced-tree lower bounds for m hypotheses");
  bound->add_option("--m", bound_args.m, "hypothesis count");
  bound->add_flag("--per-hypothesis", bound_args.per_hypothesis,
                  "report bounds divided by m");
  add_instance_flags(bound, bound_args.inst, false);

  OracleArgs oracle_args;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "exact optimal values by dynamic programming (desk scale)");
  add_instance_flags(oracle, oracle_args.inst);
  oracle->add_flag("--full-key", oracle_args.full_key,
                   "memoize on full histories instead of posterior state");
  oracle->add_option("--max-scenarios", oracle_args.max_scenarios,
                     "override the scenario cap");
  oracle->add_option("--max-items", oracle_args.max_items,
                     "override the item cap");
  oracle->add_option("--node-budget", oracle_args.node_budget,
                     "override the memo node budget");

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand(
      "bench", "benchmark report over instances and generated variations");
  bench->add_option("--instance", bench_args.instances, "instance file(s)");
  bench->add_option("files", bench_args.positional_instances,
                    "instance file(s), same as --instance");
  bench->add_flag("--generate", bench_args.generate,
                  "add generated identification instances");
  bench->add_option("--m0", bench_args.gen.m0, "generator: rows before dedup");
  bench->add_option("--n", bench_args.gen.n, "generator: test columns");
  bench->add_option("--density", bench_args.gen.density,
                    "generator: positive-outcome rate");
  bench->add_option("--unknown-rate", bench_args.gen.unknown_rate,
                    "generator: fraction of re-randomized cells");
  bench->add_option("--variations", bench_args.variations,
                    "generator: number of unknown-cell fills");
  bench->add_option("--restrict", bench_args.gen.restrict_to,
                    "generator: keep a random subset of this many tests");
  bench->add_option("--kind", bench_args.kind, "odt | viral | ssc | minsum");
  bench->add_option("--moments", bench_args.moments,
                    "moment orders, e.g. 1,2,3");
  bench->add_flag("--oracle", bench_args.oracle,
                  "include exact optimal columns when within caps");
  bench->add_option("--seed", bench_args.seed, "random seed");
  bench->add_option("--out", bench_args.out, "output file (default stdout)");
  bench->add_option("--mc-samples", bench_args.mc_samples,
                    "Monte-Carlo scenario count (viral; 0 = exact)");
  bench->add_option("--quota", bench_args.quota, "node quota (viral)");
  bench->add_option("--format", bench_args.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));

  CurveArgs curve_args;
  CLI::App* curve = app.add_subcommand(
      "curve", "non-completion curve of the greedy policy (CSV)");
  add_instance_flags(curve, curve_args.inst);
  curve->add_option("--function", curve_args.function,
                    "utility index for multi-utility instances");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return do_generate(gen_args);
    if (run->parsed()) return do_run(run_args);
    if (bound->parsed()) return do_bound(bound_args);
    if (oracle->parsed()) return do_oracle(oracle_args);
    if (bench->parsed()) return do_bench(bench_args);
    if (curve->parsed()) return do_curve(curve_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
