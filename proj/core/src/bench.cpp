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

#include "ascover/bench.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <numeric>
#include <random>
#include <span>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "ascover/analysis.hpp"
#include "ascover/bounds.hpp"
#include "ascover/errors.hpp"
#include "ascover/greedy.hpp"
#include "ascover/minsum.hpp"
#include "ascover/oracle.hpp"
#include "ascover/ssc.hpp"
#include "ascover/viral.hpp"

namespace ascover {

namespace {

// Exact Bernoulli(p) draw: raw/2^64 < p.
bool coin(std::mt19937_64& rng, const Rational& p) {
  const std::uint64_t raw = rng();
  Rational u(mpz_class(static_cast<unsigned long>(raw)), mpz_class(1) << 64);
  u.canonicalize();
  return u < p;
}

// Unbiased index in [0, bound) by rejection; no distribution objects so the
// stream is pinned down by the generator alone.
int bounded_index(std::mt19937_64& rng, int bound) {
  const std::uint64_t span = static_cast<std::uint64_t>(bound);
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t overhang = (max % span + 1) % span;  // 2^64 mod span
  std::uint64_t raw = rng();
  while (overhang != 0 && raw > max - overhang) raw = rng();
  return static_cast<int>(raw % span);
}

// splitmix64 finalizer; derives independent sub-streams from one seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t x = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

InstanceKind parse_instance_kind(const std::string& name) {
  if (name == "odt") return InstanceKind::odt;
  if (name == "viral") return InstanceKind::viral;
  if (name == "ssc") return InstanceKind::ssc;
  if (name == "minsum") return InstanceKind::minsum;
  throw ParseError("unknown instance kind '" + name +
                   "' (expected odt, viral, ssc, or minsum)");
}

OdtInstance generate_wiser_like(const WiserLikeParams& params) {
  if (params.m0 < 1) throw Error("m0 must be positive");
  if (params.n < 1) throw Error("n must be positive");
  if (params.density < 0 || params.density > 1) {
    throw Error("density must lie in [0,1]");
  }
  if (params.unknown_rate < 0 || params.unknown_rate > 1) {
    throw Error("unknown-rate must lie in [0,1]");
  }
  if (params.variation < 0) throw Error("variation must be non-negative");

  // Known entries and the unknown mask depend on the seed only, so every
  // variation shares them; only the unknown fills move.
  std::mt19937_64 known_rng(params.seed);
  std::vector<std::vector<Outcome>> matrix(
      params.m0, std::vector<Outcome>(params.n, 0));
  std::vector<std::pair<int, int>> unknown;
  for (int i = 0; i < params.m0; ++i) {
    for (int j = 0; j < params.n; ++j) {
      matrix[i][j] = coin(known_rng, params.density) ? 1 : 0;
      if (coin(known_rng, params.unknown_rate)) unknown.emplace_back(i, j);
    }
  }
  std::mt19937_64 fill_rng(
      mix_seed(params.seed, static_cast<std::uint64_t>(params.variation)));
  for (const auto& [i, j] : unknown) {
    matrix[i][j] = coin(fill_rng, params.density) ? 1 : 0;
  }
  return OdtInstance(std::move(matrix),
                     std::vector<Rational>(params.n, Rational(1)), true);
}

OdtInstance restrict_tests(const OdtInstance& instance, int test_count,
                           std::uint64_t seed) {
  if (test_count < 1 || test_count > instance.test_count()) {
    throw Error("test subset size out of range");
  }
  std::vector<int> columns(instance.test_count());
  std::iota(columns.begin(), columns.end(), 0);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < test_count; ++i) {
    std::swap(columns[i],
              columns[i + bounded_index(rng, instance.test_count() - i)]);
  }
  columns.resize(test_count);
  std::sort(columns.begin(), columns.end());

  std::vector<std::vector<Outcome>> matrix;
  matrix.reserve(instance.matrix().size());
  for (const auto& row : instance.matrix()) {
    std::vector<Outcome> restricted;
    restricted.reserve(columns.size());
    for (int j : columns) restricted.push_back(row[j]);
    matrix.push_back(std::move(restricted));
  }
  std::vector<Rational> costs;
  costs.reserve(columns.size());
  for (int j : columns) costs.push_back(instance.costs()[j]);
  return OdtInstance(std::move(matrix), std::move(costs), true);
}

LoadedInstance load_instance(InstanceKind kind, const std::string& path,
                             const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  LoadedInstance loaded;
  loaded.kind = kind;
  loaded.label = path;
  switch (kind) {
    case InstanceKind::odt: {
      OdtInstance odt = load_odt_csv(in);
      loaded.hypotheses = odt.hypothesis_count();
      loaded.single = build_odt(odt);
      break;
    }
    case InstanceKind::viral: {
      CascadeNetwork net = load_cascade(in);
      if (options.quota < 1) {
        throw Error("viral instances need a positive node quota");
      }
      const ViralMode mode =
          options.mc_samples > 0
              ? ViralMode::monte_carlo(options.mc_samples, options.seed)
              : ViralMode::exact();
      loaded.single = build_viral(net, options.quota, mode).asc;
      break;
    }
    case InstanceKind::ssc: {
      loaded.single =
          build_ssc(load_ssc(in), false, options.enumeration_cap);
      break;
    }
    case InstanceKind::minsum: {
      auto [sets, costs] = load_setcover(in);
      loaded.multi = build_minsum_setcover(sets, costs);
      break;
    }
  }
  return loaded;
}

LoadOptions BenchConfig::load_options() const {
  LoadOptions options;
  options.quota = quota;
  options.mc_samples = mc_samples;
  options.seed = seed;
  return options;
}

namespace {

void fill_oracle(BenchMomentEntry& entry, const UtilityModel* f,
                 std::span<const UtilityModel> fs,
                 const ScenarioDistribution& dist, const ItemSet& items) {
  try {
    if (f != nullptr) {
      entry.opt = entry.p == 1
                      ? optimal_expected_cost(*f, dist, items).value
                      : optimal_moment(*f, dist, items, entry.p);
    } else {
      entry.opt = optimal_multi_cover_sum(fs, dist, items, entry.p);
    }
  } catch (const InstanceTooLarge& e) {
    entry.opt_reason = e.what();
  } catch (const NonIntegralCosts& e) {
    entry.opt_reason = e.what();
  }
}

BenchRow make_row(const LoadedInstance& inst, const BenchConfig& config) {
  BenchRow row;
  row.instance = inst.label;
  if (inst.single) {
    const AscInstance& a = *inst.single;
    const auto scen = as_scenarios(a.distribution, a.items.size());
    const Policy policy = greedy_policy(a.utility, a.distribution, a.items);
    const UtilityModel fs[] = {a.utility};
    const PolicyCostLaws laws = cost_distribution(policy, *scen, a.items, fs);
    const bool identification = inst.kind == InstanceKind::odt;
    row.m = identification ? inst.hypotheses : scen->scenario_count();
    if (identification) row.entropy = entropy_bound(row.m);
    for (int p : config.moments) {
      BenchMomentEntry entry;
      entry.p = p;
      entry.greedy_mean = moment_direct(laws.terminal, p);
      entry.greedy_total = identification ? Rational(row.m) * entry.greedy_mean
                                          : entry.greedy_mean;
      if (identification) {
        entry.huffman_total = huffman_bound(row.m, p);
        if (*entry.huffman_total > 0) {
          entry.ratio = entry.greedy_total / *entry.huffman_total;
        }
      }
      if (config.oracle) fill_oracle(entry, &a.utility, {}, *scen, a.items);
      row.moments.push_back(std::move(entry));
    }
  } else {
    const MultiInstance& mi = *inst.multi;
    const auto scen = as_scenarios(mi.distribution, mi.items.size());
    const Policy policy =
        multi_greedy_policy(mi.utilities, mi.distribution, mi.items);
    const PolicyCostLaws laws =
        cost_distribution(policy, *scen, mi.items, mi.utilities);
    row.m = scen->scenario_count();
    for (int p : config.moments) {
      BenchMomentEntry entry;
      entry.p = p;
      entry.greedy_mean = Rational(0);
      for (const CostDistribution& law : laws.cover_times) {
        entry.greedy_mean += moment_direct(law, p);
      }
      entry.greedy_total = entry.greedy_mean;
      if (config.oracle) {
        fill_oracle(entry, nullptr, mi.utilities, *scen, mi.items);
      }
      row.moments.push_back(std::move(entry));
    }
  }
  return row;
}

std::string double_string(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6f", value);
  return buffer;
}

}  // namespace

std::vector<BenchRow> run_bench_rows(const BenchConfig& config) {
  if (config.moments.empty()) throw Error("moments list must be non-empty");
  for (int p : config.moments) {
    if (p < 1 || p > 4) throw Error("moment orders must lie in {1,2,3,4}");
  }

  std::vector<LoadedInstance> instances;
  if (config.generator) {
    const GeneratorSpec& gen = *config.generator;
    if (gen.variations < 1) throw Error("variations must be positive");
    for (int v = 0; v < gen.variations; ++v) {
      WiserLikeParams params = gen.params;
      params.variation = v;
      OdtInstance odt = generate_wiser_like(params);
      std::string label =
          "wiser-m" + std::to_string(params.m0) + "-v" + std::to_string(v);
      if (gen.restrict_to) {
        odt = restrict_tests(odt, *gen.restrict_to,
                             mix_seed(params.seed, 1000 + v));
        label += "-n" + std::to_string(*gen.restrict_to);
      }
      LoadedInstance inst;
      inst.kind = InstanceKind::odt;
      inst.label = std::move(label);
      inst.hypotheses = odt.hypothesis_count();
      inst.single = build_odt(odt);
      instances.push_back(std::move(inst));
    }
  }
  for (const std::string& path : config.instance_paths) {
    instances.push_back(load_instance(config.kind, path, config.load_options()));
  }

  std::vector<BenchRow> rows;
  rows.reserve(instances.size());
  for (const LoadedInstance& inst : instances) {
    rows.push_back(make_row(inst, config));
  }
  return rows;
}

void write_report_csv(std::ostream& out, const std::vector<BenchRow>& rows,
                      const std::vector<int>& moments, bool oracle) {
  out << "instance,m,entropy";
  for (int p : moments) {
    out << ",greedy_p" << p << ",total_p" << p << ",huffman_p" << p
        << ",ratio_p" << p;
    if (oracle) out << ",opt_p" << p;
  }
  out << '\n';
  for (const BenchRow& row : rows) {
    out << row.instance << ',' << row.m << ',';
    if (row.entropy) out << double_string(*row.entropy);
    for (const BenchMomentEntry& entry : row.moments) {
      out << ',' << decimal_string(entry.greedy_mean, 6) << ','
          << decimal_string(entry.greedy_total, 6) << ',';
      if (entry.huffman_total) out << decimal_string(*entry.huffman_total, 6);
      out << ',';
      if (entry.ratio) out << decimal_string(*entry.ratio, 6);
      if (oracle) {
        out << ',';
        if (entry.opt) out << decimal_string(*entry.opt, 6);
      }
    }
    out << '\n';
  }
}

void write_report_json(std::ostream& out, const std::vector<BenchRow>& rows,
                       const std::vector<int>& moments, bool oracle) {
  using json = nlohmann::ordered_json;
  json report = json::array();
  for (const BenchRow& row : rows) {
    json record;
    record["instance"] = row.instance;
    record["m"] = row.m;
    record["entropy_bound"] = row.entropy ? json(*row.entropy) : json(nullptr);
    for (const BenchMomentEntry& entry : row.moments) {
      const std::string suffix = "_p" + std::to_string(entry.p);
      record["greedy_moment" + suffix] = to_string(entry.greedy_mean);
      record["greedy_total" + suffix] = to_string(entry.greedy_total);
      record["huffman_bound" + suffix] =
          entry.huffman_total ? json(to_string(*entry.huffman_total))
                              : json(nullptr);
      record["ratio" + suffix] =
          entry.ratio ? json(to_string(*entry.ratio)) : json(nullptr);
      if (oracle) {
        record["opt" + suffix] =
            entry.opt ? json(to_string(*entry.opt)) : json(nullptr);
        if (!entry.opt) record["opt" + suffix + "_reason"] = entry.opt_reason;
      }
    }
    report.push_back(std::move(record));
  }
  out << report.dump(2) << '\n';
  (void)moments;
}

int run_bench(const BenchConfig& config, std::ostream& err) {
  try {
    const std::vector<BenchRow> rows = run_bench_rows(config);
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!config.out_path.empty()) {
      file.open(config.out_path);
      if (!file) {
        err << "error: cannot write " << config.out_path << '\n';
        return 1;
      }
      out = &file;
    }
    if (config.format == ReportFormat::csv) {
      write_report_csv(*out, rows, config.moments, config.oracle);
    } else {
      write_report_json(*out, rows, config.moments, config.oracle);
    }
    out->flush();
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace ascover
