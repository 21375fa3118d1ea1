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

#ifndef ASCOVER_BENCH_HPP_
#define ASCOVER_BENCH_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ascover/instance.hpp"
#include "ascover/odt.hpp"
#include "ascover/rational.hpp"

namespace ascover {

enum class InstanceKind { odt, viral, ssc, minsum };
enum class ReportFormat { csv, json };

InstanceKind parse_instance_kind(const std::string& name);

// Synthetic toxin/symptom-style identification matrices: random binary
// entries at the given density, with a fraction of "unknown" cells whose
// fills are re-randomized per variation (fair coin keyed by seed and
// variation).  Duplicate hypothesis rows collapse, so the final hypothesis
// count can land below m0.
struct WiserLikeParams {
  int m0 = 415;
  int n = 79;
  Rational density{1, 2};
  Rational unknown_rate{1, 10};
  std::uint64_t seed = 0;
  int variation = 0;
};

OdtInstance generate_wiser_like(const WiserLikeParams& params);

// Random column subset of the given size (rows re-deduplicated), for
// small-test-pool variants of a generated matrix.
OdtInstance restrict_tests(const OdtInstance& instance, int test_count,
                           std::uint64_t seed);

// An instance loaded or generated for the CLI: either a single-utility
// cover instance or a multi-utility one, plus the metadata the report
// needs.
struct LoadedInstance {
  InstanceKind kind = InstanceKind::odt;
  std::string label;
  std::optional<AscInstance> single;
  std::optional<MultiInstance> multi;
  // Hypothesis count when the entropy/Huffman columns apply (odt only).
  int hypotheses = 0;
};

struct LoadOptions {
  int quota = 0;        // viral: required node quota
  int mc_samples = 0;   // viral: >0 switches to Monte-Carlo scenarios
  std::uint64_t seed = 0;
  std::int64_t enumeration_cap = 1000000;
};

LoadedInstance load_instance(InstanceKind kind, const std::string& path,
                             const LoadOptions& options);

struct GeneratorSpec {
  WiserLikeParams params;
  int variations = 1;
  std::optional<int> restrict_to;  // column subsample per variation
};

struct BenchConfig {
  std::vector<std::string> instance_paths;
  std::optional<GeneratorSpec> generator;
  InstanceKind kind = InstanceKind::odt;
  std::vector<int> moments = {1, 2, 3};
  bool oracle = false;
  std::uint64_t seed = 0;
  std::string out_path;  // empty writes to stdout
  int mc_samples = 0;
  int quota = 0;
  ReportFormat format = ReportFormat::csv;
  LoadOptions load_options() const;
};

struct BenchMomentEntry {
  int p = 1;
  Rational greedy_mean;   // E[C^p] (multi: summed cover-time moments)
  Rational greedy_total;  // scaled by m for odt, per the totals convention
  std::optional<Rational> huffman_total;
  std::optional<Rational> ratio;  // greedy_total / huffman_total
  std::optional<Rational> opt;    // oracle value when enabled and in caps
  std::string opt_reason;         // why opt is absent
};

struct BenchRow {
  std::string instance;
  int m = 0;  // hypotheses (odt) or scenario count
  std::optional<double> entropy;
  std::vector<BenchMomentEntry> moments;
};

std::vector<BenchRow> run_bench_rows(const BenchConfig& config);

// Rationals render as 6-place decimals in CSV and exact "num/den" strings
// in JSON; both outputs are byte-identical across runs for a fixed config.
void write_report_csv(std::ostream& out, const std::vector<BenchRow>& rows,
                      const std::vector<int>& moments, bool oracle);
void write_report_json(std::ostream& out, const std::vector<BenchRow>& rows,
                       const std::vector<int>& moments, bool oracle);

// Builds, runs, reports; returns a process exit code, diagnostics on err.
int run_bench(const BenchConfig& config, std::ostream& err);

}  // namespace ascover

#endif  // ASCOVER_BENCH_HPP_
