// Copyright 2026 The agreeclust Authors.
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

// The `agreeclust` command line: cluster, validate and bench subcommands.
// Everything except argument parsing is exposed here so tests can drive it.

#ifndef AGREECLUST_TOOLS_COMMANDS_H_
#define AGREECLUST_TOOLS_COMMANDS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "agreeclust/clustering.h"
#include "agreeclust/edge_list.h"
#include "agreeclust/eval.h"
#include "agreeclust/graph.h"
#include "agreeclust/mpc.h"
#include "agreeclust/params.h"
#include "agreeclust/pipeline.h"

namespace agreeclust::cli {

enum class Driver { kInMemory, kMpc, kStream };

std::string DriverName(Driver driver);
absl::StatusOr<Driver> ParseDriver(const std::string& name);
absl::StatusOr<OracleMode> ParseMode(const std::string& name);

struct RunConfig {
  // Exactly one of `input` and `gen` is set.
  std::string input;
  std::string gen;
  Params params;
  Driver driver = Driver::kInMemory;
  OracleMode mode = OracleMode::kExact;
  std::size_t machines = 4;
  double delta = 0.9;
  Enforcement enforcement = Enforcement::kAudit;
  std::string out_dir;
};

absl::Status ValidateRunConfig(const RunConfig& config);

struct LoadedInput {
  std::string dataset;
  SignedGraph graph;
  VertexIndex index;
};

// Reads the edge-list file or runs the generator (seeded by params.seed).
absl::StatusOr<LoadedInput> LoadInput(const RunConfig& config);

struct RunOutcome {
  Clustering clustering;
  ClusterStats stats;
  int rounds = 0;
  int passes = 0;
  std::optional<MpcTrace> trace;
  double wall_ms = 0.0;
};

// Runs the configured driver. Wall time covers the driver only.
absl::StatusOr<RunOutcome> ExecuteRun(const RunConfig& config,
                                      const LoadedInput& input);

std::string StatsJson(const RunConfig& config, const LoadedInput& input,
                      const RunOutcome& outcome);
std::string TraceJson(const MpcTrace& trace, double communication_bound);

// Writes clusters.txt, stats.json and, for the MPC driver, trace.json into
// config.out_dir (created if missing). Prints a one-line summary to `out`.
absl::Status CmdCluster(const RunConfig& config, std::ostream& out);

struct ValidateReport {
  bool preconditions_met = false;
  std::vector<std::string> failures;
};

// Prints one line per check. Fails (in the report, not the status) when any
// check finds a violation.
absl::StatusOr<ValidateReport> CmdValidate(const RunConfig& config,
                                           std::ostream& out);

struct BenchSweep {
  std::vector<std::string> inputs;
  std::vector<std::string> gens;
  // beta = lambda values; empty means the base params only.
  std::vector<double> betas;
  std::vector<std::uint64_t> seeds;
  std::vector<Driver> drivers = {Driver::kInMemory};
  std::vector<OracleMode> modes = {OracleMode::kExact};
  bool include_pivot = false;
};

inline constexpr char kBenchCsvHeader[] =
    "dataset,algorithm,driver,mode,n,m,beta,lambda,a,seed,cost,num_clusters,"
    "in_edge_fraction,rounds,passes,wall_ms,error";

// One row per (dataset, beta, seed, driver, mode) plus Pivot rows. Failed
// runs become rows with the error column set; the sweep goes on.
absl::Status CmdBench(const BenchSweep& sweep, const RunConfig& base,
                      std::ostream& csv);

// Parses argv and dispatches. Returns the process exit code.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace agreeclust::cli

#endif  // AGREECLUST_TOOLS_COMMANDS_H_
