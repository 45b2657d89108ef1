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

#include "commands.h"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "absl/strings/str_cat.h"
#include "agreeclust/components.h"
#include "agreeclust/generators.h"
#include "agreeclust/streaming.h"
#include "agreeclust/validators.h"
#include "json.hpp"

namespace agreeclust::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kMaxWitnesses = 10;

std::string ToString(std::string_view s) { return std::string(s); }

absl::Status WriteFile(const std::filesystem::path& path,
                       const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot write ", path.string()));
  }
  out << contents;
  if (!out) {
    return absl::DataLossError(absl::StrCat("write failed: ", path.string()));
  }
  return absl::OkStatus();
}

std::string CsvField(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string FormatViolation(const Violation& v) {
  std::string line = absl::StrCat(v.check, " (", v.u, ", ", v.v, ")");
  if (!v.detail.empty()) absl::StrAppend(&line, ": ", v.detail);
  return line;
}

}  // namespace

std::string DriverName(Driver driver) {
  switch (driver) {
    case Driver::kInMemory:
      return "inmem";
    case Driver::kMpc:
      return "mpc";
    case Driver::kStream:
      return "stream";
  }
  return "?";
}

absl::StatusOr<Driver> ParseDriver(const std::string& name) {
  if (name == "inmem") return Driver::kInMemory;
  if (name == "mpc") return Driver::kMpc;
  if (name == "stream") return Driver::kStream;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown driver '", name, "'; use inmem, mpc or stream"));
}

absl::StatusOr<OracleMode> ParseMode(const std::string& name) {
  if (name == "exact") return OracleMode::kExact;
  if (name == "sketch") return OracleMode::kSketch;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown mode '", name, "'; use exact or sketch"));
}

absl::Status ValidateRunConfig(const RunConfig& config) {
  if (config.input.empty() == config.gen.empty()) {
    return absl::InvalidArgumentError(
        "exactly one of --input and --gen is required");
  }
  if (absl::Status s = ValidateParams(config.params); !s.ok()) return s;
  if (config.driver == Driver::kMpc) {
    if (config.machines == 0) {
      return absl::InvalidArgumentError("the mpc driver needs --machines >= 1");
    }
    if (!(config.delta > 0.0 && config.delta < 1.0)) {
      return absl::InvalidArgumentError(
          "the mpc driver needs --delta in (0, 1)");
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<LoadedInput> LoadInput(const RunConfig& config) {
  LoadedInput loaded;
  if (!config.gen.empty()) {
    absl::StatusOr<SignedGraph> graph =
        GenerateFromSpec(config.gen, config.params.seed);
    if (!graph.ok()) return graph.status();
    loaded.dataset = config.gen;
    loaded.graph = *std::move(graph);
    loaded.index = VertexIndex::Identity(loaded.graph.num_vertices());
    return loaded;
  }
  absl::StatusOr<LoadedGraph> file = ReadEdgeListFile(config.input);
  if (!file.ok()) return file.status();
  loaded.dataset = config.input;
  loaded.graph = std::move(file->graph);
  loaded.index = std::move(file->index);
  return loaded;
}

absl::StatusOr<RunOutcome> ExecuteRun(const RunConfig& config,
                                      const LoadedInput& input) {
  if (absl::Status s = ValidateRunConfig(config); !s.ok()) return s;
  const SignedGraph& graph = input.graph;
  RunOutcome outcome;

  // The streaming provider's indexing scan counts as loading.
  std::optional<FileEdgeStream> file_stream;
  if (config.driver == Driver::kStream && !config.input.empty()) {
    absl::StatusOr<FileEdgeStream> opened = FileEdgeStream::Open(config.input);
    if (!opened.ok()) return opened.status();
    file_stream.emplace(*std::move(opened));
  }

  const auto start = std::chrono::steady_clock::now();
  switch (config.driver) {
    case Driver::kInMemory: {
      absl::StatusOr<InMemoryResult> result =
          RunInMemory(graph, config.params, config.mode);
      if (!result.ok()) return result.status();
      outcome.clustering = std::move(result->clustering);
      break;
    }
    case Driver::kMpc: {
      absl::StatusOr<MpcConfig> mpc =
          MakeMpcConfig(graph.num_vertices(), graph.num_plus_edges(),
                        config.machines, config.delta, config.enforcement);
      if (!mpc.ok()) return mpc.status();
      absl::StatusOr<MpcResult> result =
          RunMpcPipeline(graph, config.params, config.mode, *mpc);
      if (!result.ok()) return result.status();
      outcome.clustering = std::move(result->clustering);
      outcome.rounds = result->trace.rounds();
      outcome.trace = std::move(result->trace);
      break;
    }
    case Driver::kStream: {
      absl::StatusOr<StreamingResult> result;
      if (file_stream.has_value()) {
        result = RunStreamingPipeline(*file_stream, config.params, config.mode);
      } else {
        VectorEdgeStream stream = VectorEdgeStream::FromGraph(graph);
        result = RunStreamingPipeline(stream, config.params, config.mode);
      }
      if (!result.ok()) return result.status();
      outcome.clustering = std::move(result->clustering);
      outcome.passes = result->passes;
      break;
    }
  }
  outcome.wall_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();

  absl::StatusOr<ClusterStats> stats =
      ComputeClusterStats(graph, outcome.clustering);
  if (!stats.ok()) return stats.status();
  outcome.stats = *std::move(stats);
  return outcome;
}

std::string StatsJson(const RunConfig& config, const LoadedInput& input,
                      const RunOutcome& outcome) {
  Json j;
  j["dataset"] = input.dataset;
  j["n"] = input.graph.num_vertices();
  j["m"] = input.graph.num_plus_edges();
  j["params"] = {{"beta", config.params.beta},
                 {"lambda", config.params.lambda},
                 {"a", config.params.a},
                 {"seed", config.params.seed},
                 {"sketch_cap_factor", config.params.sketch_cap_factor}};
  j["driver"] = DriverName(config.driver);
  j["mode"] = ToString(OracleModeName(config.mode));
  if (config.driver == Driver::kMpc && outcome.trace.has_value()) {
    j["mpc"] = {{"machines", config.machines},
                {"delta", config.delta},
                {"memory_cap", outcome.trace->memory_cap},
                {"enforcement", ToString(EnforcementName(config.enforcement))},
                {"underprovisioned", outcome.trace->underprovisioned},
                {"violations", outcome.trace->violations.size()}};
  }
  j["num_clusters"] = outcome.stats.num_clusters;
  Json sizes = Json::object();
  for (const auto& [size, count] : outcome.stats.size_histogram) {
    sizes[std::to_string(size)] = count;
  }
  j["cluster_sizes"] = std::move(sizes);
  j["in_edge_fraction"] = outcome.stats.intra_cluster_edge_fraction;
  j["cost"] = outcome.stats.objective;
  j["rounds"] = outcome.rounds;
  j["passes"] = outcome.passes;
  j["wall_ms"] = outcome.wall_ms;
  j["analysis_valid"] = AnalysisValid(config.params);
  j["approximation_bound"] = ApproximationBound(config.params);
  return j.dump(2) + "\n";
}

std::string TraceJson(const MpcTrace& trace, double communication_bound) {
  Json j;
  j["rounds"] = trace.rounds();
  Json rounds = Json::array();
  for (const RoundLoad& load : trace.per_round) {
    rounds.push_back({{"sent_max", load.sent_max},
                      {"recv_max", load.recv_max},
                      {"resident_max", load.resident_max}});
  }
  j["per_round"] = std::move(rounds);
  j["total_words"] = trace.total_words;
  j["communication_bound"] = communication_bound;
  j["machines"] = trace.num_machines;
  j["memory_cap"] = trace.memory_cap;
  j["underprovisioned"] = trace.underprovisioned;
  Json violations = Json::array();
  for (const CapViolation& v : trace.violations) {
    violations.push_back({{"round", v.round},
                          {"machine", v.machine},
                          {"kind", ToString(LoadKindName(v.kind))},
                          {"words", v.words}});
  }
  j["violations"] = std::move(violations);
  return j.dump(2) + "\n";
}

absl::Status CmdCluster(const RunConfig& config, std::ostream& out) {
  if (absl::Status s = ValidateRunConfig(config); !s.ok()) return s;
  absl::StatusOr<LoadedInput> input = LoadInput(config);
  if (!input.ok()) return input.status();
  absl::StatusOr<RunOutcome> outcome = ExecuteRun(config, *input);
  if (!outcome.ok()) return outcome.status();

  const std::filesystem::path dir = config.out_dir.empty()
                                        ? std::filesystem::path(".")
                                        : std::filesystem::path(config.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot create ", dir.string(), ": ", ec.message()));
  }

  std::ostringstream clusters;
  WriteClusteringFile(outcome->clustering, input->index, clusters);
  if (absl::Status s = WriteFile(dir / "clusters.txt", clusters.str());
      !s.ok()) {
    return s;
  }
  if (absl::Status s =
          WriteFile(dir / "stats.json", StatsJson(config, *input, *outcome));
      !s.ok()) {
    return s;
  }
  if (outcome->trace.has_value()) {
    const double bound = MpcCommunicationBound(
        input->graph.num_vertices(), input->graph.num_plus_edges(),
        config.params);
    if (absl::Status s =
            WriteFile(dir / "trace.json", TraceJson(*outcome->trace, bound));
        !s.ok()) {
      return s;
    }
  }

  out << input->dataset << ": n=" << input->graph.num_vertices()
      << " m=" << input->graph.num_plus_edges()
      << " clusters=" << outcome->stats.num_clusters
      << " cost=" << outcome->stats.objective;
  if (config.driver == Driver::kMpc) out << " rounds=" << outcome->rounds;
  if (config.driver == Driver::kStream) out << " passes=" << outcome->passes;
  out << "\n";
  return absl::OkStatus();
}

absl::StatusOr<ValidateReport> CmdValidate(const RunConfig& config,
                                           std::ostream& out) {
  if (absl::Status s = ValidateRunConfig(config); !s.ok()) return s;
  absl::StatusOr<LoadedInput> input = LoadInput(config);
  if (!input.ok()) return input.status();
  const SignedGraph& graph = input->graph;
  const Params& params = config.params;

  ValidateReport report;
  auto record = [&](const std::string& name,
                    const std::vector<std::string>& witnesses) {
    if (witnesses.empty()) {
      out << "PASS " << name << "\n";
      return;
    }
    out << "FAIL " << name << " (" << witnesses.size() << " violations)\n";
    for (std::size_t i = 0; i < witnesses.size() && i < kMaxWitnesses; ++i) {
      out << "  " << witnesses[i] << "\n";
    }
    report.failures.push_back(name);
  };
  auto describe = [](const std::vector<Violation>& violations) {
    std::vector<std::string> lines;
    for (const Violation& v : violations) lines.push_back(FormatViolation(v));
    return lines;
  };

  absl::StatusOr<InMemoryResult> inmem =
      RunInMemory(graph, params, config.mode);
  if (!inmem.ok()) return inmem.status();
  const Clustering& components = inmem->clustering;

  report.preconditions_met = AnalysisValid(params);
  if (!report.preconditions_met) {
    out << "analysis preconditions unmet (beta=" << params.beta
        << ", lambda=" << params.lambda << "): structural checks skipped\n";
  } else {
    const StructuralReport structural =
        RunStructuralChecks(inmem->sparsified, components, params);
    record("sparsified graph properties", describe(structural.violations));
    const DiameterReport diameter =
        ValidateDiameter(inmem->sparsified.reduced, components);
    std::vector<std::string> long_clusters;
    for (ClusterId c : diameter.violations) {
      long_clusters.push_back(
          absl::StrCat("cluster ", c, " exceeds diameter 4"));
    }
    record("component diameter <= 4", long_clusters);
    const Clustering propagated = LabelPropagation4(inmem->sparsified);
    record("label propagation matches components",
           SamePartition(propagated, components)
               ? std::vector<std::string>{}
               : std::vector<std::string>{"partitions differ"});
  }

  const WeakAgreementBoundsReport fact =
      CheckWeakAgreementBounds(graph, params.beta);
  record("weak agreement degree, intersection and chain bounds",
         describe(fact.violations));

  // Driver equivalence is unconditional: all three run the same four
  // label-propagation rounds.
  std::vector<std::string> mismatches;
  const Clustering reference = LabelPropagation4(inmem->sparsified);
  absl::StatusOr<MpcConfig> mpc =
      MakeMpcConfig(graph.num_vertices(), graph.num_plus_edges(),
                    config.machines, config.delta, Enforcement::kAudit);
  if (!mpc.ok()) return mpc.status();
  absl::StatusOr<MpcResult> mpc_result =
      RunMpcPipeline(graph, params, config.mode, *mpc);
  if (!mpc_result.ok()) return mpc_result.status();
  if (!SamePartition(mpc_result->clustering, reference)) {
    mismatches.push_back("mpc driver differs from in-memory");
  }
  if (mpc_result->trace.rounds() != kMpcRounds) {
    mismatches.push_back(absl::StrCat("mpc used ", mpc_result->trace.rounds(),
                                      " rounds, expected ", kMpcRounds));
  }
  VectorEdgeStream stream = VectorEdgeStream::FromGraph(graph, params.seed);
  absl::StatusOr<StreamingResult> streamed =
      RunStreamingPipeline(stream, params, config.mode);
  if (!streamed.ok()) return streamed.status();
  if (!SamePartition(streamed->clustering, reference)) {
    mismatches.push_back("streaming driver differs from in-memory");
  }
  if (streamed->passes != kStreamingPasses) {
    mismatches.push_back(absl::StrCat("streaming used ", streamed->passes,
                                      " passes, expected ", kStreamingPasses));
  }
  record("driver equivalence", mismatches);

  out << (report.failures.empty() ? "all checks passed"
                                  : absl::StrCat(report.failures.size(),
                                                 " check(s) failed"))
      << "\n";
  return report;
}

absl::Status CmdBench(const BenchSweep& sweep, const RunConfig& base,
                      std::ostream& csv) {
  csv << kBenchCsvHeader << "\n";

  std::vector<RunConfig> datasets;
  for (const std::string& path : sweep.inputs) {
    RunConfig c = base;
    c.input = path;
    c.gen.clear();
    datasets.push_back(std::move(c));
  }
  for (const std::string& spec : sweep.gens) {
    RunConfig c = base;
    c.gen = spec;
    c.input.clear();
    datasets.push_back(std::move(c));
  }
  const std::vector<std::uint64_t> seeds =
      sweep.seeds.empty() ? std::vector<std::uint64_t>{base.params.seed}
                          : sweep.seeds;

  for (const RunConfig& dataset : datasets) {
    for (std::uint64_t seed : seeds) {
      RunConfig seeded = dataset;
      seeded.params.seed = seed;
      absl::StatusOr<LoadedInput> input = LoadInput(seeded);
      const std::string name = seeded.input.empty() ? seeded.gen : seeded.input;

      std::vector<Params> param_sets;
      if (sweep.betas.empty()) {
        param_sets.push_back(seeded.params);
      }
      for (double beta : sweep.betas) {
        Params p = seeded.params;
        p.beta = beta;
        p.lambda = beta;
        param_sets.push_back(p);
      }

      for (const Params& params : param_sets) {
        for (Driver driver : sweep.drivers) {
          for (OracleMode mode : sweep.modes) {
            RunConfig run = seeded;
            run.params = params;
            run.driver = driver;
            run.mode = mode;
            absl::StatusOr<RunOutcome> outcome =
                input.ok() ? ExecuteRun(run, *input)
                           : absl::StatusOr<RunOutcome>(input.status());
            const std::size_t n = input.ok() ? input->graph.num_vertices() : 0;
            const std::uint64_t m =
                input.ok() ? input->graph.num_plus_edges() : 0;
            csv << CsvField(name) << ",agreement," << DriverName(driver) << ","
                << OracleModeName(mode) << "," << n << "," << m << ","
                << params.beta << "," << params.lambda << "," << params.a
                << "," << params.seed << ",";
            if (outcome.ok()) {
              csv << outcome->stats.objective << ","
                  << outcome->stats.num_clusters << ","
                  << outcome->stats.intra_cluster_edge_fraction << ","
                  << outcome->rounds << "," << outcome->passes << ","
                  << outcome->wall_ms << ",\n";
            } else {
              csv << ",,,,,,"
                  << CsvField(std::string(outcome.status().message())) << "\n";
            }
          }
        }
      }

      if (sweep.include_pivot) {
        csv << CsvField(name) << ",pivot,-,-,";
        if (!input.ok()) {
          csv << "0,0,,,," << seed << ",,,,,,,"
              << CsvField(std::string(input.status().message())) << "\n";
          continue;
        }
        const auto start = std::chrono::steady_clock::now();
        const Clustering pivot = PivotBaseline(input->graph, seed);
        const double wall_ms = std::chrono::duration<double, std::milli>(
                                   std::chrono::steady_clock::now() - start)
                                   .count();
        absl::StatusOr<ClusterStats> stats =
            ComputeClusterStats(input->graph, pivot);
        csv << input->graph.num_vertices() << ","
            << input->graph.num_plus_edges() << ",,,," << seed << ","
            << stats->objective << "," << stats->num_clusters << ","
            << stats->intra_cluster_edge_fraction << ",0,0," << wall_ms
            << ",\n";
      }
    }
  }
  return absl::OkStatus();
}

namespace {

void AddRunFlags(CLI::App* app, RunConfig& config, std::string& driver,
                 std::string& mode, bool& strict, bool& audit) {
  auto* input = app->add_option("--input", config.input, "Edge-list file");
  auto* gen = app->add_option(
      "--gen", config.gen,
      "Generator: gnp:n:p, planted:k:size:pin:pout or tight:d:beta:xmult");
  input->excludes(gen);
  app->add_option("--beta", config.params.beta, "Agreement tolerance")
      ->capture_default_str();
  app->add_option("--lambda", config.params.lambda, "Lightness threshold")
      ->capture_default_str();
  app->add_option("--a", config.params.a, "Sampling constant")
      ->capture_default_str();
  app->add_option("--seed", config.params.seed, "Random seed")
      ->capture_default_str();
  app->add_option("--driver", driver, "inmem, mpc or stream")
      ->capture_default_str();
  app->add_option("--mode", mode, "exact or sketch")->capture_default_str();
  app->add_option("--machines", config.machines, "MPC machine count")
      ->capture_default_str();
  app->add_option("--delta", config.delta, "MPC memory exponent")
      ->capture_default_str();
  auto* audit_flag =
      app->add_flag("--mpc-audit", audit,
                    "Record MPC cap violations (default)");
  auto* strict_flag =
      app->add_flag("--mpc-strict", strict, "Fail on any MPC cap violation");
  audit_flag->excludes(strict_flag);
  app->add_option("--out", config.out_dir, "Output directory");
}

absl::Status FinishRunConfig(RunConfig& config, const std::string& driver,
                             const std::string& mode, bool strict) {
  absl::StatusOr<Driver> d = ParseDriver(driver);
  if (!d.ok()) return d.status();
  absl::StatusOr<OracleMode> m = ParseMode(mode);
  if (!m.ok()) return m.status();
  config.driver = *d;
  config.mode = *m;
  config.enforcement = strict ? Enforcement::kStrict : Enforcement::kAudit;
  return ValidateRunConfig(config);
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Agreement-based correlation clustering"};
  app.name("agreeclust");
  app.require_subcommand(1);

  RunConfig config;
  std::string driver = "inmem";
  std::string mode = "exact";
  bool strict = false;
  bool audit = false;

  CLI::App* cluster = app.add_subcommand("cluster", "Cluster a graph");
  AddRunFlags(cluster, config, driver, mode, strict, audit);

  CLI::App* validate =
      app.add_subcommand("validate", "Check the structural guarantees");
  AddRunFlags(validate, config, driver, mode, strict, audit);

  BenchSweep sweep;
  std::vector<std::string> drivers;
  std::vector<std::string> modes;
  CLI::App* bench = app.add_subcommand("bench", "Run a parameter sweep");
  bench->add_option("--input", sweep.inputs, "Edge-list files");
  bench->add_option("--gen", sweep.gens, "Generator specs");
  bench->add_option("--betas", sweep.betas, "beta = lambda values")
      ->delimiter(',');
  bench->add_option("--seeds", sweep.seeds, "Seeds")->delimiter(',');
  bench->add_option("--drivers", drivers, "inmem, mpc, stream")
      ->delimiter(',');
  bench->add_option("--modes", modes, "exact, sketch")->delimiter(',');
  bench->add_flag("--pivot", sweep.include_pivot, "Add Pivot baseline rows");
  bench->add_option("--beta", config.params.beta, "Base beta");
  bench->add_option("--lambda", config.params.lambda, "Base lambda");
  bench->add_option("--a", config.params.a, "Sampling constant");
  bench->add_option("--seed", config.params.seed, "Base seed");
  bench->add_option("--machines", config.machines, "MPC machine count");
  bench->add_option("--delta", config.delta, "MPC memory exponent");
  bench->add_option("--out", config.out_dir, "Directory for bench.csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  auto fail = [&](const absl::Status& status) {
    err << "error: " << status.message() << "\n";
    return 1;
  };

  if (cluster->parsed()) {
    if (absl::Status s = FinishRunConfig(config, driver, mode, strict);
        !s.ok()) {
      return fail(s);
    }
    absl::Status s = CmdCluster(config, out);
    return s.ok() ? 0 : fail(s);
  }

  if (validate->parsed()) {
    if (absl::Status s = FinishRunConfig(config, driver, mode, strict);
        !s.ok()) {
      return fail(s);
    }
    absl::StatusOr<ValidateReport> report = CmdValidate(config, out);
    if (!report.ok()) return fail(report.status());
    return report->failures.empty() ? 0 : 1;
  }

  if (!drivers.empty()) {
    sweep.drivers.clear();
    for (const std::string& name : drivers) {
      absl::StatusOr<Driver> d = ParseDriver(name);
      if (!d.ok()) return fail(d.status());
      sweep.drivers.push_back(*d);
    }
  }
  if (!modes.empty()) {
    sweep.modes.clear();
    for (const std::string& name : modes) {
      absl::StatusOr<OracleMode> m = ParseMode(name);
      if (!m.ok()) return fail(m.status());
      sweep.modes.push_back(*m);
    }
  }
  if (config.out_dir.empty()) {
    absl::Status s = CmdBench(sweep, config, out);
    return s.ok() ? 0 : fail(s);
  }
  std::error_code ec;
  std::filesystem::create_directories(config.out_dir, ec);
  std::ofstream csv(std::filesystem::path(config.out_dir) / "bench.csv");
  if (ec || !csv) {
    return fail(absl::PermissionDeniedError(
        absl::StrCat("cannot write bench.csv in ", config.out_dir)));
  }
  absl::Status s = CmdBench(sweep, config, csv);
  return s.ok() ? 0 : fail(s);
}

}  // namespace agreeclust::cli
