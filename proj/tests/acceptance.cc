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

// Acceptance gate. Runs the ten acceptance criteria and prints one PASS or
// FAIL line per criterion; INFO lines carry supplementary measurements.
// Exits nonzero if any selected criterion fails.
//
//   acceptance                 all criteria
//   acceptance --criterion 7   one criterion

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "agreeclust/agreement.h"
#include "agreeclust/clustering.h"
#include "agreeclust/components.h"
#include "agreeclust/eval.h"
#include "agreeclust/generators.h"
#include "agreeclust/graph.h"
#include "agreeclust/mpc.h"
#include "agreeclust/params.h"
#include "agreeclust/pipeline.h"
#include "agreeclust/sketch.h"
#include "agreeclust/streaming.h"
#include "agreeclust/validators.h"

namespace agreeclust {
namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

template <typename T>
T Must(absl::StatusOr<T> value, const char* what) {
  if (!value.ok()) {
    std::fprintf(stderr, "%s: %s\n", what, value.status().ToString().c_str());
    std::exit(2);
  }
  return *std::move(value);
}

void Info(int criterion, const std::string& text) {
  std::printf("INFO criterion %d: %s\n", criterion, text.c_str());
  std::fflush(stdout);
}

Params AnalysisParams() {
  Params p;
  p.beta = 1.0 / 36;
  p.lambda = 1.0 / 36;
  return p;
}

// ---------------------------------------------------------------------------
// Criteria 1, 2 and 4 share a corpus: 100 G(n, p) graphs and 20 planted
// partitions, sparsified once with the exact oracle.

struct CorpusGraph {
  std::string name;
  SignedGraph graph;
  SparsifiedGraph sparsified;
  Clustering components;
};

const std::vector<CorpusGraph>& StructuralCorpus() {
  static const std::vector<CorpusGraph>* corpus = [] {
    auto* out = new std::vector<CorpusGraph>();
    const Params params = AnalysisParams();
    const double probabilities[] = {0.02, 0.05, 0.1, 0.2, 0.3, 0.4, 0.5};
    std::mt19937_64 rng(101);
    for (int i = 0; i < 100; ++i) {
      // n spread log-uniformly over [50, 2000].
      const double t = static_cast<double>(i) / 99.0;
      const auto n =
          static_cast<std::size_t>(std::lround(50.0 * std::pow(40.0, t)));
      const double p = probabilities[i % 7];
      const std::uint64_t seed = rng();
      SignedGraph g = Must(GenGnp(n, p, seed), "gnp");
      out->push_back(
          {absl::StrCat("gnp(", n, ",", p, ")"), std::move(g), {}, {}});
    }
    const double p_in[] = {1.0, 0.995, 0.99, 0.98};
    const double p_out[] = {0.0, 0.001, 0.005};
    for (int i = 0; i < 20; ++i) {
      const std::size_t k = 3 + i % 6;
      const std::size_t size = 40 + 8 * static_cast<std::size_t>(i);
      SignedGraph g = Must(
          GenPlanted(k, size, p_in[i % 4], p_out[i % 3], rng()), "planted");
      out->push_back({absl::StrCat("planted(", k, "x", size, ")"),
                      std::move(g), {}, {}});
    }
    for (CorpusGraph& c : *out) {
      c.sparsified = SparsifyExact(c.graph, params);
      c.components = UnionFindComponents(c.sparsified);
    }
    return out;
  }();
  return *corpus;
}

Outcome CriterionDiameter() {
  std::size_t violations = 0;
  int max_diameter = 0;
  std::size_t multi = 0;
  bool exhaustive = true;
  for (const CorpusGraph& c : StructuralCorpus()) {
    const DiameterReport r =
        ValidateDiameter(c.sparsified.reduced, c.components, 4,
                         std::numeric_limits<std::size_t>::max());
    exhaustive = exhaustive && r.exhaustive;
    violations += r.violations.size();
    max_diameter = std::max(max_diameter, r.max_observed());
    for (const ComponentDiameter& d : r.components) multi += d.size >= 2;
  }
  return {violations == 0 && exhaustive,
          absl::StrCat(violations, " components above diameter 4 over ",
                       StructuralCorpus().size(), " graphs (",
                       multi, " non-singleton components, max diameter ",
                       max_diameter, exhaustive ? ", exhaustive BFS)" : ")")};
}

Outcome CriterionInClusterDegree() {
  const Params params = AnalysisParams();
  std::size_t violations = 0;
  std::size_t checked = 0;
  for (const CorpusGraph& c : StructuralCorpus()) {
    violations += CheckInClusterDegree(c.graph, c.components, params).size();
    for (const auto& members : c.components.Clusters()) {
      if (members.size() >= 2) checked += members.size();
    }
  }
  return {violations == 0,
          absl::StrCat(violations, " vertices below (1 - 8b - l)|CC| among ",
                       checked, " vertices in clusters of size >= 2")};
}

Outcome CriterionLabelPropagation() {
  std::size_t mismatches = 0;
  for (const CorpusGraph& c : StructuralCorpus()) {
    if (!SamePartition(LabelPropagation4(c.sparsified), c.components)) {
      ++mismatches;
    }
  }
  return {mismatches == 0,
          absl::StrCat(mismatches, " mismatching partitions over ",
                       StructuralCorpus().size(), " sparsified graphs")};
}

// ---------------------------------------------------------------------------

Outcome CriterionApproximation() {
  const Params params = AnalysisParams();
  const double bound = ApproximationBound(params);
  std::mt19937_64 rng(303);
  std::uniform_int_distribution<std::size_t> size(2, 9);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  std::size_t violations = 0;
  std::size_t zero_opt = 0;
  double max_ratio = 0.0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = size(rng);
    SignedGraph g = Must(GenGnp(n, density(rng), rng()), "gnp");
    const InMemoryResult r =
        Must(RunInMemory(g, params, OracleMode::kExact), "pipeline");
    const std::uint64_t cost =
        Must(ClusteringCost(g, r.clustering), "cost");
    const OptimalClustering opt = Must(BruteForceOpt(g), "opt");
    if (opt.cost == 0) {
      ++zero_opt;
      violations += cost != 0;
      continue;
    }
    const double ratio =
        static_cast<double>(cost) / static_cast<double>(opt.cost);
    max_ratio = std::max(max_ratio, ratio);
    violations += ratio > bound;
  }
  return {violations == 0,
          absl::StrCat(violations, " graphs above ", bound,
                       " * OPT over 200 graphs with n <= 9; max ratio ",
                       max_ratio, " (", zero_opt, " graphs with OPT = 0)")};
}

// ---------------------------------------------------------------------------
// Criterion 5: pairs u = 0, v = 1 adjacent, with closed neighborhoods of equal
// size d sharing d - sd/2 vertices.

struct Pair {
  std::vector<VertexId> nu;
  std::vector<VertexId> nv;
};

Pair MakePair(std::size_t n, std::size_t degree, std::size_t sym_diff,
              std::mt19937_64& rng) {
  const std::size_t priv = sym_diff / 2;
  const std::size_t common = degree - 2 - priv;
  std::vector<VertexId> pool(n - 2);
  std::iota(pool.begin(), pool.end(), VertexId{2});
  std::shuffle(pool.begin(), pool.end(), rng);
  Pair p;
  p.nu = {0, 1};
  p.nv = {0, 1};
  p.nu.insert(p.nu.end(), pool.begin(), pool.begin() + common);
  p.nv.insert(p.nv.end(), pool.begin(), pool.begin() + common);
  p.nu.insert(p.nu.end(), pool.begin() + common, pool.begin() + common + priv);
  p.nv.insert(p.nv.end(), pool.begin() + common + priv,
              pool.begin() + common + 2 * priv);
  std::sort(p.nu.begin(), p.nu.end());
  std::sort(p.nv.begin(), p.nv.end());
  return p;
}

struct FamilyResult {
  std::size_t errors = 0;
  std::size_t exact_regime = 0;
};

// `pairs` pairs at sym diff ratio * beta * d, d drawn from [lo, hi].
FamilyResult RunFamily(double ratio, std::size_t pairs, std::size_t n,
                       std::size_t lo, std::size_t hi, Params params,
                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> degree(lo, hi);
  FamilyResult result;
  for (std::size_t i = 0; i < pairs; ++i) {
    const std::size_t d = degree(rng);
    const auto sd = 2 * static_cast<std::size_t>(
                            std::lround(ratio * params.beta * d / 2.0));
    const Pair p = MakePair(n, d, sd, rng);
    // The realized pair must sit on the intended side of the threshold.
    const bool want_yes = BelowAgreementThreshold(SortedSymDiffSize(p.nu, p.nv),
                                                  d, 1, params.beta);
    if (want_yes != (ratio < 1.0)) {
      std::fprintf(stderr, "pair construction missed its family\n");
      std::exit(2);
    }
    params.seed = rng();
    const SampleSketch su = Must(BuildSketch(0, p.nu, n, params), "sketch");
    const SampleSketch sv = Must(BuildSketch(1, p.nv, n, params), "sketch");
    const SampledDecision decision =
        Must(DecideSampled(su, sv, params, n), "decide");
    result.exact_regime += decision.exact_regime;
    result.errors += (decision.verdict == Verdict::kYes) != want_yes;
  }
  return result;
}

Outcome CriterionSketchFidelity() {
  constexpr std::size_t kN = 4096;
  Params params;
  params.a = 600;
  std::size_t errors = 0;
  std::string families;
  std::uint64_t seed = 505;
  for (double ratio : {0.5, 0.7, 1.2, 2.0}) {
    const FamilyResult r =
        RunFamily(ratio, 1000, kN, 500, 4000, params, seed++);
    errors += r.errors;
    absl::StrAppend(&families, families.empty() ? "" : " ", ratio, "b:",
                    r.errors, " errors/", r.exact_regime, " exact");
  }

  // At n = 500 every coin has p = 1; decisions must equal the definition on
  // every pair of a planted graph with both agreeing and disagreeing pairs.
  SignedGraph g = Must(GenPlanted(5, 100, 0.99, 0.002, 55), "planted");
  const std::vector<SampleSketch> sketches =
      Must(BuildSketches(g, params), "sketches");
  std::size_t differ = 0;
  std::size_t not_exact = 0;
  std::size_t agreeing = 0;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    for (VertexId v = u + 1; v < g.num_vertices(); ++v) {
      const SampledDecision d =
          Must(DecideSampled(sketches[u], sketches[v], params, 500), "decide");
      const bool exact = InAgreementExact(g, u, v, params.beta);
      not_exact += !d.degree_filtered && !d.exact_regime;
      differ += (d.verdict == Verdict::kYes) != exact;
      agreeing += exact;
    }
  }

  // Supplementary: a = 12 puts the same families in the sampled regime.
  Params sampled = params;
  sampled.a = 12;
  std::string supplementary;
  for (double ratio : {0.5, 0.7, 1.2, 2.0}) {
    const FamilyResult r =
        RunFamily(ratio, 200, kN, 3000, 3000, sampled, seed++);
    absl::StrAppend(&supplementary, " ", ratio, "b:", r.errors, " errors/",
                    200 - r.exact_regime, " sampled");
  }
  Info(5, absl::StrCat("sampled regime, a = 12, d = 3000, 200 pairs per "
                       "family:",
                       supplementary));

  return {errors == 0 && differ == 0 && not_exact == 0,
          absl::StrCat(errors, " misclassified pairs (", families,
                       "); exact-regime check on planted(5x100): ", differ,
                       " differing decisions over 124750 pairs, ", not_exact,
                       " outside the exact regime, ", agreeing, " agreeing")};
}

// ---------------------------------------------------------------------------
// Criteria 6 and 7 share a corpus of 20 sparse graphs with n >= 500.

struct DriverCase {
  std::string name;
  SignedGraph graph;
  std::uint64_t seed = 0;
};

const std::vector<DriverCase>& DriverCorpus() {
  static const std::vector<DriverCase>* corpus = [] {
    auto* out = new std::vector<DriverCase>();
    for (int i = 0; i < 10; ++i) {
      const std::size_t n = 500 + 150 * static_cast<std::size_t>(i);
      const double p = (4.0 + i % 5) / static_cast<double>(n);
      const auto seed = static_cast<std::uint64_t>(600 + i);
      out->push_back({absl::StrCat("gnp(", n, ",", p, ")"),
                      Must(GenGnp(n, p, seed), "gnp"), seed});
    }
    for (int i = 0; i < 10; ++i) {
      const std::size_t k = 20 + 2 * static_cast<std::size_t>(i);
      const std::size_t size = 40;
      const double p_in = i % 2 ? 1.0 : 0.99;
      const double p_out = 0.5 / static_cast<double>(k * size);
      const auto seed = static_cast<std::uint64_t>(700 + i);
      out->push_back({absl::StrCat("planted(", k, "x", size, ")"),
                      Must(GenPlanted(k, size, p_in, p_out, seed), "planted"),
                      seed});
    }
    return out;
  }();
  return *corpus;
}

Outcome CriterionDrivers() {
  Params params = AnalysisParams();
  std::size_t mismatches = 0;
  std::size_t bad_rounds = 0;
  std::size_t bad_passes = 0;
  std::size_t runs = 0;
  std::size_t nontrivial = 0;
  for (const DriverCase& c : DriverCorpus()) {
    params.seed = c.seed;
    const SignedGraph& g = c.graph;
    for (OracleMode mode : {OracleMode::kExact, OracleMode::kSketch}) {
      const InMemoryResult reference =
          Must(RunInMemory(g, params, mode), "inmem");
      nontrivial += reference.clustering.num_clusters() < g.num_vertices();
      const InMemoryResult propagated = Must(
          RunInMemory(g, params, mode, ComponentMethod::kLabelPropagation),
          "inmem");
      mismatches += !SamePartition(propagated.clustering, reference.clustering);
      for (std::size_t machines : {2, 4, 8}) {
        const MpcConfig config = Must(
            MakeMpcConfig(g.num_vertices(), g.num_plus_edges(), machines, 0.9,
                          Enforcement::kAudit),
            "config");
        const MpcResult r =
            Must(RunMpcPipeline(g, params, mode, config), "mpc");
        ++runs;
        mismatches += !SamePartition(r.clustering, reference.clustering);
        bad_rounds += r.trace.rounds() != kMpcRounds;
      }
      VectorEdgeStream in_order = VectorEdgeStream::FromGraph(g);
      const StreamingResult s =
          Must(RunStreamingPipeline(in_order, params, mode), "stream");
      mismatches += !SamePartition(s.clustering, reference.clustering);
      bad_passes += s.passes != kStreamingPasses;
      for (std::uint64_t perm = 1; perm <= 20; ++perm) {
        VectorEdgeStream shuffled =
            VectorEdgeStream::FromGraph(g, c.seed * 1000 + perm);
        const StreamingResult r =
            Must(RunStreamingPipeline(shuffled, params, mode), "stream");
        ++runs;
        mismatches += !SamePartition(r.clustering, reference.clustering);
        bad_passes += r.passes != kStreamingPasses;
      }
    }
  }
  return {mismatches == 0 && bad_rounds == 0 && bad_passes == 0,
          absl::StrCat(mismatches, " partition mismatches, ", bad_rounds,
                       " MPC runs not using ", kMpcRounds, " rounds, ",
                       bad_passes, " streaming runs not using ",
                       kStreamingPasses, " passes (", runs,
                       " driver runs over ", DriverCorpus().size(),
                       " graphs in exact and sketch mode; ", nontrivial,
                       " of 40 references have a non-singleton cluster)")};
}

// Machine memory S = ceil(n^0.95). Machine count M = ceil(4 T / S) where T
// is the words of sketch state the edges need (deg(v) * sketch words of v,
// summed over v). Relay fan-out ceil(sqrt(maxdeg + 1)).
inline constexpr double kAuditDelta = 0.95;
inline constexpr double kAuditSlack = 4.0;

Outcome CriterionMpcAudit() {
  Params params = AnalysisParams();
  std::size_t violations = 0;
  std::size_t over_bound = 0;
  std::size_t cap_too_small = 0;
  double worst_load = 0.0;
  double worst_comm = 0.0;
  for (const DriverCase& c : DriverCorpus()) {
    params.seed = c.seed;
    const SignedGraph& g = c.graph;
    const std::size_t n = g.num_vertices();
    const std::vector<SampleSketch> sketches =
        Must(BuildSketches(g, params), "sketches");
    std::size_t max_sketch = 0;
    double state = 0.0;
    for (VertexId v = 0; v < n; ++v) {
      max_sketch = std::max(max_sketch, sketches[v].words());
      state += static_cast<double>(g.Degree(v) * sketches[v].words());
    }
    const auto cap = static_cast<std::uint64_t>(
        std::ceil(std::pow(static_cast<double>(n), kAuditDelta)));
    cap_too_small += cap < g.MaxDegree() + max_sketch;
    const auto machines = static_cast<std::size_t>(
        std::ceil(kAuditSlack * state / static_cast<double>(cap)));
    MpcConfig config = Must(MakeMpcConfig(n, g.num_plus_edges(), machines,
                                          kAuditDelta, Enforcement::kAudit),
                            "config");
    config.relay_fanout = static_cast<std::size_t>(
        std::ceil(std::sqrt(static_cast<double>(g.MaxDegree() + 1))));
    const MpcResult r =
        Must(RunMpcPipeline(g, params, OracleMode::kSketch, config), "mpc");
    violations += r.trace.violations.size();
    for (const RoundLoad& load : r.trace.per_round) {
      const std::uint64_t peak =
          std::max({load.sent_max, load.recv_max, load.resident_max});
      worst_load = std::max(worst_load, static_cast<double>(peak) /
                                            static_cast<double>(cap));
    }
    const double bound = MpcCommunicationBound(n, g.num_plus_edges(), params);
    over_bound += static_cast<double>(r.trace.total_words) > bound;
    // Empirical words per (|E+| ln n) for the INFO line.
    worst_comm = std::max(
        worst_comm, static_cast<double>(r.trace.total_words) /
                        (static_cast<double>(g.num_plus_edges() + n) *
                         std::log(static_cast<double>(n))));
  }
  Info(7, absl::StrCat("C = ", MpcCommunicationConstant(params),
                       "; largest observed words / (|E+| ln n) = ", worst_comm,
                       "; largest per-machine load / S = ", worst_load));
  return {violations == 0 && over_bound == 0 && cap_too_small == 0,
          absl::StrCat(violations, " cap violations, ", over_bound,
                       " runs above C |E+| ln n, ", cap_too_small,
                       " graphs with n^delta < maxdeg + sketch size (delta = ",
                       kAuditDelta, ", ", DriverCorpus().size(), " graphs)")};
}

// ---------------------------------------------------------------------------

struct TightOutcome {
  bool singletons = false;
  double ratio = 0.0;
  std::uint64_t pipeline_cost = 0;
  std::uint64_t two_clique_cost = 0;
};

TightOutcome RunTight(double x_mult) {
  Params params;
  params.beta = 0.05;
  params.lambda = 0.05;
  const TightInstance inst = Must(GenTightInstance(100, 0.05, x_mult), "tight");
  const InMemoryResult r =
      Must(RunInMemory(inst.graph, params, OracleMode::kExact), "pipeline");
  TightOutcome out;
  out.singletons = r.clustering.num_clusters() == inst.graph.num_vertices();
  out.pipeline_cost = Must(ClusteringCost(inst.graph, r.clustering), "cost");
  out.two_clique_cost =
      Must(ClusteringCost(inst.graph, inst.TwoCliquePartition()), "cost");
  out.ratio = static_cast<double>(out.pipeline_cost) /
              static_cast<double>(out.two_clique_cost);
  return out;
}

Outcome CriterionTightness() {
  const double target = 0.5 / (0.05 * 0.05);
  const TightOutcome supplementary = RunTight(1.0);
  Info(8, absl::StrCat("x_mult = 1: singletons ",
                       supplementary.singletons ? "yes" : "no", ", cost ",
                       supplementary.pipeline_cost, " vs ",
                       supplementary.two_clique_cost, ", ratio ",
                       supplementary.ratio));
  const TightOutcome r = RunTight(2.0);
  return {r.singletons && r.ratio >= target,
          absl::StrCat("x_mult = 2: singletons ", r.singletons ? "yes" : "no",
                       ", cost ", r.pipeline_cost, " vs two-clique cost ",
                       r.two_clique_cost, ", ratio ", r.ratio,
                       " (required >= ", target, ")")};
}

Outcome CriterionPivot() {
  std::mt19937_64 rng(909);
  std::uniform_int_distribution<std::size_t> size(4, 9);
  std::uniform_real_distribution<double> density(0.2, 0.8);
  std::size_t violations = 0;
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    SignedGraph g = Must(GenGnp(size(rng), density(rng), rng()), "gnp");
    const OptimalClustering opt = Must(BruteForceOpt(g), "opt");
    double total = 0.0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      total += static_cast<double>(
          Must(ClusteringCost(g, PivotBaseline(g, seed)), "cost"));
    }
    const double mean = total / 1000.0;
    violations += mean > 3.3 * static_cast<double>(opt.cost);
    if (opt.cost > 0) {
      worst = std::max(worst, mean / static_cast<double>(opt.cost));
    }
  }
  return {violations == 0,
          absl::StrCat(violations, " of 20 graphs with mean Pivot cost above "
                       "3.3 * OPT over 1000 seeds; worst mean / OPT ",
                       worst)};
}

Outcome CriterionWeakAgreementBounds() {
  constexpr double kBeta = 1.0 / 36;
  std::mt19937_64 rng(1010);
  std::size_t violations = 0;
  std::size_t pairs = 0;
  std::size_t chains = 0;
  for (int i = 0; i < 50; ++i) {
    SignedGraph g;
    if (i % 2 == 0) {
      const std::size_t n = 30 + 5 * static_cast<std::size_t>(i);
      const double p = 0.97 + 0.01 * (i % 3);
      g = Must(GenGnp(n, p, rng()), "gnp");
    } else {
      const std::size_t k = 2 + i % 4;
      const std::size_t size = 30 + 4 * static_cast<std::size_t>(i);
      g = Must(GenPlanted(k, size, 0.99 + 0.005 * (i % 3), 0.002, rng()),
               "planted");
    }
    const WeakAgreementBoundsReport r = CheckWeakAgreementBounds(g, kBeta);
    violations += r.violations.size();
    pairs += r.weak_agreement_pairs;
    chains += r.chains_checked;
  }
  return {violations == 0,
          absl::StrCat(violations, " violations over 50 graphs (", pairs,
                       " weak-agreement pairs, ", chains, " chains checked)")};
}

struct Criterion {
  const char* title;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& Criteria() {
  static const std::vector<Criterion> criteria = {
      {"component diameter <= 4", CriterionDiameter},
      {"in-cluster degree bound", CriterionInClusterDegree},
      {"approximation vs brute force", CriterionApproximation},
      {"label propagation equals union-find", CriterionLabelPropagation},
      {"sketch fidelity", CriterionSketchFidelity},
      {"driver equivalence and round constancy", CriterionDrivers},
      {"MPC resource audit", CriterionMpcAudit},
      {"tightness reproduction", CriterionTightness},
      {"Pivot baseline sanity", CriterionPivot},
      {"weak agreement property suite", CriterionWeakAgreementBounds},
  };
  return criteria;
}

}  // namespace
}  // namespace agreeclust

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-10)")
      ->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  const auto& criteria = agreeclust::Criteria();
  int failures = 0;
  for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) {
    if (only != 0 && i != only) continue;
    const auto start = std::chrono::steady_clock::now();
    const agreeclust::Outcome outcome = criteria[i - 1].run();
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    std::printf("%s criterion %d (%s): %s [%.1fs]\n",
                outcome.pass ? "PASS" : "FAIL", i, criteria[i - 1].title,
                outcome.detail.c_str(), seconds);
    std::fflush(stdout);
    failures += !outcome.pass;
  }
  return failures == 0 ? 0 : 1;
}
