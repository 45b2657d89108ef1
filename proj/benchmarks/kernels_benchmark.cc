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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "agreeclust/agreement.h"
#include "agreeclust/components.h"
#include "agreeclust/generators.h"
#include "agreeclust/graph.h"
#include "agreeclust/mpc.h"
#include "agreeclust/params.h"
#include "agreeclust/sketch.h"
#include "agreeclust/streaming.h"
#include "benchmark/benchmark.h"

namespace agreeclust {
namespace {

SignedGraph Gnp(std::size_t n, double p) { return *GenGnp(n, p, 17); }

Params Analysis() {
  Params p;
  p.beta = 1.0 / 36;
  p.lambda = 1.0 / 36;
  return p;
}

void BM_SortedSymDiff(benchmark::State& state) {
  const SignedGraph g = Gnp(2000, 0.5);
  VertexId u = 0;
  for (auto _ : state) {
    const VertexId v = (u + 1) % 2000;
    benchmark::DoNotOptimize(
        SortedSymDiffSize(g.Neighbors(u), g.Neighbors(v)));
    u = v;
  }
}
BENCHMARK(BM_SortedSymDiff);

void BM_SparsifyExact(benchmark::State& state) {
  const SignedGraph g = Gnp(static_cast<std::size_t>(state.range(0)), 0.1);
  const Params params = Analysis();
  for (auto _ : state) {
    benchmark::DoNotOptimize(SparsifyExact(g, params));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(g.num_plus_edges()));
}
BENCHMARK(BM_SparsifyExact)->Arg(500)->Arg(2000);

void BM_BuildSketches(benchmark::State& state) {
  const SignedGraph g = Gnp(static_cast<std::size_t>(state.range(0)), 0.2);
  Params params = Analysis();
  params.a = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(BuildSketches(g, params));
  }
}
BENCHMARK(BM_BuildSketches)->Arg(1000)->Arg(4000);

void BM_SparsifySketch(benchmark::State& state) {
  const SignedGraph g = Gnp(2000, 0.2);
  Params params = Analysis();
  params.a = 2;
  for (auto _ : state) {
    const std::vector<SampleSketch> sketches = *BuildSketches(g, params);
    benchmark::DoNotOptimize(Sparsify(
        g, params, [&](VertexId u, VertexId v) {
          return *AgreementSampled(sketches[u], sketches[v], params, 2000) ==
                 Verdict::kYes;
        }));
  }
}
BENCHMARK(BM_SparsifySketch);

void BM_LabelPropagation4(benchmark::State& state) {
  const SignedGraph g = Gnp(static_cast<std::size_t>(state.range(0)), 0.01);
  for (auto _ : state) {
    benchmark::DoNotOptimize(LabelPropagation4(g));
  }
}
BENCHMARK(BM_LabelPropagation4)->Arg(2000)->Arg(20000);

void BM_UnionFind(benchmark::State& state) {
  const SignedGraph g = Gnp(static_cast<std::size_t>(state.range(0)), 0.01);
  for (auto _ : state) {
    benchmark::DoNotOptimize(UnionFindComponents(g));
  }
}
BENCHMARK(BM_UnionFind)->Arg(2000)->Arg(20000);

void BM_MpcPipeline(benchmark::State& state) {
  const SignedGraph g = Gnp(1000, 0.05);
  const Params params = Analysis();
  const MpcConfig config = *MakeMpcConfig(
      g.num_vertices(), g.num_plus_edges(),
      static_cast<std::size_t>(state.range(0)), 0.9, Enforcement::kAudit);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        RunMpcPipeline(g, params, OracleMode::kExact, config));
  }
}
BENCHMARK(BM_MpcPipeline)->Arg(4)->Arg(16);

void BM_StreamingPipeline(benchmark::State& state) {
  const SignedGraph g = Gnp(1000, 0.05);
  const Params params = Analysis();
  for (auto _ : state) {
    VectorEdgeStream stream = VectorEdgeStream::FromGraph(g, 3);
    benchmark::DoNotOptimize(
        RunStreamingPipeline(stream, params, OracleMode::kSketch));
  }
}
BENCHMARK(BM_StreamingPipeline);

}  // namespace
}  // namespace agreeclust

BENCHMARK_MAIN();
