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

#include "agreeclust/mpc.h"

#include <cmath>
#include <cstdint>
#include <vector>

#include "agreeclust/generators.h"
#include "agreeclust/pipeline.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_graphs.h"

namespace agreeclust {
namespace {

using ::agreeclust::testing::K4;
using ::agreeclust::testing::MustBuild;
using ::agreeclust::testing::MustGnp;
using ::agreeclust::testing::Path;
using ::testing::ElementsAre;
using ::testing::HasSubstr;
using ::testing::IsEmpty;

MpcConfig Config(std::size_t machines, std::uint64_t cap,
                 Enforcement enforcement = Enforcement::kStrict) {
  MpcConfig c;
  c.num_machines = machines;
  c.memory_cap = cap;
  c.enforcement = enforcement;
  return c;
}

MpcConfig MustConfig(const SignedGraph& g, std::size_t machines, double delta,
                     Enforcement enforcement = Enforcement::kAudit) {
  absl::StatusOr<MpcConfig> c = MakeMpcConfig(
      g.num_vertices(), g.num_plus_edges(), machines, delta, enforcement);
  EXPECT_TRUE(c.ok()) << c.status();
  return c.value_or(MpcConfig{});
}

Params BetaLambda(double beta, double lambda) {
  Params p;
  p.beta = beta;
  p.lambda = lambda;
  return p;
}

TEST(MakeMpcConfigTest, MemoryCap) {
  absl::StatusOr<MpcConfig> c =
      MakeMpcConfig(1000, 10, 4, 0.5, Enforcement::kStrict);
  ASSERT_TRUE(c.ok());
  EXPECT_EQ(c->memory_cap, 32);  // ceil(31.62)
  EXPECT_FALSE(c->underprovisioned);
  EXPECT_EQ(InputWords(10), 20);
}

TEST(MakeMpcConfigTest, RejectsBadArguments) {
  EXPECT_FALSE(MakeMpcConfig(10, 1, 0, 0.5, Enforcement::kAudit).ok());
  EXPECT_FALSE(MakeMpcConfig(10, 1, 2, 0.0, Enforcement::kAudit).ok());
  EXPECT_FALSE(MakeMpcConfig(10, 1, 2, 1.0, Enforcement::kAudit).ok());
}

TEST(MakeMpcConfigTest, UnderprovisionedStrictVersusAudit) {
  // K4 on 2 machines: S = ceil(4^0.9) = 4, total 8 words < 12.
  absl::StatusOr<MpcConfig> strict =
      MakeMpcConfig(4, 6, 2, 0.9, Enforcement::kStrict);
  EXPECT_EQ(strict.status().code(), absl::StatusCode::kInvalidArgument);
  absl::StatusOr<MpcConfig> audit =
      MakeMpcConfig(4, 6, 2, 0.9, Enforcement::kAudit);
  ASSERT_TRUE(audit.ok());
  EXPECT_EQ(audit->memory_cap, 4);
  EXPECT_TRUE(audit->underprovisioned);
}

TEST(ShuffleTest, EmptyOutboxes) {
  MpcSimulator sim(Config(3, 10));
  absl::StatusOr<MachineMessages> in = sim.Shuffle(MachineMessages(3));
  ASSERT_TRUE(in.ok());
  ASSERT_EQ(in->size(), 3);
  for (const auto& inbox : *in) EXPECT_THAT(inbox, IsEmpty());
  ASSERT_EQ(sim.trace().rounds(), 1);
  EXPECT_EQ(sim.trace().per_round[0].recv_max, 0);
  EXPECT_EQ(sim.trace().total_words, 0);
}

TEST(ShuffleTest, AllToMachineZero) {
  constexpr std::size_t kMachines = 5;
  MpcSimulator sim(Config(kMachines, 100));
  MachineMessages out(kMachines);
  for (std::size_t m = 0; m < kMachines; ++m) {
    out[m].push_back({{kDirectTag, 0, m}, {}});
  }
  absl::StatusOr<MachineMessages> in = sim.Shuffle(std::move(out));
  ASSERT_TRUE(in.ok());
  EXPECT_EQ((*in)[0].size(), kMachines);
  EXPECT_EQ(sim.trace().per_round[0].recv_max, kMachines);
  EXPECT_EQ(sim.trace().per_round[0].sent_max, 1);
  for (std::size_t m = 0; m < kMachines; ++m) {
    EXPECT_EQ((*in)[0][m].source, m);
  }
}

TEST(ShuffleTest, StrictCapViolationNamesMachineAndRound) {
  // n = 100, delta = 0.5: S = 10. A header plus 10 payload words is 11.
  absl::StatusOr<MpcConfig> config =
      MakeMpcConfig(100, 1, 4, 0.5, Enforcement::kStrict);
  ASSERT_TRUE(config.ok());
  ASSERT_EQ(config->memory_cap, 10);
  MpcSimulator sim(*config);
  ASSERT_TRUE(sim.Shuffle(MachineMessages(4)).ok());
  MachineMessages out(4);
  out[2].push_back({{kDirectTag, 3, 0}, std::vector<std::uint64_t>(10, 7)});
  absl::StatusOr<MachineMessages> in = sim.Shuffle(std::move(out));
  ASSERT_FALSE(in.ok());
  EXPECT_EQ(in.status().code(), absl::StatusCode::kResourceExhausted);
  EXPECT_THAT(in.status().message(), HasSubstr("round 2"));
  EXPECT_THAT(in.status().message(), HasSubstr("machine 2 sends 11 words"));
}

TEST(ShuffleTest, ExactlyAtCapIsAllowed) {
  MpcSimulator sim(Config(2, 10));
  MachineMessages out(2);
  out[0].push_back({{kDirectTag, 1, 0}, std::vector<std::uint64_t>(9, 1)});
  EXPECT_TRUE(sim.Shuffle(std::move(out)).ok());
}

TEST(ShuffleTest, AuditRecordsInsteadOfFailing) {
  MpcSimulator sim(Config(2, 3, Enforcement::kAudit));
  MachineMessages out(2);
  out[0].push_back({{kDirectTag, 1, 0}, {1, 2, 3}});
  absl::StatusOr<MachineMessages> in = sim.Shuffle(std::move(out), {0, 9});
  ASSERT_TRUE(in.ok());
  const auto& v = sim.trace().violations;
  ASSERT_EQ(v.size(), 3);
  EXPECT_EQ(v[0].machine, 0);
  EXPECT_EQ(v[0].kind, LoadKind::kSent);
  EXPECT_EQ(v[1].machine, 1);
  EXPECT_EQ(v[1].kind, LoadKind::kReceived);
  EXPECT_EQ(v[2].kind, LoadKind::kResident);
  EXPECT_EQ(v[2].words, 9);
  EXPECT_EQ(sim.trace().per_round[0].resident_max, 9);
}

TEST(ShuffleTest, InboxesSortedByKeyThenPayload) {
  MpcSimulator sim(Config(2, 100));
  MachineMessages out(2);
  out[1].push_back({{kDirectTag, 0, 5}, {2}});
  out[0].push_back({{kDirectTag, 0, 5}, {1}});
  out[1].push_back({{kDirectTag, 0, 1}, {9}});
  absl::StatusOr<MachineMessages> in = sim.Shuffle(std::move(out));
  ASSERT_TRUE(in.ok());
  ASSERT_EQ((*in)[0].size(), 3);
  EXPECT_EQ((*in)[0][0].key.b, 1);
  EXPECT_THAT((*in)[0][1].payload, ElementsAre(1));
  EXPECT_THAT((*in)[0][2].payload, ElementsAre(2));
}

TEST(ShuffleTest, MalformedInput) {
  MpcSimulator sim(Config(2, 100));
  EXPECT_EQ(sim.Shuffle(MachineMessages(3)).status().code(),
            absl::StatusCode::kInvalidArgument);
  MachineMessages out(2);
  out[0].push_back({{kDirectTag, 2, 0}, {}});
  EXPECT_EQ(sim.Shuffle(std::move(out)).status().code(),
            absl::StatusCode::kInvalidArgument);
}

TEST(DestinationOfTest, HashedKeysStayInRange) {
  std::vector<int> hits(7, 0);
  for (std::uint64_t a = 0; a < 7000; ++a) {
    const std::size_t d = DestinationOf({1, a, a % 3}, 7);
    ASSERT_LT(d, 7);
    EXPECT_EQ(d, DestinationOf({1, a, a % 3}, 7));
    ++hits[d];
  }
  for (int h : hits) EXPECT_GT(h, 800);
  EXPECT_EQ(DestinationOf({kDirectTag, 4, 99}, 7), 4);
}

TEST(RunMpcPipelineTest, CliqueOnTwoMachines) {
  SignedGraph g = K4();
  MpcConfig config = MustConfig(g, 2, 0.9);
  absl::StatusOr<MpcResult> r = RunMpcPipeline(g, Params(), OracleMode::kExact,
                                               config);
  ASSERT_TRUE(r.ok()) << r.status();
  EXPECT_EQ(r->clustering.num_clusters(), 1);
  EXPECT_EQ(r->trace.rounds(), kMpcRounds);
  EXPECT_TRUE(r->trace.underprovisioned);
}

TEST(RunMpcPipelineTest, PathGivesSingletons) {
  SignedGraph g = Path(3);
  absl::StatusOr<MpcResult> r = RunMpcPipeline(
      g, BetaLambda(0.05, 0.05), OracleMode::kExact, MustConfig(g, 4, 0.9));
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->clustering.num_clusters(), 3);
  EXPECT_EQ(r->trace.rounds(), kMpcRounds);
}

TEST(RunMpcPipelineTest, RoundCountIsInputIndependent) {
  const std::vector<SignedGraph> graphs = {MustBuild(1, {}), MustBuild(5, {}),
                                           K4(), Path(7), MustGnp(60, 0.3, 2)};
  for (const SignedGraph& g : graphs) {
    for (std::size_t machines : {1, 3, 16}) {
      for (OracleMode mode : {OracleMode::kExact, OracleMode::kSketch}) {
        absl::StatusOr<MpcResult> r =
            RunMpcPipeline(g, Params(), mode, MustConfig(g, machines, 0.9));
        ASSERT_TRUE(r.ok());
        EXPECT_EQ(r->trace.rounds(), kMpcRounds);
      }
    }
  }
}

TEST(RunMpcPipelinePropertyTest, ReplayEquivalenceAcrossMachineCounts) {
  SignedGraph g = MustGnp(500, 0.1, 12);
  const Params params = BetaLambda(0.2, 0.2);
  absl::StatusOr<InMemoryResult> reference =
      RunInMemory(g, params, OracleMode::kExact,
                  ComponentMethod::kLabelPropagation);
  ASSERT_TRUE(reference.ok());
  for (std::size_t machines : {2, 4, 8}) {
    absl::StatusOr<MpcResult> r = RunMpcPipeline(
        g, params, OracleMode::kExact, MustConfig(g, machines, 0.9));
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(r->trace.rounds(), kMpcRounds);
    EXPECT_EQ(r->clustering.assignment(), reference->clustering.assignment());
  }
}

TEST(RunMpcPipelinePropertyTest, SketchModeMatchesInMemorySketchMode) {
  absl::StatusOr<SignedGraph> g = GenPlanted(6, 40, 0.95, 0.02, 3);
  ASSERT_TRUE(g.ok());
  Params params = BetaLambda(0.1, 0.1);
  params.a = 0.5;  // p < 1 at the upper levels
  absl::StatusOr<InMemoryResult> reference =
      RunInMemory(*g, params, OracleMode::kSketch,
                  ComponentMethod::kLabelPropagation);
  ASSERT_TRUE(reference.ok()) << reference.status();
  for (std::size_t machines : {2, 5, 9}) {
    absl::StatusOr<MpcResult> r = RunMpcPipeline(
        *g, params, OracleMode::kSketch, MustConfig(*g, machines, 0.9));
    ASSERT_TRUE(r.ok()) << r.status();
    EXPECT_EQ(r->clustering.assignment(), reference->clustering.assignment());
  }
}

TEST(RunMpcPipelineTest, StrictModeFailsWhenStarved) {
  SignedGraph g = MustGnp(200, 0.2, 1);
  MpcConfig config = Config(8, 50, Enforcement::kStrict);
  absl::StatusOr<MpcResult> r =
      RunMpcPipeline(g, Params(), OracleMode::kExact, config);
  EXPECT_EQ(r.status().code(), absl::StatusCode::kResourceExhausted);
  config.enforcement = Enforcement::kAudit;
  absl::StatusOr<MpcResult> audited =
      RunMpcPipeline(g, Params(), OracleMode::kExact, config);
  ASSERT_TRUE(audited.ok());
  EXPECT_THAT(audited->trace.violations, ::testing::Not(IsEmpty()));
}

TEST(RunMpcPipelineTest, StrictModeSucceedsWithRoom) {
  SignedGraph g = MustGnp(100, 0.05, 1);
  absl::StatusOr<MpcResult> r =
      RunMpcPipeline(g, Params(), OracleMode::kSketch,
                     Config(4, 100000, Enforcement::kStrict));
  ASSERT_TRUE(r.ok()) << r.status();
  EXPECT_THAT(r->trace.violations, IsEmpty());
}

TEST(CommunicationBoundTest, ConstantAndBound) {
  Params params;
  EXPECT_DOUBLE_EQ(MpcCommunicationConstant(params),
                   6.0 * kMpcRounds + 8.0 * 4.0 * 600.0 / 0.05);
  EXPECT_DOUBLE_EQ(MpcCommunicationBound(100, 50, params),
                   MpcCommunicationConstant(params) * 150.0 * std::log(100.0));
  SignedGraph g = MustGnp(300, 0.1, 4);
  absl::StatusOr<MpcResult> r =
      RunMpcPipeline(g, params, OracleMode::kSketch, MustConfig(g, 8, 0.9));
  ASSERT_TRUE(r.ok());
  EXPECT_LE(static_cast<double>(r->trace.total_words),
            MpcCommunicationBound(g.num_vertices(), g.num_plus_edges(),
                                  params));
}

}  // namespace
}  // namespace agreeclust
