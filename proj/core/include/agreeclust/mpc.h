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

// A deterministic, single-process simulator of the massively parallel
// computation model: M logical machines with S = ceil(n^delta) words each,
// synchronous rounds, and keyed shuffles as the only communication.
//
// The clustering pipeline places edge e on machine e mod M and keeps every
// per-vertex quantity at root machine v mod M. Values move between edge
// holders and roots through a two-level relay tree: holder machine m reports
// to relay group m mod F, where F is MpcConfig::relay_fanout (default
// ceil(sqrt(M))), and relay (v, g) lives on machine (v F + g) mod M. A gather
// (holders -> relays -> root) and a scatter (root -> relays -> holders) take
// two rounds each, so a vertex of any degree is served without its root
// talking to more than F relays.
//
// Round schedule (kMpcRounds = 27 in total, for every input):
//
//   degrees               gather 2 + scatter 2
//   sketches              gather 2 + scatter 2
//   agreement             local, per edge
//   removed counts        gather 2
//   lightness             scatter 2, then light-light edges are dropped
//   label propagation     4 x gather 2 + 3 x scatter 2   (14)
//   output collection     1

#ifndef AGREECLUST_MPC_H_
#define AGREECLUST_MPC_H_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "agreeclust/clustering.h"
#include "agreeclust/graph.h"
#include "agreeclust/params.h"
#include "agreeclust/pipeline.h"

namespace agreeclust {

inline constexpr int kMpcRounds = 27;

enum class Enforcement : std::uint8_t { kStrict, kAudit };

std::string_view EnforcementName(Enforcement enforcement);

struct MpcConfig {
  std::size_t num_machines = 1;
  double delta = 0.5;
  // S = ceil(n^delta) words.
  std::uint64_t memory_cap = 1;
  Enforcement enforcement = Enforcement::kAudit;
  // Relay groups per vertex in gathers and scatters; 0 means
  // ceil(sqrt(num_machines)).
  std::size_t relay_fanout = 0;
  // num_machines * S is below the input size. Only possible in audit mode.
  bool underprovisioned = false;
};

// Input size in words: two per non-loop edge.
std::uint64_t InputWords(std::uint64_t num_edges);

// Validates the machine count and delta, computes S. A configuration whose
// total memory cannot hold the input is rejected in strict mode and flagged
// in audit mode.
absl::StatusOr<MpcConfig> MakeMpcConfig(std::size_t n, std::uint64_t num_edges,
                                        std::size_t num_machines, double delta,
                                        Enforcement enforcement);

// A message key. The destination machine is a fixed hash of the whole key,
// except for kDirectTag keys, which go to machine `a`.
struct MessageKey {
  std::uint32_t tag = 0;
  std::uint64_t a = 0;
  std::uint64_t b = 0;

  friend auto operator<=>(const MessageKey&, const MessageKey&) = default;
};

inline constexpr std::uint32_t kDirectTag = 0xffffffffu;

struct Message {
  MessageKey key;
  std::vector<std::uint64_t> payload;
  // Filled in by the shuffle; transport metadata, not counted as load.
  std::uint32_t source = 0;

  // One header word plus the payload.
  std::uint64_t words() const { return 1 + payload.size(); }
};

std::size_t DestinationOf(const MessageKey& key, std::size_t num_machines);

using MachineMessages = std::vector<std::vector<Message>>;

struct RoundLoad {
  std::uint64_t sent_max = 0;
  std::uint64_t recv_max = 0;
  std::uint64_t resident_max = 0;
  std::uint64_t total_words = 0;
};

enum class LoadKind : std::uint8_t { kSent, kReceived, kResident };

std::string_view LoadKindName(LoadKind kind);

struct CapViolation {
  int round = 0;
  std::size_t machine = 0;
  LoadKind kind = LoadKind::kSent;
  std::uint64_t words = 0;
};

struct MpcTrace {
  std::size_t num_machines = 0;
  std::uint64_t memory_cap = 0;
  bool underprovisioned = false;
  std::vector<RoundLoad> per_round;
  std::uint64_t total_words = 0;
  std::vector<CapViolation> violations;

  int rounds() const { return static_cast<int>(per_round.size()); }
};

// Owns the round counter and the trace. Each Shuffle call is one round.
class MpcSimulator {
 public:
  explicit MpcSimulator(MpcConfig config);

  // Delivers `outboxes` (one list per machine). Each inbox comes back sorted
  // by key and then by payload, so a machine's view of a round does not
  // depend on the order in which messages were produced. `resident` holds
  // the words each machine keeps in memory during the round; it may be empty.
  //
  // Strict mode fails with ResourceExhausted on the first load above S, naming
  // the machine and the round. Audit mode records the violation and goes on.
  absl::StatusOr<MachineMessages> Shuffle(
      MachineMessages outboxes,
      const std::vector<std::uint64_t>& resident = {});

  const MpcConfig& config() const { return config_; }
  const MpcTrace& trace() const { return trace_; }
  MpcTrace TakeTrace() { return std::move(trace_); }

 private:
  absl::Status Charge(LoadKind kind, std::size_t machine, std::uint64_t words);

  MpcConfig config_;
  MpcTrace trace_;
};

struct MpcResult {
  Clustering clustering;
  MpcTrace trace;
};

// Runs sparsification and four label-propagation rounds on the simulator.
// The partition equals RunInMemory(graph, params, mode) whenever the four
// rounds reach every vertex of every component.
absl::StatusOr<MpcResult> RunMpcPipeline(const SignedGraph& graph,
                                         const Params& params, OracleMode mode,
                                         const MpcConfig& config);

// Total communication of the sketch-mode pipeline is at most
// C * |E+| * ln n words, where |E+| = m + n counts the self-loops and
//
//   C = 6 * kMpcRounds + 8 * sketch_cap_factor * a / beta.
//
// In every round each edge endpoint and each vertex causes at most one
// message of at most 3 words (header, relay group, value), which gives the
// first term. Sketch gathers and scatters additionally carry the sketch of
// the vertex, at most 2 * sketch_cap_factor * a ln n / beta words, at most
// once per endpoint or vertex in each of their four rounds. The bound uses
// ln n >= 1, i.e. n >= 3. Exact mode ships whole neighborhoods and is not
// covered.
double MpcCommunicationConstant(const Params& params);
double MpcCommunicationBound(std::size_t n, std::uint64_t num_edges,
                             const Params& params);

}  // namespace agreeclust

#endif  // AGREECLUST_MPC_H_
