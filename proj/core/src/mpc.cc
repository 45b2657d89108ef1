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

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "absl/strings/str_cat.h"
#include "agreeclust/agreement.h"
#include "agreeclust/components.h"
#include "agreeclust/hash.h"
#include "agreeclust/sketch.h"

namespace agreeclust {

std::string_view EnforcementName(Enforcement enforcement) {
  return enforcement == Enforcement::kStrict ? "strict" : "audit";
}

std::string_view LoadKindName(LoadKind kind) {
  switch (kind) {
    case LoadKind::kSent:
      return "sends";
    case LoadKind::kReceived:
      return "receives";
    case LoadKind::kResident:
      return "holds";
  }
  return "?";
}

std::uint64_t InputWords(std::uint64_t num_edges) { return 2 * num_edges; }

absl::StatusOr<MpcConfig> MakeMpcConfig(std::size_t n, std::uint64_t num_edges,
                                        std::size_t num_machines, double delta,
                                        Enforcement enforcement) {
  if (num_machines == 0) {
    return absl::InvalidArgumentError("need at least one machine");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("delta must lie in (0, 1), got ", delta));
  }
  MpcConfig config;
  config.num_machines = num_machines;
  config.delta = delta;
  config.enforcement = enforcement;
  config.memory_cap = static_cast<std::uint64_t>(std::ceil(
      std::pow(static_cast<double>(std::max<std::size_t>(n, 1)), delta)));
  const std::uint64_t capacity = config.memory_cap * num_machines;
  if (capacity < InputWords(num_edges)) {
    if (enforcement == Enforcement::kStrict) {
      return absl::InvalidArgumentError(absl::StrCat(
          num_machines, " machines of ", config.memory_cap,
          " words cannot hold an input of ", InputWords(num_edges), " words"));
    }
    config.underprovisioned = true;
  }
  return config;
}

std::size_t DestinationOf(const MessageKey& key, std::size_t num_machines) {
  if (key.tag == kDirectTag) return static_cast<std::size_t>(key.a);
  constexpr std::uint64_t kRouteSeed = 0x726f757465ULL;
  const std::uint64_t h = Hash3(HashCombine(kRouteSeed, key.tag), key.a, key.b);
  return static_cast<std::size_t>(ReduceToRange(h, num_machines));
}

MpcSimulator::MpcSimulator(MpcConfig config) : config_(config) {
  trace_.num_machines = config_.num_machines;
  trace_.memory_cap = config_.memory_cap;
  trace_.underprovisioned = config_.underprovisioned;
}

absl::Status MpcSimulator::Charge(LoadKind kind, std::size_t machine,
                                  std::uint64_t words) {
  if (words <= config_.memory_cap) return absl::OkStatus();
  const int round = trace_.rounds();
  if (config_.enforcement == Enforcement::kStrict) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "round ", round, ": machine ", machine, " ",
        std::string(LoadKindName(kind)), " ", words,
        " words, above the memory cap of ", config_.memory_cap));
  }
  trace_.violations.push_back({round, machine, kind, words});
  return absl::OkStatus();
}

absl::StatusOr<MachineMessages> MpcSimulator::Shuffle(
    MachineMessages outboxes, const std::vector<std::uint64_t>& resident) {
  const std::size_t machines = config_.num_machines;
  if (outboxes.size() != machines) {
    return absl::InvalidArgumentError(absl::StrCat(
        "expected ", machines, " outboxes, got ", outboxes.size()));
  }
  for (std::size_t m = 0; m < machines; ++m) {
    for (const Message& msg : outboxes[m]) {
      if (msg.key.tag == kDirectTag && msg.key.a >= machines) {
        return absl::InvalidArgumentError(
            absl::StrCat("message from machine ", m,
                         " addressed to nonexistent machine ", msg.key.a));
      }
    }
  }

  trace_.per_round.emplace_back();
  RoundLoad& load = trace_.per_round.back();
  MachineMessages inboxes(machines);
  std::vector<std::uint64_t> sent(machines, 0);
  std::vector<std::uint64_t> received(machines, 0);
  for (std::size_t m = 0; m < machines; ++m) {
    for (Message& msg : outboxes[m]) {
      const std::size_t dest = DestinationOf(msg.key, machines);
      msg.source = static_cast<std::uint32_t>(m);
      sent[m] += msg.words();
      received[dest] += msg.words();
      inboxes[dest].push_back(std::move(msg));
    }
  }
  for (std::size_t m = 0; m < machines; ++m) {
    load.sent_max = std::max(load.sent_max, sent[m]);
    load.recv_max = std::max(load.recv_max, received[m]);
    load.total_words += sent[m];
    if (m < resident.size()) {
      load.resident_max = std::max(load.resident_max, resident[m]);
    }
  }
  trace_.total_words += load.total_words;

  for (std::size_t m = 0; m < machines; ++m) {
    if (absl::Status s = Charge(LoadKind::kSent, m, sent[m]); !s.ok()) return s;
    if (absl::Status s = Charge(LoadKind::kReceived, m, received[m]); !s.ok()) {
      return s;
    }
    if (m < resident.size()) {
      if (absl::Status s = Charge(LoadKind::kResident, m, resident[m]);
          !s.ok()) {
        return s;
      }
    }
  }

  for (auto& inbox : inboxes) {
    std::stable_sort(inbox.begin(), inbox.end(),
                     [](const Message& x, const Message& y) {
                       if (x.key != y.key) return x.key < y.key;
                       return x.payload < y.payload;
                     });
  }
  return inboxes;
}

double MpcCommunicationConstant(const Params& params) {
  return 6.0 * kMpcRounds +
         8.0 * params.sketch_cap_factor * params.a / params.beta;
}

double MpcCommunicationBound(std::size_t n, std::uint64_t num_edges,
                             const Params& params) {
  const double plus_edges = static_cast<double>(num_edges + n);
  const double log_n =
      std::log(static_cast<double>(std::max<std::size_t>(n, 1)));
  return MpcCommunicationConstant(params) * plus_edges * log_n;
}

namespace {

using Payload = std::vector<std::uint64_t>;
// Per machine: vertex -> payload addressed to or produced for that vertex.
using VertexValues = std::vector<std::map<VertexId, Payload>>;

enum class Combine : std::uint8_t { kSum, kMax, kUnion };

void CombineInto(Combine combine, Payload& acc, const Payload& value) {
  if (acc.empty()) {
    acc = value;
    return;
  }
  switch (combine) {
    case Combine::kSum:
      acc[0] += value[0];
      break;
    case Combine::kMax:
      acc[0] = std::max(acc[0], value[0]);
      break;
    case Combine::kUnion: {
      Payload merged;
      merged.reserve(acc.size() + value.size());
      std::set_union(acc.begin(), acc.end(), value.begin(), value.end(),
                     std::back_inserter(merged));
      acc = std::move(merged);
      break;
    }
  }
}

struct LocalEdge {
  VertexId u = 0;
  VertexId v = 0;
  bool agreed = false;
  bool kept = false;
};

// What an edge holder knows about an endpoint of one of its edges.
struct EndpointInfo {
  std::uint64_t degree = 0;
  bool light = false;
  VertexId label = 0;
  // Union of the endpoint's two sample levels; the sketch is rebuilt from it
  // when an edge is decided.
  std::vector<VertexId> samples;
};

struct RootState {
  std::uint64_t degree = 1;
  std::uint64_t removed = 0;
  bool light = false;
  VertexId label = 0;
  Payload samples;
  std::vector<std::uint32_t> groups;
};

struct RelayState {
  std::vector<std::uint32_t> sources;
  Payload pending;
};

// Machine m reports to relay group m % fanout, so a root talks to at most
// `fanout` relays and consecutive machines land in different groups.
std::size_t RelayFanout(const MpcConfig& config) {
  if (config.relay_fanout > 0) return config.relay_fanout;
  return static_cast<std::size_t>(
      std::ceil(std::sqrt(static_cast<double>(config.num_machines))));
}

struct Machine {
  std::vector<LocalEdge> edges;
  std::map<VertexId, EndpointInfo> endpoints;
  std::map<VertexId, RootState> roots;
  std::map<std::pair<VertexId, std::uint32_t>, RelayState> relays;

  std::uint64_t ResidentWords() const {
    std::uint64_t words = 3 * edges.size();
    for (const auto& [v, info] : endpoints) words += 4 + info.samples.size();
    for (const auto& [v, root] : roots) {
      words += 5 + root.samples.size() + root.groups.size();
    }
    for (const auto& [key, relay] : relays) {
      words += 2 + relay.sources.size() + relay.pending.size();
    }
    return words;
  }
};

class MpcRun {
 public:
  MpcRun(const SignedGraph& graph, const Params& params, OracleMode mode,
         const MpcConfig& config)
      : graph_(graph),
        params_(params),
        exact_(mode == OracleMode::kExact),
        sim_(config),
        num_machines_(config.num_machines),
        relay_fanout_(RelayFanout(config)),
        machines_(config.num_machines) {}

  absl::StatusOr<MpcResult> Run();

 private:
  std::vector<std::uint64_t> Resident() const {
    std::vector<std::uint64_t> words(num_machines_);
    for (std::size_t m = 0; m < num_machines_; ++m) {
      words[m] = machines_[m].ResidentWords();
    }
    return words;
  }

  absl::StatusOr<MachineMessages> Round(MachineMessages outboxes) {
    return sim_.Shuffle(std::move(outboxes), Resident());
  }

  // Roots and relays are dealt round-robin, so no machine hosts more than
  // its share of either.
  std::size_t RootMachine(VertexId v) const { return v % num_machines_; }

  MessageKey RelayKey(VertexId v, std::uint64_t group) const {
    const std::uint64_t slot =
        static_cast<std::uint64_t>(v) * relay_fanout_ + group;
    return {kDirectTag, slot % num_machines_, slot};
  }
  std::pair<VertexId, std::uint32_t> RelayOf(const MessageKey& key) const {
    return {static_cast<VertexId>(key.b / relay_fanout_),
            static_cast<std::uint32_t>(key.b % relay_fanout_)};
  }
  MessageKey RootKey(VertexId v) const {
    return {kDirectTag, RootMachine(v), v};
  }

  // Holders -> relays -> roots. Returns the combined value per root vertex,
  // indexed by the root's machine. With `record_routes` the relays remember
  // their source machines and the roots their relay groups, which later
  // scatters follow.
  absl::StatusOr<VertexValues> Gather(VertexValues partials, Combine combine,
                                      bool record_routes);

  // Roots -> relays -> holders, along the recorded routes.
  absl::StatusOr<VertexValues> Scatter(const VertexValues& values);

  void Distribute();
  absl::Status Degrees();
  absl::Status Sketches();
  absl::Status Decide();
  absl::Status Lightness();
  absl::Status Labels();
  absl::StatusOr<Clustering> Output();

  const SignedGraph& graph_;
  const Params& params_;
  const bool exact_;
  MpcSimulator sim_;
  const std::size_t num_machines_;
  const std::size_t relay_fanout_;
  std::vector<Machine> machines_;
};

absl::StatusOr<VertexValues> MpcRun::Gather(VertexValues partials,
                                            Combine combine,
                                            bool record_routes) {
  MachineMessages up(num_machines_);
  for (std::size_t m = 0; m < num_machines_; ++m) {
    const auto group = static_cast<std::uint64_t>(m % relay_fanout_);
    for (auto& [v, payload] : partials[m]) {
      up[m].push_back({RelayKey(v, group), std::move(payload)});
    }
  }
  absl::StatusOr<MachineMessages> at_relays = Round(std::move(up));
  if (!at_relays.ok()) return at_relays.status();

  for (std::size_t m = 0; m < num_machines_; ++m) {
    for (const Message& msg : (*at_relays)[m]) {
      RelayState& relay = machines_[m].relays[RelayOf(msg.key)];
      if (record_routes) relay.sources.push_back(msg.source);
      CombineInto(combine, relay.pending, msg.payload);
    }
  }

  MachineMessages to_roots(num_machines_);
  for (std::size_t m = 0; m < num_machines_; ++m) {
    for (auto& [key, relay] : machines_[m].relays) {
      if (relay.pending.empty()) continue;
      Payload payload;
      payload.reserve(relay.pending.size() + 1);
      payload.push_back(key.second);
      payload.insert(payload.end(), relay.pending.begin(),
                     relay.pending.end());
      relay.pending.clear();
      to_roots[m].push_back({RootKey(key.first), std::move(payload)});
    }
  }
  absl::StatusOr<MachineMessages> at_roots = Round(std::move(to_roots));
  if (!at_roots.ok()) return at_roots.status();

  VertexValues combined(num_machines_);
  for (std::size_t m = 0; m < num_machines_; ++m) {
    for (const Message& msg : (*at_roots)[m]) {
      const auto v = static_cast<VertexId>(msg.key.b);
      if (record_routes) {
        machines_[m].roots[v].groups.push_back(
            static_cast<std::uint32_t>(msg.payload[0]));
      }
      CombineInto(combine, combined[m][v],
                  Payload(msg.payload.begin() + 1, msg.payload.end()));
    }
  }
  return combined;
}

absl::StatusOr<VertexValues> MpcRun::Scatter(const VertexValues& values) {
  MachineMessages down(num_machines_);
  for (std::size_t m = 0; m < num_machines_; ++m) {
    for (const auto& [v, payload] : values[m]) {
      for (std::uint32_t group : machines_[m].roots.at(v).groups) {
        down[m].push_back({RelayKey(v, group), payload});
      }
    }
  }
  absl::StatusOr<MachineMessages> at_relays = Round(std::move(down));
  if (!at_relays.ok()) return at_relays.status();

  MachineMessages to_holders(num_machines_);
  for (std::size_t m = 0; m < num_machines_; ++m) {
    for (const Message& msg : (*at_relays)[m]) {
      const auto [v, group] = RelayOf(msg.key);
      const RelayState& relay = machines_[m].relays.at({v, group});
      for (std::uint32_t holder : relay.sources) {
        to_holders[m].push_back({{kDirectTag, holder, v}, msg.payload});
      }
    }
  }
  absl::StatusOr<MachineMessages> at_holders = Round(std::move(to_holders));
  if (!at_holders.ok()) return at_holders.status();

  VertexValues delivered(num_machines_);
  for (std::size_t m = 0; m < num_machines_; ++m) {
    for (Message& msg : (*at_holders)[m]) {
      delivered[m][static_cast<VertexId>(msg.key.b)] = std::move(msg.payload);
    }
  }
  return delivered;
}

// Edges are dealt round-robin by edge id; every vertex gets a root.
void MpcRun::Distribute() {
  graph_.ForEachEdge([&](VertexId u, VertexId v, std::uint64_t id) {
    machines_[id % num_machines_].edges.push_back({u, v});
  });
  for (VertexId v = 0; v < graph_.num_vertices(); ++v) {
    machines_[RootMachine(v)].roots[v].label = v;
  }
}

absl::Status MpcRun::Degrees() {
  VertexValues partials(num_machines_);
  for (std::size_t m = 0; m < num_machines_; ++m) {
    for (const LocalEdge& e : machines_[m].edges) {
      for (VertexId x : {e.u, e.v}) {
        Payload& p = partials[m][x];
        if (p.empty()) p.push_back(0);
        ++p[0];
      }
    }
  }
  absl::StatusOr<VertexValues> sums =
      Gather(std::move(partials), Combine::kSum, /*record_routes=*/true);
  if (!sums.ok()) return sums.status();

  VertexValues degrees(num_machines_);
  for (std::size_t m = 0; m < num_machines_; ++m) {
    for (auto& [v, root] : machines_[m].roots) {
      const auto it = (*sums)[m].find(v);
      root.degree = 1 + (it == (*sums)[m].end() ? 0 : it->second[0]);
      if (!root.groups.empty()) degrees[m][v] = {root.degree};
    }
  }
  absl::StatusOr<VertexValues> delivered = Scatter(degrees);
  if (!delivered.ok()) return delivered.status();
  for (std::size_t m = 0; m < num_machines_; ++m) {
    for (const auto& [v, payload] : (*delivered)[m]) {
      EndpointInfo& info = machines_[m].endpoints[v];
      info.degree = payload[0];
      info.label = v;
    }
  }
  return absl::OkStatus();
}

absl::Status MpcRun::Sketches() {
  const std::size_t n = graph_.num_vertices();
  VertexValues partials(num_machines_);
  for (std::size_t m = 0; m < num_machines_; ++m) {
    Machine& machine = machines_[m];
    for (const LocalEdge& e : machine.edges) {
      for (auto [owner, other] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
        const std::uint64_t degree = machine.endpoints.at(owner).degree;
        Payload& p = partials[m][owner];
        if (SampledForDegree(other, degree, n, params_, exact_)) {
          p.push_back(other);
        }
      }
    }
    for (auto& [v, p] : partials[m]) std::sort(p.begin(), p.end());
  }
  absl::StatusOr<VertexValues> unions =
      Gather(std::move(partials), Combine::kUnion, /*record_routes=*/false);
  if (!unions.ok()) return unions.status();

  VertexValues bundles(num_machines_);
  for (std::size_t m = 0; m < num_machines_; ++m) {
    for (auto& [v, root] : machines_[m].roots) {
      std::vector<VertexId> candidates{v};
      if (const auto it = (*unions)[m].find(v); it != (*unions)[m].end()) {
        candidates.insert(candidates.end(), it->second.begin(),
                          it->second.end());
      }
      absl::StatusOr<SampleSketch> sketch = BuildSketchFromCandidates(
          v, root.degree, candidates, n, params_, exact_);
      if (!sketch.ok()) return sketch.status();
      root.samples.clear();
      std::set_union(sketch->samples_at_level.begin(),
                     sketch->samples_at_level.end(),
                     sketch->samples_at_next.begin(),
                     sketch->samples_at_next.end(),
                     std::back_inserter(root.samples));
      if (!root.groups.empty()) bundles[m][v] = root.samples;
    }
  }
  absl::StatusOr<VertexValues> delivered = Scatter(bundles);
  if (!delivered.ok()) return delivered.status();
  for (std::size_t m = 0; m < num_machines_; ++m) {
    for (const auto& [v, payload] : (*delivered)[m]) {
      machines_[m].endpoints.at(v).samples.assign(payload.begin(),
                                                  payload.end());
    }
  }
  return absl::OkStatus();
}

// Local to each machine: no communication.
absl::Status MpcRun::Decide() {
  const std::size_t n = graph_.num_vertices();
  for (Machine& machine : machines_) {
    for (LocalEdge& e : machine.edges) {
      const EndpointInfo& iu = machine.endpoints.at(e.u);
      const EndpointInfo& iv = machine.endpoints.at(e.v);
      if (exact_) {
        // Forced-exact samples are the full closed neighborhoods.
        e.agreed = BelowAgreementThreshold(
            SortedSymDiffSize(iu.samples, iv.samples),
            std::max(iu.degree, iv.degree), 1, params_.beta);
      } else {
        absl::StatusOr<SampleSketch> su = BuildSketchFromCandidates(
            e.u, iu.degree, iu.samples, n, params_, exact_);
        if (!su.ok()) return su.status();
        absl::StatusOr<SampleSketch> sv = BuildSketchFromCandidates(
            e.v, iv.degree, iv.samples, n, params_, exact_);
        if (!sv.ok()) return sv.status();
        absl::StatusOr<Verdict> verdict =
            AgreementSampled(*su, *sv, params_, n);
        if (!verdict.ok()) return verdict.status();
        e.agreed = *verdict == Verdict::kYes;
      }
    }
  }
  return absl::OkStatus();
}

absl::Status MpcRun::Lightness() {
  VertexValues partials(num_machines_);
  for (std::size_t m = 0; m < num_machines_; ++m) {
    for (const LocalEdge& e : machines_[m].edges) {
      if (e.agreed) continue;
      for (VertexId x : {e.u, e.v}) {
        Payload& p = partials[m][x];
        if (p.empty()) p.push_back(0);
        ++p[0];
      }
    }
  }
  absl::StatusOr<VertexValues> sums =
      Gather(std::move(partials), Combine::kSum, /*record_routes=*/false);
  if (!sums.ok()) return sums.status();

  VertexValues flags(num_machines_);
  for (std::size_t m = 0; m < num_machines_; ++m) {
    for (auto& [v, root] : machines_[m].roots) {
      const auto it = (*sums)[m].find(v);
      root.removed = it == (*sums)[m].end() ? 0 : it->second[0];
      root.light = static_cast<double>(root.removed) >
                   params_.lambda * static_cast<double>(root.degree);
      if (!root.groups.empty()) flags[m][v] = {root.light ? 1u : 0u};
    }
  }
  absl::StatusOr<VertexValues> delivered = Scatter(flags);
  if (!delivered.ok()) return delivered.status();
  for (std::size_t m = 0; m < num_machines_; ++m) {
    Machine& machine = machines_[m];
    for (const auto& [v, payload] : (*delivered)[m]) {
      machine.endpoints.at(v).light = payload[0] != 0;
    }
    for (LocalEdge& e : machine.edges) {
      e.kept = e.agreed && !(machine.endpoints.at(e.u).light &&
                             machine.endpoints.at(e.v).light);
    }
  }
  return absl::OkStatus();
}

absl::Status MpcRun::Labels() {
  for (int round = 0; round < kLabelPropagationRounds; ++round) {
    VertexValues partials(num_machines_);
    for (std::size_t m = 0; m < num_machines_; ++m) {
      Machine& machine = machines_[m];
      for (const LocalEdge& e : machine.edges) {
        if (!e.kept) continue;
        for (auto [x, y] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
          Payload& p = partials[m][x];
          const std::uint64_t label = machine.endpoints.at(y).label;
          if (p.empty()) {
            p.push_back(label);
          } else {
            p[0] = std::max(p[0], label);
          }
        }
      }
    }
    absl::StatusOr<VertexValues> maxima =
        Gather(std::move(partials), Combine::kMax, /*record_routes=*/false);
    if (!maxima.ok()) return maxima.status();

    VertexValues labels(num_machines_);
    for (std::size_t m = 0; m < num_machines_; ++m) {
      for (auto& [v, root] : machines_[m].roots) {
        if (const auto it = (*maxima)[m].find(v); it != (*maxima)[m].end()) {
          root.label = std::max<VertexId>(
              root.label, static_cast<VertexId>(it->second[0]));
        }
        if (!root.groups.empty()) labels[m][v] = {root.label};
      }
    }
    if (round + 1 == kLabelPropagationRounds) break;

    absl::StatusOr<VertexValues> delivered = Scatter(labels);
    if (!delivered.ok()) return delivered.status();
    for (std::size_t m = 0; m < num_machines_; ++m) {
      for (const auto& [v, payload] : (*delivered)[m]) {
        machines_[m].endpoints.at(v).label = static_cast<VertexId>(payload[0]);
      }
    }
  }
  return absl::OkStatus();
}

// Roots write their final label to the machine owning the vertex's slice of
// the output range.
absl::StatusOr<Clustering> MpcRun::Output() {
  const std::size_t n = graph_.num_vertices();
  MachineMessages out(num_machines_);
  for (std::size_t m = 0; m < num_machines_; ++m) {
    for (const auto& [v, root] : machines_[m].roots) {
      const std::uint64_t slice =
          static_cast<std::uint64_t>(v) * num_machines_ / n;
      out[m].push_back({{kDirectTag, slice, v}, {root.label}});
    }
  }
  absl::StatusOr<MachineMessages> written = Round(std::move(out));
  if (!written.ok()) return written.status();

  std::vector<ClusterId> ids(n, 0);
  for (const auto& inbox : *written) {
    for (const Message& msg : inbox) {
      ids[msg.key.b] = static_cast<ClusterId>(msg.payload[0]);
    }
  }
  return Clustering(std::move(ids));
}

absl::StatusOr<MpcResult> MpcRun::Run() {
  Distribute();
  if (absl::Status s = Degrees(); !s.ok()) return s;
  if (absl::Status s = Sketches(); !s.ok()) return s;
  if (absl::Status s = Decide(); !s.ok()) return s;
  if (absl::Status s = Lightness(); !s.ok()) return s;
  if (absl::Status s = Labels(); !s.ok()) return s;
  absl::StatusOr<Clustering> clustering = Output();
  if (!clustering.ok()) return clustering.status();
  return MpcResult{*std::move(clustering), sim_.TakeTrace()};
}

}  // namespace

absl::StatusOr<MpcResult> RunMpcPipeline(const SignedGraph& graph,
                                         const Params& params, OracleMode mode,
                                         const MpcConfig& config) {
  if (absl::Status s = ValidateParams(params); !s.ok()) return s;
  if (config.num_machines == 0 || config.memory_cap == 0) {
    return absl::InvalidArgumentError("invalid MPC configuration");
  }
  MpcRun run(graph, params, mode, config);
  return run.Run();
}

}  // namespace agreeclust
