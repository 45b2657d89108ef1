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

#include "agreeclust/generators.h"

#include <cmath>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "agreeclust/hash.h"

namespace agreeclust {
namespace {

constexpr std::uint64_t kGnpDomain = 0x676e70;
constexpr std::uint64_t kPlantedDomain = 0x706c616e74;

absl::Status CheckProbability(double p, absl::string_view name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat(name, " must lie in [0, 1], got ", p));
  }
  return absl::OkStatus();
}

bool EdgeCoin(std::uint64_t seed, VertexId u, VertexId v, double p) {
  return ToUnitInterval(Hash3(seed, u, v)) < p;
}

}  // namespace

absl::StatusOr<SignedGraph> GenGnp(std::size_t n, double p,
                                   std::uint64_t seed) {
  if (absl::Status s = CheckProbability(p, "p"); !s.ok()) return s;
  std::vector<Edge> edges;
  const std::uint64_t salted = HashCombine(seed, kGnpDomain);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (EdgeCoin(salted, u, v, p)) edges.push_back({u, v});
    }
  }
  return SignedGraph::Build(n, edges);
}

absl::StatusOr<SignedGraph> GenPlanted(std::size_t k, std::size_t size,
                                       double p_in, double p_out,
                                       std::uint64_t seed) {
  if (absl::Status s = CheckProbability(p_in, "p_in"); !s.ok()) return s;
  if (absl::Status s = CheckProbability(p_out, "p_out"); !s.ok()) return s;
  if (size == 0) return absl::InvalidArgumentError("block size must be >= 1");
  const std::size_t n = k * size;
  const std::uint64_t salted = HashCombine(seed, kPlantedDomain);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      const double p = (u / size == v / size) ? p_in : p_out;
      if (EdgeCoin(salted, u, v, p)) edges.push_back({u, v});
    }
  }
  return SignedGraph::Build(n, edges);
}

Clustering PlantedTruth(std::size_t k, std::size_t size) {
  std::vector<ClusterId> ids(k * size);
  for (std::size_t v = 0; v < ids.size(); ++v) {
    ids[v] = static_cast<ClusterId>(v / size);
  }
  return Clustering(std::move(ids));
}

Clustering TightInstance::TwoCliquePartition() const {
  std::vector<ClusterId> ids(2 * clique_size);
  for (std::size_t v = 0; v < ids.size(); ++v) {
    ids[v] = v < clique_size ? 0 : 1;
  }
  return Clustering(std::move(ids));
}

absl::StatusOr<TightInstance> GenTightInstance(std::size_t d, double beta,
                                               double x_mult) {
  const double dd = static_cast<double>(d);
  if (!(beta > 0.0 && beta < 1.0) || !(x_mult >= 1.0)) {
    return absl::InvalidArgumentError(
        "tight instance needs beta in (0, 1) and x_mult >= 1");
  }
  if (beta * dd * x_mult < 1.0 || (1.0 - beta) * dd < beta * dd * x_mult) {
    return absl::InvalidArgumentError(absl::StrCat(
        "infeasible tight instance: d=", d, " beta=", beta,
        " x_mult=", x_mult));
  }
  TightInstance inst;
  inst.clique_size = static_cast<std::size_t>(std::llround((1.0 - beta) * dd));
  inst.cross_size =
      static_cast<std::size_t>(std::llround(x_mult * beta * dd));
  const auto s = static_cast<VertexId>(inst.clique_size);
  const auto x = static_cast<VertexId>(inst.cross_size);

  std::vector<Edge> edges;
  for (VertexId base : {VertexId{0}, s}) {
    for (VertexId i = 0; i < s; ++i) {
      for (VertexId j = i + 1; j < s; ++j) {
        edges.push_back({base + i, base + j});
      }
    }
  }
  for (VertexId i = 0; i < x; ++i) {
    for (VertexId j = 0; j < x; ++j) edges.push_back({i, s + j});
  }
  absl::StatusOr<SignedGraph> graph = SignedGraph::Build(2 * s, edges);
  if (!graph.ok()) return graph.status();
  inst.graph = *std::move(graph);
  return inst;
}

absl::StatusOr<SignedGraph> GenerateFromSpec(std::string_view spec,
                                             std::uint64_t seed) {
  const absl::string_view text(spec.data(), spec.size());
  const std::vector<absl::string_view> parts = absl::StrSplit(text, ':');
  auto bad = [&]() {
    return absl::InvalidArgumentError(absl::StrCat(
        "bad generator spec '", text,
        "'; expected gnp:n:p, planted:k:size:pin:pout or tight:d:beta:xmult"));
  };
  if (parts.empty()) return bad();

  if (parts[0] == "gnp" && parts.size() == 3) {
    std::size_t n = 0;
    double p = 0;
    if (!absl::SimpleAtoi(parts[1], &n) || !absl::SimpleAtod(parts[2], &p)) {
      return bad();
    }
    return GenGnp(n, p, seed);
  }
  if (parts[0] == "planted" && parts.size() == 5) {
    std::size_t k = 0, size = 0;
    double p_in = 0, p_out = 0;
    if (!absl::SimpleAtoi(parts[1], &k) || !absl::SimpleAtoi(parts[2], &size) ||
        !absl::SimpleAtod(parts[3], &p_in) ||
        !absl::SimpleAtod(parts[4], &p_out)) {
      return bad();
    }
    return GenPlanted(k, size, p_in, p_out, seed);
  }
  if (parts[0] == "tight" && parts.size() == 4) {
    std::size_t d = 0;
    double beta = 0, x_mult = 0;
    if (!absl::SimpleAtoi(parts[1], &d) || !absl::SimpleAtod(parts[2], &beta) ||
        !absl::SimpleAtod(parts[3], &x_mult)) {
      return bad();
    }
    absl::StatusOr<TightInstance> inst = GenTightInstance(d, beta, x_mult);
    if (!inst.ok()) return inst.status();
    return std::move(inst->graph);
  }
  return bad();
}

}  // namespace agreeclust
