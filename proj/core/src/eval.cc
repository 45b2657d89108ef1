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

#include "agreeclust/eval.h"

#include <array>
#include <bit>
#include <limits>
#include <numeric>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "agreeclust/hash.h"

namespace agreeclust {

absl::StatusOr<std::uint64_t> ClusteringCost(const SignedGraph& graph,
                                             const Clustering& clustering) {
  if (clustering.num_vertices() != graph.num_vertices()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "clustering covers ", clustering.num_vertices(),
        " vertices, graph has ", graph.num_vertices()));
  }
  const Clustering canonical = clustering.Canonical();
  std::vector<std::uint64_t> sizes(canonical.num_clusters(), 0);
  for (ClusterId c : canonical.assignment()) ++sizes[c];

  std::uint64_t cut = 0;
  std::uint64_t inside = 0;
  graph.ForEachEdge([&](VertexId u, VertexId v, std::uint64_t) {
    if (canonical.cluster_of(u) == canonical.cluster_of(v)) {
      ++inside;
    } else {
      ++cut;
    }
  });
  std::uint64_t pairs_inside = 0;
  for (std::uint64_t s : sizes) pairs_inside += s * (s - 1) / 2;
  return cut + (pairs_inside - inside);
}

absl::StatusOr<OptimalClustering> BruteForceOpt(const SignedGraph& graph) {
  const std::size_t n = graph.num_vertices();
  if (n > kBruteForceMaxVertices) {
    return absl::InvalidArgumentError(
        absl::StrCat("brute force is limited to ", kBruteForceMaxVertices,
                     " vertices, graph has ", n));
  }

  using Mask = std::uint32_t;
  std::array<Mask, kBruteForceMaxVertices> adjacency{};
  graph.ForEachEdge([&](VertexId u, VertexId v, std::uint64_t) {
    adjacency[u] |= Mask{1} << v;
    adjacency[v] |= Mask{1} << u;
  });

  std::array<Mask, kBruteForceMaxVertices> members{};
  std::array<ClusterId, kBruteForceMaxVertices> label{};
  std::array<ClusterId, kBruteForceMaxVertices> best_label{};
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();

  // Depth-first over restricted growth strings; prune when the partial cost
  // cannot strictly improve on the incumbent.
  auto search = [&](auto&& self, std::size_t i, std::size_t used,
                    std::uint64_t cost) -> void {
    if (cost >= best) return;
    if (i == n) {
      best = cost;
      best_label = label;
      return;
    }
    const Mask earlier = (Mask{1} << i) - 1;
    const Mask nbrs = adjacency[i] & earlier;
    for (std::size_t c = 0; c <= used && c < n; ++c) {
      const Mask same = members[c];
      const std::uint64_t delta =
          std::popcount(same & ~nbrs) + std::popcount(nbrs & ~same);
      members[c] |= Mask{1} << i;
      label[i] = static_cast<ClusterId>(c);
      self(self, i + 1, c == used ? used + 1 : used, cost + delta);
      members[c] &= ~(Mask{1} << i);
    }
  };
  search(search, 0, 0, 0);

  if (n == 0) best = 0;
  return OptimalClustering{
      Clustering(std::vector<ClusterId>(best_label.begin(),
                                        best_label.begin() + n)),
      best};
}

Clustering PivotWithOrder(const SignedGraph& graph,
                          const std::vector<VertexId>& order) {
  constexpr ClusterId kUnassigned = std::numeric_limits<ClusterId>::max();
  std::vector<ClusterId> ids(graph.num_vertices(), kUnassigned);
  for (VertexId pivot : order) {
    if (ids[pivot] != kUnassigned) continue;
    for (VertexId w : graph.Neighbors(pivot)) {
      if (ids[w] == kUnassigned) ids[w] = pivot;
    }
  }
  return Clustering(std::move(ids));
}

Clustering PivotBaseline(const SignedGraph& graph, std::uint64_t seed) {
  std::vector<VertexId> order(graph.num_vertices());
  std::iota(order.begin(), order.end(), VertexId{0});
  HashStream rng(seed, 0x7069766f74ULL);
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[rng.NextBelow(i)]);
  }
  return PivotWithOrder(graph, order);
}

absl::StatusOr<ClusterStats> ComputeClusterStats(const SignedGraph& graph,
                                                 const Clustering& clustering) {
  absl::StatusOr<std::uint64_t> cost = ClusteringCost(graph, clustering);
  if (!cost.ok()) return cost.status();

  ClusterStats stats;
  stats.objective = *cost;
  stats.num_clusters = clustering.num_clusters();
  for (const auto& members : clustering.Clusters()) {
    ++stats.size_histogram[members.size()];
  }
  std::uint64_t inside = 0;
  graph.ForEachEdge([&](VertexId u, VertexId v, std::uint64_t) {
    if (clustering.cluster_of(u) == clustering.cluster_of(v)) ++inside;
  });
  if (graph.num_plus_edges() > 0) {
    stats.intra_cluster_edge_fraction =
        static_cast<double>(inside) /
        static_cast<double>(graph.num_plus_edges());
  }
  return stats;
}

absl::StatusOr<std::vector<ClusterId>> ClustersImprovedBySplitting(
    const SignedGraph& graph, const Clustering& clustering,
    std::size_t max_size) {
  if (clustering.num_vertices() != graph.num_vertices()) {
    return absl::InvalidArgumentError("clustering does not cover the graph");
  }
  std::vector<ClusterId> improved;
  const auto clusters = clustering.Clusters();
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    const auto& members = clusters[c];
    if (members.size() < 2 || members.size() > max_size) continue;
    // Edges leaving the cluster are cut either way, so only the induced
    // instance matters.
    const SignedGraph induced = InducedSubgraph(graph, members);
    absl::StatusOr<std::uint64_t> whole =
        ClusteringCost(induced, Clustering(std::vector<ClusterId>(
                                    members.size(), 0)));
    absl::StatusOr<OptimalClustering> best = BruteForceOpt(induced);
    if (!whole.ok()) return whole.status();
    if (!best.ok()) return best.status();
    if (best->cost < *whole) improved.push_back(static_cast<ClusterId>(c));
  }
  return improved;
}

}  // namespace agreeclust
