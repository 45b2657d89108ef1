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

#ifndef AGREECLUST_EVAL_H_
#define AGREECLUST_EVAL_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "absl/status/statusor.h"
#include "agreeclust/clustering.h"
#include "agreeclust/graph.h"

namespace agreeclust {

// Disagreements: "+" edges between clusters plus "-" pairs inside clusters.
// Self-loops never contribute.
absl::StatusOr<std::uint64_t> ClusteringCost(const SignedGraph& graph,
                                             const Clustering& clustering);

inline constexpr std::size_t kBruteForceMaxVertices = 12;

struct OptimalClustering {
  Clustering clustering;
  std::uint64_t cost = 0;
};

// Exhaustive search over set partitions in restricted-growth-string order.
// Among minimizers the first one in that order is returned.
absl::StatusOr<OptimalClustering> BruteForceOpt(const SignedGraph& graph);

// Classic Pivot: visit vertices in a seeded random order; each unclustered
// vertex forms a cluster with its unclustered neighbors.
Clustering PivotBaseline(const SignedGraph& graph, std::uint64_t seed);

// Pivot with an explicit visiting order (a permutation of [0, n)).
Clustering PivotWithOrder(const SignedGraph& graph,
                          const std::vector<VertexId>& order);

struct ClusterStats {
  std::size_t num_clusters = 0;
  // cluster size -> number of clusters of that size
  std::map<std::size_t, std::size_t> size_histogram;
  // Non-loop "+" edges inside clusters over all non-loop "+" edges; 1 when
  // the graph has none.
  double intra_cluster_edge_fraction = 1.0;
  std::uint64_t objective = 0;
};

absl::StatusOr<ClusterStats> ComputeClusterStats(const SignedGraph& graph,
                                                 const Clustering& clustering);

// Clusters (by canonical id) of size <= max_size for which some split of the
// cluster strictly lowers the cost with every other cluster held fixed.
absl::StatusOr<std::vector<ClusterId>> ClustersImprovedBySplitting(
    const SignedGraph& graph, const Clustering& clustering,
    std::size_t max_size = kBruteForceMaxVertices);

}  // namespace agreeclust

#endif  // AGREECLUST_EVAL_H_
