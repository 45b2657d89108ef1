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

#ifndef AGREECLUST_COMPONENTS_H_
#define AGREECLUST_COMPONENTS_H_

#include <cstddef>
#include <limits>
#include <vector>

#include "agreeclust/agreement.h"
#include "agreeclust/clustering.h"
#include "agreeclust/graph.h"

namespace agreeclust {

inline constexpr int kLabelPropagationRounds = 4;

// One synchronous max-label round: next[v] = max over closed N(v) of
// labels[w]. Shared by every driver so that they agree bit-for-bit.
std::vector<VertexId> MaxLabelRound(const SignedGraph& graph,
                                    const std::vector<VertexId>& labels);

// Four rounds of max-label propagation starting from id(v) = v. The cluster
// id of v is the final label, i.e. the largest vertex id within distance 4.
// Equals the connected components whenever every component has diameter at
// most 4; longer components are split.
Clustering LabelPropagation4(const SignedGraph& graph);
Clustering LabelPropagation4(const SparsifiedGraph& sparsified);

// Exact connected components. Cluster id = largest vertex id in the component,
// matching the label propagation convention.
Clustering UnionFindComponents(const SignedGraph& graph);
Clustering UnionFindComponents(const SparsifiedGraph& sparsified);

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

struct ComponentDiameter {
  ClusterId cluster = 0;
  std::size_t size = 0;
  // Largest BFS distance observed between two members; kUnreachable if some
  // member could not be reached inside the graph.
  int max_eccentricity = 0;
};

struct DiameterReport {
  std::vector<ComponentDiameter> components;
  std::vector<ClusterId> violations;
  bool exhaustive = true;

  bool ok() const { return violations.empty(); }
  int max_observed() const;
};

// BFS from every vertex of every cluster when the clustered vertex total is
// below `exhaustive_limit`; otherwise from 64 evenly spaced sources per
// cluster. Flags clusters whose eccentricity exceeds `bound`.
DiameterReport ValidateDiameter(const SignedGraph& graph,
                                const Clustering& clustering, int bound = 4,
                                std::size_t exhaustive_limit = 100000);

// Hop distances from `source` up to `max_depth`; -1 means farther or
// unreachable.
std::vector<int> BoundedBfs(const SignedGraph& graph, VertexId source,
                            int max_depth);

}  // namespace agreeclust

#endif  // AGREECLUST_COMPONENTS_H_
