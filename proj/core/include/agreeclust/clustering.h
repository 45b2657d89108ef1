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

#ifndef AGREECLUST_CLUSTERING_H_
#define AGREECLUST_CLUSTERING_H_

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <vector>

#include "agreeclust/edge_list.h"
#include "agreeclust/graph.h"

namespace agreeclust {

using ClusterId = std::uint32_t;

// A partition of [0, n) given as a vertex -> cluster id map. Ids are
// arbitrary labels; compare clusterings with SamePartition.
class Clustering {
 public:
  Clustering() = default;
  explicit Clustering(std::vector<ClusterId> assignment);

  static Clustering Singletons(std::size_t n);

  std::size_t num_vertices() const { return assignment_.size(); }
  std::size_t num_clusters() const { return num_clusters_; }
  ClusterId cluster_of(VertexId v) const { return assignment_[v]; }
  const std::vector<ClusterId>& assignment() const { return assignment_; }

  // Relabels clusters to 0..k-1 in order of first appearance.
  Clustering Canonical() const;

  // Sorted member lists, ordered by smallest member.
  std::vector<std::vector<VertexId>> Clusters() const;

 private:
  std::vector<ClusterId> assignment_;
  std::size_t num_clusters_ = 0;
};

bool SamePartition(const Clustering& a, const Clustering& b);

// One line per vertex: "<external id> <canonical cluster id>".
void WriteClusteringFile(const Clustering& clustering, const VertexIndex& index,
                         std::ostream& out);

}  // namespace agreeclust

#endif  // AGREECLUST_CLUSTERING_H_
