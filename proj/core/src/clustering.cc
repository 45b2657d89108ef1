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

#include "agreeclust/clustering.h"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <utility>

namespace agreeclust {

Clustering::Clustering(std::vector<ClusterId> assignment)
    : assignment_(std::move(assignment)) {
  std::vector<ClusterId> ids = assignment_;
  std::sort(ids.begin(), ids.end());
  num_clusters_ = std::unique(ids.begin(), ids.end()) - ids.begin();
}

Clustering Clustering::Singletons(std::size_t n) {
  std::vector<ClusterId> ids(n);
  std::iota(ids.begin(), ids.end(), ClusterId{0});
  return Clustering(std::move(ids));
}

Clustering Clustering::Canonical() const {
  std::unordered_map<ClusterId, ClusterId> relabel;
  std::vector<ClusterId> out(assignment_.size());
  for (std::size_t v = 0; v < assignment_.size(); ++v) {
    auto [it, inserted] = relabel.try_emplace(
        assignment_[v], static_cast<ClusterId>(relabel.size()));
    out[v] = it->second;
  }
  return Clustering(std::move(out));
}

std::vector<std::vector<VertexId>> Clustering::Clusters() const {
  const Clustering canonical = Canonical();
  std::vector<std::vector<VertexId>> members(canonical.num_clusters());
  for (VertexId v = 0; v < canonical.num_vertices(); ++v) {
    members[canonical.cluster_of(v)].push_back(v);
  }
  return members;
}

bool SamePartition(const Clustering& a, const Clustering& b) {
  return a.num_vertices() == b.num_vertices() &&
         a.Canonical().assignment() == b.Canonical().assignment();
}

void WriteClusteringFile(const Clustering& clustering, const VertexIndex& index,
                         std::ostream& out) {
  const Clustering canonical = clustering.Canonical();
  for (VertexId v = 0; v < canonical.num_vertices(); ++v) {
    out << index.external(v) << ' ' << canonical.cluster_of(v) << '\n';
  }
}

}  // namespace agreeclust
