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

#include "agreeclust/components.h"

#include <algorithm>
#include <numeric>
#include <queue>

namespace agreeclust {

std::vector<VertexId> MaxLabelRound(const SignedGraph& graph,
                                    const std::vector<VertexId>& labels) {
  std::vector<VertexId> next(labels.size());
  for (VertexId v = 0; v < graph.num_vertices(); ++v) {
    VertexId best = labels[v];
    for (VertexId w : graph.Neighbors(v)) best = std::max(best, labels[w]);
    next[v] = best;
  }
  return next;
}

Clustering LabelPropagation4(const SignedGraph& graph) {
  std::vector<VertexId> labels(graph.num_vertices());
  std::iota(labels.begin(), labels.end(), VertexId{0});
  for (int round = 0; round < kLabelPropagationRounds; ++round) {
    labels = MaxLabelRound(graph, labels);
  }
  return Clustering(std::move(labels));
}

Clustering LabelPropagation4(const SparsifiedGraph& sparsified) {
  return LabelPropagation4(sparsified.reduced);
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), VertexId{0});
  }

  VertexId Find(VertexId v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  // The larger root wins, so every root is its set's maximum.
  void Union(VertexId a, VertexId b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<VertexId> parent_;
};

}  // namespace

Clustering UnionFindComponents(const SignedGraph& graph) {
  DisjointSets sets(graph.num_vertices());
  graph.ForEachEdge(
      [&](VertexId u, VertexId v, std::uint64_t) { sets.Union(u, v); });
  std::vector<ClusterId> ids(graph.num_vertices());
  for (VertexId v = 0; v < graph.num_vertices(); ++v) ids[v] = sets.Find(v);
  return Clustering(std::move(ids));
}

Clustering UnionFindComponents(const SparsifiedGraph& sparsified) {
  return UnionFindComponents(sparsified.reduced);
}

std::vector<int> BoundedBfs(const SignedGraph& graph, VertexId source,
                            int max_depth) {
  std::vector<int> dist(graph.num_vertices(), -1);
  std::queue<VertexId> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const VertexId v = frontier.front();
    frontier.pop();
    if (dist[v] == max_depth) continue;
    for (VertexId w : graph.Neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

int DiameterReport::max_observed() const {
  int best = 0;
  for (const auto& c : components) best = std::max(best, c.max_eccentricity);
  return best;
}

DiameterReport ValidateDiameter(const SignedGraph& graph,
                                const Clustering& clustering, int bound,
                                std::size_t exhaustive_limit) {
  constexpr std::size_t kSampledSources = 64;
  DiameterReport report;
  const auto clusters = clustering.Clusters();
  report.exhaustive = clustering.num_vertices() < exhaustive_limit;

  // Reusable distance buffer; reset only the vertices each BFS touched.
  std::vector<int> dist(graph.num_vertices(), -1);
  std::vector<VertexId> touched;
  std::queue<VertexId> frontier;

  for (std::size_t c = 0; c < clusters.size(); ++c) {
    const auto& members = clusters[c];
    ComponentDiameter entry;
    entry.cluster = static_cast<ClusterId>(c);
    entry.size = members.size();

    std::vector<VertexId> sources;
    if (report.exhaustive || members.size() <= kSampledSources) {
      sources = members;
    } else {
      for (std::size_t i = 0; i < kSampledSources; ++i) {
        sources.push_back(members[i * members.size() / kSampledSources]);
      }
    }

    for (VertexId source : sources) {
      dist[source] = 0;
      touched.push_back(source);
      frontier.push(source);
      while (!frontier.empty()) {
        const VertexId v = frontier.front();
        frontier.pop();
        for (VertexId w : graph.Neighbors(v)) {
          if (dist[w] < 0) {
            dist[w] = dist[v] + 1;
            touched.push_back(w);
            frontier.push(w);
          }
        }
      }
      for (VertexId m : members) {
        entry.max_eccentricity = std::max(
            entry.max_eccentricity, dist[m] < 0 ? kUnreachable : dist[m]);
      }
      for (VertexId t : touched) dist[t] = -1;
      touched.clear();
    }

    if (entry.max_eccentricity > bound) {
      report.violations.push_back(entry.cluster);
    }
    report.components.push_back(entry);
  }
  return report;
}

}  // namespace agreeclust
