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

#include "agreeclust/graph.h"

#include <algorithm>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace agreeclust {

absl::StatusOr<SignedGraph> SignedGraph::Build(std::size_t n,
                                               std::span<const Edge> edges) {
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      return absl::InvalidArgumentError(
          absl::StrCat("edge (", e.u, ", ", e.v,
                       ") references a vertex outside [0, ", n, ")"));
    }
  }

  // Directed entries for both orientations; loops are added separately.
  std::vector<std::pair<VertexId, VertexId>> entries;
  entries.reserve(2 * edges.size() + n);
  for (const Edge& e : edges) {
    if (e.u == e.v) continue;
    entries.emplace_back(e.u, e.v);
    entries.emplace_back(e.v, e.u);
  }
  for (VertexId v = 0; v < n; ++v) entries.emplace_back(v, v);
  std::sort(entries.begin(), entries.end());
  entries.erase(std::unique(entries.begin(), entries.end()), entries.end());

  SignedGraph graph;
  graph.offsets_.assign(n + 1, 0);
  graph.neighbors_.reserve(entries.size());
  for (const auto& [from, to] : entries) {
    ++graph.offsets_[from + 1];
    graph.neighbors_.push_back(to);
  }
  for (std::size_t v = 0; v < n; ++v) {
    graph.offsets_[v + 1] += graph.offsets_[v];
  }
  graph.num_plus_edges_ = (entries.size() - n) / 2;
  return graph;
}

std::size_t SignedGraph::MaxDegree() const {
  std::size_t best = 0;
  for (VertexId v = 0; v < num_vertices(); ++v) {
    best = std::max(best, Degree(v));
  }
  return best;
}

std::vector<Edge> SignedGraph::Edges() const {
  std::vector<Edge> out;
  out.reserve(num_plus_edges_);
  ForEachEdge([&](VertexId u, VertexId v, std::uint64_t) {
    out.push_back({u, v});
  });
  return out;
}

bool SignedGraph::HasEdge(VertexId u, VertexId v) const {
  auto nbrs = Neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::size_t SortedIntersectionSize(std::span<const VertexId> a,
                                   std::span<const VertexId> b) {
  std::size_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

std::size_t SortedSymDiffSize(std::span<const VertexId> a,
                              std::span<const VertexId> b) {
  return a.size() + b.size() - 2 * SortedIntersectionSize(a, b);
}

std::size_t IntersectionSize(const SignedGraph& graph, VertexId u,
                             VertexId v) {
  if (u == v) return graph.Degree(u);
  return SortedIntersectionSize(graph.Neighbors(u), graph.Neighbors(v));
}

std::size_t SymDiffSize(const SignedGraph& graph, VertexId u, VertexId v) {
  if (u == v) return 0;
  return SortedSymDiffSize(graph.Neighbors(u), graph.Neighbors(v));
}

std::size_t InducedDegree(const SignedGraph& graph, VertexId v,
                          std::span<const VertexId> sorted_set) {
  return SortedIntersectionSize(graph.Neighbors(v), sorted_set);
}

SignedGraph InducedSubgraph(const SignedGraph& graph,
                            std::span<const VertexId> vertices) {
  std::vector<std::pair<VertexId, VertexId>> order;
  order.reserve(vertices.size());
  for (VertexId i = 0; i < vertices.size(); ++i) {
    order.emplace_back(vertices[i], i);
  }
  std::sort(order.begin(), order.end());

  std::vector<Edge> edges;
  for (VertexId i = 0; i < vertices.size(); ++i) {
    for (VertexId w : graph.Neighbors(vertices[i])) {
      auto it = std::lower_bound(order.begin(), order.end(),
                                 std::make_pair(w, VertexId{0}));
      if (it != order.end() && it->first == w && it->second > i) {
        edges.push_back({i, it->second});
      }
    }
  }
  // Endpoints are in range by construction.
  return *SignedGraph::Build(vertices.size(), edges);
}

}  // namespace agreeclust
