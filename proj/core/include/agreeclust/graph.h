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

#ifndef AGREECLUST_GRAPH_H_
#define AGREECLUST_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"

namespace agreeclust {

using VertexId = std::uint32_t;

// An undirected pair of vertex ids. Order is not significant.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// The "+" edge set of a complete signed graph. "-" edges are the implicit
// complement and are never stored.
//
// Every vertex carries a self-loop: v is always a member of Neighbors(v) and
// counts towards Degree(v). Adjacency lists are sorted, duplicate free and
// symmetric. The structure is immutable after construction and safe to read
// from multiple threads.
class SignedGraph {
 public:
  SignedGraph() = default;

  // Builds the graph on vertices [0, n). Duplicate pairs and self pairs in
  // `edges` are tolerated; a self-loop is added for every vertex regardless.
  // Returns InvalidArgument naming the first pair with an endpoint >= n.
  static absl::StatusOr<SignedGraph> Build(std::size_t n,
                                           std::span<const Edge> edges);

  std::size_t num_vertices() const { return offsets_.size() - 1; }

  // Number of "+" edges excluding self-loops.
  std::uint64_t num_plus_edges() const { return num_plus_edges_; }

  // Sorted closed neighborhood N(v), including v itself.
  std::span<const VertexId> Neighbors(VertexId v) const {
    return {neighbors_.data() + offsets_[v],
            neighbors_.data() + offsets_[v + 1]};
  }

  // d(v) = |N(v)|; always >= 1.
  std::size_t Degree(VertexId v) const {
    return offsets_[v + 1] - offsets_[v];
  }

  std::size_t MaxDegree() const;

  // Non-loop edges with u < v, in lexicographic order. The position of an
  // edge in this list is its edge id.
  std::vector<Edge> Edges() const;

  // Calls fn(u, v, edge_id) for every non-loop edge with u < v, in edge-id
  // order.
  template <typename Fn>
  void ForEachEdge(Fn&& fn) const {
    std::uint64_t id = 0;
    for (VertexId u = 0; u < num_vertices(); ++u) {
      for (VertexId v : Neighbors(u)) {
        if (v > u) fn(u, v, id++);
      }
    }
  }

  bool HasEdge(VertexId u, VertexId v) const;

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

 private:
  std::vector<std::uint64_t> offsets_ = {0};
  std::vector<VertexId> neighbors_;
  std::uint64_t num_plus_edges_ = 0;
};

// |N(u) ∩ N(v)| by sorted merge.
std::size_t IntersectionSize(const SignedGraph& graph, VertexId u, VertexId v);

// |N(u) △ N(v)| = d(u) + d(v) - 2|N(u) ∩ N(v)|.
std::size_t SymDiffSize(const SignedGraph& graph, VertexId u, VertexId v);

// Sorted-range kernels shared with the sketch code.
std::size_t SortedIntersectionSize(std::span<const VertexId> a,
                                   std::span<const VertexId> b);
std::size_t SortedSymDiffSize(std::span<const VertexId> a,
                              std::span<const VertexId> b);

// d(v, S) = |N(v) ∩ S| for a sorted, duplicate-free vertex set S. The
// self-loop counts iff v is in S.
std::size_t InducedDegree(const SignedGraph& graph, VertexId v,
                          std::span<const VertexId> sorted_set);

// The subgraph induced by `vertices` (any order, no duplicates), relabelled
// so that vertices[i] becomes vertex i.
SignedGraph InducedSubgraph(const SignedGraph& graph,
                            std::span<const VertexId> vertices);

}  // namespace agreeclust

#endif  // AGREECLUST_GRAPH_H_
