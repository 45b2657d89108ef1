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

// Neighborhood agreement and the sparsification step of the clustering.
//
// Two vertices are in i-weak agreement when
//
//     |N(u) △ N(v)| < i * beta * max(d(u), d(v))
//
// (strict). Sparsification then runs three phases over the original graph:
//
//   1. Every non-loop edge is tested once; edges whose endpoints are not in
//      agreement are collected and removed together, so the outcome does not
//      depend on iteration order.
//   2. A vertex is Light iff it lost more than lambda * d(v) edges in phase 1,
//      with d(v) the original degree (self-loop included). Otherwise Heavy.
//   3. Edges with two Light endpoints are removed.
//
// The surviving graph is the sparsified graph; its connected components are
// the clusters.

#ifndef AGREECLUST_AGREEMENT_H_
#define AGREECLUST_AGREEMENT_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "absl/functional/function_ref.h"
#include "agreeclust/graph.h"
#include "agreeclust/params.h"

namespace agreeclust {

// sym_diff < i * beta * max_degree, evaluated identically everywhere a
// agreement threshold is applied.
inline bool BelowAgreementThreshold(std::size_t sym_diff,
                                    std::size_t max_degree, int i,
                                    double beta) {
  return static_cast<double>(sym_diff) <
         static_cast<double>(i) * beta * static_cast<double>(max_degree);
}

bool InWeakAgreementExact(const SignedGraph& graph, VertexId u, VertexId v,
                          int i, double beta);

inline bool InAgreementExact(const SignedGraph& graph, VertexId u,
                             VertexId v, double beta) {
  return InWeakAgreementExact(graph, u, v, 1, beta);
}

// min(du, dv) >= (1 - beta) * max(du, dv). A false result certifies that the
// endpoints are not in agreement.
bool DegreeCompatible(std::size_t du, std::size_t dv, double beta);

// Symmetric, deterministic agreement decision for an edge (u, v).
using AgreementOracle = absl::FunctionRef<bool(VertexId, VertexId)>;

enum class Lightness : std::uint8_t { kHeavy, kLight };

// The sparsified graph together with the bookkeeping that produced it.
// `base` must outlive this object.
struct SparsifiedGraph {
  const SignedGraph* base = nullptr;
  // Indexed by edge id of `base` (see SignedGraph::Edges()).
  std::vector<bool> kept;
  std::vector<bool> agreed;
  std::vector<Lightness> lightness;
  std::vector<std::uint32_t> removed_step1;
  // Kept edges plus all self-loops, on the same vertex set as `base`.
  SignedGraph reduced;

  bool IsLight(VertexId v) const { return lightness[v] == Lightness::kLight; }
  std::uint64_t num_kept() const { return reduced.num_plus_edges(); }
};

SparsifiedGraph Sparsify(const SignedGraph& graph, const Params& params,
                         AgreementOracle oracle);

// Sparsify with the exact agreement predicate.
SparsifiedGraph SparsifyExact(const SignedGraph& graph, const Params& params);

}  // namespace agreeclust

#endif  // AGREECLUST_AGREEMENT_H_
