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

#include "agreeclust/agreement.h"

#include <algorithm>

#include "absl/strings/str_cat.h"

namespace agreeclust {

absl::Status ValidateParams(const Params& params) {
  if (!(params.beta > 0.0 && params.beta < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("beta must lie in (0, 1), got ", params.beta));
  }
  if (!(params.lambda > 0.0 && params.lambda < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("lambda must lie in (0, 1), got ", params.lambda));
  }
  if (!(params.a > 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("sampling constant a must be positive, got ", params.a));
  }
  if (!(params.sketch_cap_factor > 0.0)) {
    return absl::InvalidArgumentError("sketch_cap_factor must be positive");
  }
  return absl::OkStatus();
}

bool AnalysisValid(const Params& p) {
  return p.beta < 1.0 / 20.0 && 5.0 * p.beta + 2.0 * p.lambda < 1.0 &&
         8.0 * p.beta + p.lambda <= 0.25;
}

double ApproximationBound(const Params& p) {
  return 2.0 + 3.0 / p.beta + 1.0 / p.lambda + 1.0 / (p.beta * p.lambda);
}

bool InWeakAgreementExact(const SignedGraph& graph, VertexId u, VertexId v,
                          int i, double beta) {
  const std::size_t max_degree = std::max(graph.Degree(u), graph.Degree(v));
  return BelowAgreementThreshold(SymDiffSize(graph, u, v), max_degree, i,
                                 beta);
}

bool DegreeCompatible(std::size_t du, std::size_t dv, double beta) {
  const auto lo = static_cast<double>(std::min(du, dv));
  const auto hi = static_cast<double>(std::max(du, dv));
  return lo >= (1.0 - beta) * hi;
}

SparsifiedGraph Sparsify(const SignedGraph& graph, const Params& params,
                         AgreementOracle oracle) {
  const std::size_t n = graph.num_vertices();
  SparsifiedGraph out;
  out.base = &graph;
  out.agreed.assign(graph.num_plus_edges(), false);
  out.removed_step1.assign(n, 0);

  // Phase 1: decide every edge against the untouched graph, then remove.
  graph.ForEachEdge([&](VertexId u, VertexId v, std::uint64_t id) {
    const bool agree = oracle(u, v);
    out.agreed[id] = agree;
    if (!agree) {
      ++out.removed_step1[u];
      ++out.removed_step1[v];
    }
  });

  // Phase 2.
  out.lightness.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    const bool light = static_cast<double>(out.removed_step1[v]) >
                       params.lambda * static_cast<double>(graph.Degree(v));
    out.lightness[v] = light ? Lightness::kLight : Lightness::kHeavy;
  }

  // Phase 3.
  out.kept.assign(graph.num_plus_edges(), false);
  std::vector<Edge> kept_edges;
  graph.ForEachEdge([&](VertexId u, VertexId v, std::uint64_t id) {
    if (out.agreed[id] && !(out.IsLight(u) && out.IsLight(v))) {
      out.kept[id] = true;
      kept_edges.push_back({u, v});
    }
  });
  out.reduced = *SignedGraph::Build(n, kept_edges);
  return out;
}

SparsifiedGraph SparsifyExact(const SignedGraph& graph, const Params& params) {
  return Sparsify(graph, params, [&](VertexId u, VertexId v) {
    return InAgreementExact(graph, u, v, params.beta);
  });
}

}  // namespace agreeclust
