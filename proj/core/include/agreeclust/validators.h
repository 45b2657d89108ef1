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

// Runtime checks of the structural guarantees on the sparsified graph. Each
// check returns witnesses for every failure it finds; an empty list means the
// property held. The guarantees are only promised when AnalysisValid(params).

#ifndef AGREECLUST_VALIDATORS_H_
#define AGREECLUST_VALIDATORS_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "agreeclust/agreement.h"
#include "agreeclust/clustering.h"
#include "agreeclust/graph.h"
#include "agreeclust/params.h"

namespace agreeclust {

struct Violation {
  std::string check;
  VertexId u = 0;
  VertexId v = 0;
  std::string detail;
};

// Heavy members of one component are within distance 2 in the sparsified
// graph.
std::vector<Violation> CheckHeavyPairsWithinTwo(const SparsifiedGraph& sg,
                                                const Clustering& components);

// Members of one component are within distance 2 in the original graph.
std::vector<Violation> CheckOriginalDistanceTwo(const SignedGraph& graph,
                                                const Clustering& components);

// Same-component pairs with at least one Heavy endpoint are in 4-weak
// agreement.
std::vector<Violation> CheckFourWeakAgreement(const SparsifiedGraph& sg,
                                              const Clustering& components,
                                              double beta);

// For every component CC with |CC| >= 2 and u in CC:
// d(u, CC) >= (1 - 8 beta - lambda) |CC|, degrees taken in the original graph.
std::vector<Violation> CheckInClusterDegree(const SignedGraph& graph,
                                            const Clustering& components,
                                            const Params& params);

// Component diameter in the sparsified graph is at most `bound`.
std::vector<Violation> CheckDiameter(const SparsifiedGraph& sg,
                                     const Clustering& components,
                                     int bound = 4);

struct WeakAgreementBoundsOptions {
  int max_i = 5;
  // Test every vertex pair up to this many vertices; beyond it only edges.
  std::size_t all_pairs_limit = 400;
  // Upper bound on agreement chains enumerated exhaustively; past it chains
  // are sampled by random walks.
  std::size_t max_exhaustive_chains = 200000;
  std::size_t sampled_chains = 20000;
  std::uint64_t seed = 7;
};

struct WeakAgreementBoundsReport {
  std::size_t pairs_checked = 0;
  std::size_t weak_agreement_pairs = 0;
  std::size_t chains_checked = 0;
  std::vector<Violation> violations;
};

// Degree bounds and intersection bound for pairs in i-weak agreement
// (1 <= i <= max_i, i < 1/beta), and the chain property: v1..vk (k <= 5) with
// consecutive agreement implies v1, vk in k-weak agreement.
WeakAgreementBoundsReport CheckWeakAgreementBounds(
    const SignedGraph& graph, double beta,
    const WeakAgreementBoundsOptions& options = {});

// Runs every sparsified-graph check above.
struct StructuralReport {
  bool preconditions_met = false;
  std::vector<Violation> violations;
};

StructuralReport RunStructuralChecks(const SparsifiedGraph& sg,
                                     const Clustering& components,
                                     const Params& params);

}  // namespace agreeclust

#endif  // AGREECLUST_VALIDATORS_H_
