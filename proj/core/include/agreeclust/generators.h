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

// Deterministic instance generators. Every edge coin is a hash of
// (seed, u, v), so the same arguments give the same graph on every platform.

#ifndef AGREECLUST_GENERATORS_H_
#define AGREECLUST_GENERATORS_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "agreeclust/clustering.h"
#include "agreeclust/graph.h"

namespace agreeclust {

absl::StatusOr<SignedGraph> GenGnp(std::size_t n, double p, std::uint64_t seed);

// k blocks of `size` vertices; vertex v belongs to block v / size.
absl::StatusOr<SignedGraph> GenPlanted(std::size_t k, std::size_t size,
                                       double p_in, double p_out,
                                       std::uint64_t seed);

Clustering PlantedTruth(std::size_t k, std::size_t size);

// Two disjoint cliques A1, A2 of round((1 - beta) d) vertices each, with
// X1 ⊆ A1 and X2 ⊆ A2 of round(x_mult * beta * d) vertices fully joined to
// each other. A1 = [0, s), A2 = [s, 2s), X1 = [0, x), X2 = [s, s + x).
struct TightInstance {
  SignedGraph graph;
  std::size_t clique_size = 0;
  std::size_t cross_size = 0;

  // {A1, A2}: the optimal clustering of the construction.
  Clustering TwoCliquePartition() const;
};

absl::StatusOr<TightInstance> GenTightInstance(std::size_t d, double beta,
                                               double x_mult);

// Parses "gnp:n:p", "planted:k:size:pin:pout" or "tight:d:beta:xmult".
absl::StatusOr<SignedGraph> GenerateFromSpec(std::string_view spec,
                                             std::uint64_t seed);

}  // namespace agreeclust

#endif  // AGREECLUST_GENERATORS_H_
