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

#ifndef AGREECLUST_PIPELINE_H_
#define AGREECLUST_PIPELINE_H_

#include <string_view>

#include "absl/status/statusor.h"
#include "agreeclust/agreement.h"
#include "agreeclust/clustering.h"
#include "agreeclust/graph.h"
#include "agreeclust/params.h"

namespace agreeclust {

enum class OracleMode { kExact, kSketch };
enum class ComponentMethod { kUnionFind, kLabelPropagation };

std::string_view OracleModeName(OracleMode mode);

struct InMemoryResult {
  Clustering clustering;
  SparsifiedGraph sparsified;
};

// Sparsify with the chosen agreement oracle, then take connected components.
// The result refers to `graph`, which must outlive it.
absl::StatusOr<InMemoryResult> RunInMemory(
    const SignedGraph& graph, const Params& params, OracleMode mode,
    ComponentMethod method = ComponentMethod::kUnionFind);

}  // namespace agreeclust

#endif  // AGREECLUST_PIPELINE_H_
