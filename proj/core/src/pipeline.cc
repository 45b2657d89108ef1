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

#include "agreeclust/pipeline.h"

#include "agreeclust/components.h"
#include "agreeclust/sketch.h"

namespace agreeclust {

std::string_view OracleModeName(OracleMode mode) {
  return mode == OracleMode::kExact ? "exact" : "sketch";
}

absl::StatusOr<InMemoryResult> RunInMemory(const SignedGraph& graph,
                                           const Params& params,
                                           OracleMode mode,
                                           ComponentMethod method) {
  if (absl::Status s = ValidateParams(params); !s.ok()) return s;

  InMemoryResult result;
  if (mode == OracleMode::kExact) {
    result.sparsified = SparsifyExact(graph, params);
  } else {
    absl::StatusOr<std::vector<SampleSketch>> sketches =
        BuildSketches(graph, params);
    if (!sketches.ok()) return sketches.status();
    absl::Status failure;
    result.sparsified = Sparsify(graph, params, [&](VertexId u, VertexId v) {
      absl::StatusOr<Verdict> verdict = AgreementSampled(
          (*sketches)[u], (*sketches)[v], params, graph.num_vertices());
      if (!verdict.ok()) {
        if (failure.ok()) failure = verdict.status();
        return false;
      }
      return *verdict == Verdict::kYes;
    });
    if (!failure.ok()) return failure;
  }

  result.clustering = method == ComponentMethod::kUnionFind
                          ? UnionFindComponents(result.sparsified)
                          : LabelPropagation4(result.sparsified);
  return result;
}

}  // namespace agreeclust
