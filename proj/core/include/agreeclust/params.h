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

#ifndef AGREECLUST_PARAMS_H_
#define AGREECLUST_PARAMS_H_

#include <cstdint>

#include "absl/status/status.h"

namespace agreeclust {

struct Params {
  // Agreement tolerance: u, v agree iff |N(u) △ N(v)| < beta * max degree.
  double beta = 0.05;
  // A vertex is light iff it lost more than lambda * d(v) edges to the
  // agreement filter.
  double lambda = 0.05;
  // Sampling constant for sketched agreement.
  double a = 600.0;
  std::uint64_t seed = 1;
  // Multiplier C of the per-vertex sketch size cap C * a * ln(n) / beta.
  double sketch_cap_factor = 4.0;
  // When the sampling probability is 1 the sketch statistic is exact. By
  // default it is then compared against beta * max degree; setting this
  // compares it against 0.9 * tau instead, as in the sampled branch.
  bool exact_regime_uses_tau = false;
};

// beta, lambda in (0, 1) and a > 0.
absl::Status ValidateParams(const Params& params);

// Preconditions under which the structural guarantees on the sparsified
// graph hold: beta < 1/20, 5 beta + 2 lambda < 1 and 8 beta + lambda <= 1/4.
bool AnalysisValid(const Params& params);

// Proven approximation factor 2 + 3/beta + 1/lambda + 1/(beta lambda).
double ApproximationBound(const Params& params);

}  // namespace agreeclust

#endif  // AGREECLUST_PARAMS_H_
