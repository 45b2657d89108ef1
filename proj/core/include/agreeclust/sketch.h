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

// Sampled agreement test.
//
// Degree levels are the powers j = r^k of r = 1/(1 - beta). A vertex of degree
// d sits at the largest level j_v <= d. For every level k there is one global
// sample set S(k): vertex w belongs to it iff a coin seeded by (seed, w, k)
// with success probability p_k = min(a ln n / (beta j_k), 1) lands heads. All
// vertices see the same coins, so S(v, k) = S(k) ∩ N(v) are directly
// comparable across vertices.
//
// Each vertex keeps S(v, k_v) and S(v, k_v + 1). Two vertices whose degrees
// are within a factor 1 - beta always share at least one of those levels; the
// decision compares X = |S(u, k) △ S(v, k)| against 0.9 * tau with
// tau = a ln n / j_k * max(d(u), d(v)).

#ifndef AGREECLUST_SKETCH_H_
#define AGREECLUST_SKETCH_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "agreeclust/graph.h"
#include "agreeclust/params.h"

namespace agreeclust {

// A degree level. `exponent` is the identity of the level; `value` is r^k and
// is only used for arithmetic.
struct Level {
  int exponent = 0;
  double value = 1.0;

  friend bool operator==(const Level&, const Level&) = default;
};

// The largest power of 1/(1 - beta) that is <= degree. Requires degree >= 1.
Level LevelIndex(std::size_t degree, double beta);

Level LevelFromExponent(int exponent, double beta);

// min(a ln n / (beta j), 1).
double SamplingProbability(std::size_t n, const Params& params,
                           const Level& level);

// The shared coin for (w, level exponent): a pure function of its arguments.
bool SampleMember(std::uint64_t seed, VertexId w, int exponent, double p);

struct SampleSketch {
  VertexId owner = 0;
  std::size_t degree = 0;
  Level level;
  // S(owner, k) and S(owner, k + 1), sorted.
  std::vector<VertexId> samples_at_level;
  std::vector<VertexId> samples_at_next;
  double p_level = 1.0;
  double p_next = 1.0;

  std::size_t words() const {
    return samples_at_level.size() + samples_at_next.size();
  }

  friend bool operator==(const SampleSketch&, const SampleSketch&) = default;
};

// Hard cap on the size of one sample set: sketch_cap_factor * a ln n / beta.
double SketchSizeCap(std::size_t n, const Params& params);

// Builds the sketch of one vertex from its closed neighborhood. With
// `force_exact` every coin succeeds and both sets equal the neighborhood.
// Fails with ResourceExhausted when a sampled set exceeds SketchSizeCap.
absl::StatusOr<SampleSketch> BuildSketch(VertexId owner,
                                         std::span<const VertexId> neighbors,
                                         std::size_t n, const Params& params,
                                         bool force_exact = false);

// Same, for callers that know d(owner) but only hold part of N(owner).
// `candidates` must contain every sampled neighbor at both levels; extra
// neighbors are filtered out by the coins. Order is irrelevant.
absl::StatusOr<SampleSketch> BuildSketchFromCandidates(
    VertexId owner, std::size_t degree, std::span<const VertexId> candidates,
    std::size_t n, const Params& params, bool force_exact = false);

// Whether w lands in either sample set of a vertex of the given degree.
bool SampledForDegree(VertexId w, std::size_t degree, std::size_t n,
                      const Params& params, bool force_exact = false);

absl::StatusOr<std::vector<SampleSketch>> BuildSketches(
    const SignedGraph& graph, const Params& params, bool force_exact = false);

enum class Verdict : std::uint8_t { kNo, kYes };

// Details of one sampled decision, for calibration and diagnostics.
struct SampledDecision {
  Verdict verdict = Verdict::kNo;
  bool degree_filtered = false;
  bool exact_regime = false;
  int common_exponent = 0;
  std::size_t statistic = 0;
  double threshold = 0.0;
};

absl::StatusOr<SampledDecision> DecideSampled(const SampleSketch& u,
                                              const SampleSketch& v,
                                              const Params& params,
                                              std::size_t n);

absl::StatusOr<Verdict> AgreementSampled(const SampleSketch& u,
                                         const SampleSketch& v,
                                         const Params& params, std::size_t n);

}  // namespace agreeclust

#endif  // AGREECLUST_SKETCH_H_
