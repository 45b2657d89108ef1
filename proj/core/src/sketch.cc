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

#include "agreeclust/sketch.h"

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "agreeclust/agreement.h"
#include "agreeclust/hash.h"

namespace agreeclust {
namespace {

constexpr std::uint64_t kCoinDomain = 0x636f696e'73616d70ULL;

double LevelRatio(double beta) { return 1.0 / (1.0 - beta); }

}  // namespace

Level LevelFromExponent(int exponent, double beta) {
  return {exponent, std::pow(LevelRatio(beta), exponent)};
}

Level LevelIndex(std::size_t degree, double beta) {
  const double d = static_cast<double>(std::max<std::size_t>(degree, 1));
  const double ratio = LevelRatio(beta);
  int k = static_cast<int>(std::floor(std::log(d) / std::log(ratio)));
  k = std::max(k, 0);
  // Correct the logarithm estimate against the same pow() used for values.
  while (std::pow(ratio, k + 1) <= d) ++k;
  while (k > 0 && std::pow(ratio, k) > d) --k;
  return LevelFromExponent(k, beta);
}

double SamplingProbability(std::size_t n, const Params& params,
                           const Level& level) {
  const double log_n =
      std::log(static_cast<double>(std::max<std::size_t>(n, 1)));
  return std::min(params.a * log_n / (params.beta * level.value), 1.0);
}

bool SampleMember(std::uint64_t seed, VertexId w, int exponent, double p) {
  if (p >= 1.0) return true;
  if (p <= 0.0) return false;
  const std::uint64_t h =
      Hash3(seed ^ kCoinDomain, w, static_cast<std::uint64_t>(exponent));
  return ToUnitInterval(h) < p;
}

double SketchSizeCap(std::size_t n, const Params& params) {
  const double log_n =
      std::log(static_cast<double>(std::max<std::size_t>(n, 1)));
  return params.sketch_cap_factor * params.a * log_n / params.beta;
}

absl::StatusOr<SampleSketch> BuildSketchFromCandidates(
    VertexId owner, std::size_t degree, std::span<const VertexId> candidates,
    std::size_t n, const Params& params, bool force_exact) {
  SampleSketch sketch;
  sketch.owner = owner;
  sketch.degree = degree;
  sketch.level = LevelIndex(sketch.degree, params.beta);
  const Level next = LevelFromExponent(sketch.level.exponent + 1, params.beta);
  sketch.p_level =
      force_exact ? 1.0 : SamplingProbability(n, params, sketch.level);
  sketch.p_next = force_exact ? 1.0 : SamplingProbability(n, params, next);

  for (VertexId w : candidates) {
    if (SampleMember(params.seed, w, sketch.level.exponent, sketch.p_level)) {
      sketch.samples_at_level.push_back(w);
    }
    if (SampleMember(params.seed, w, next.exponent, sketch.p_next)) {
      sketch.samples_at_next.push_back(w);
    }
  }
  for (auto* set : {&sketch.samples_at_level, &sketch.samples_at_next}) {
    if (!std::is_sorted(set->begin(), set->end())) {
      std::sort(set->begin(), set->end());
    }
    set->erase(std::unique(set->begin(), set->end()), set->end());
  }

  if (!force_exact) {
    const double cap = SketchSizeCap(n, params);
    const std::size_t largest =
        std::max(sketch.samples_at_level.size(), sketch.samples_at_next.size());
    if (static_cast<double>(largest) > cap) {
      return absl::ResourceExhaustedError(absl::StrCat(
          "sketch of vertex ", owner, " holds ", largest,
          " samples, above the cap of ", cap, " (statistical anomaly)"));
    }
  }
  return sketch;
}

absl::StatusOr<SampleSketch> BuildSketch(VertexId owner,
                                         std::span<const VertexId> neighbors,
                                         std::size_t n, const Params& params,
                                         bool force_exact) {
  return BuildSketchFromCandidates(owner, neighbors.size(), neighbors, n,
                                   params, force_exact);
}

bool SampledForDegree(VertexId w, std::size_t degree, std::size_t n,
                      const Params& params, bool force_exact) {
  if (force_exact) return true;
  const Level level = LevelIndex(degree, params.beta);
  const Level next = LevelFromExponent(level.exponent + 1, params.beta);
  return SampleMember(params.seed, w, level.exponent,
                      SamplingProbability(n, params, level)) ||
         SampleMember(params.seed, w, next.exponent,
                      SamplingProbability(n, params, next));
}

absl::StatusOr<std::vector<SampleSketch>> BuildSketches(
    const SignedGraph& graph, const Params& params, bool force_exact) {
  std::vector<SampleSketch> sketches;
  sketches.reserve(graph.num_vertices());
  for (VertexId v = 0; v < graph.num_vertices(); ++v) {
    absl::StatusOr<SampleSketch> sketch = BuildSketch(
        v, graph.Neighbors(v), graph.num_vertices(), params, force_exact);
    if (!sketch.ok()) return sketch.status();
    sketches.push_back(*std::move(sketch));
  }
  return sketches;
}

absl::StatusOr<SampledDecision> DecideSampled(const SampleSketch& u,
                                              const SampleSketch& v,
                                              const Params& params,
                                              std::size_t n) {
  SampledDecision decision;
  if (!DegreeCompatible(u.degree, v.degree, params.beta)) {
    decision.degree_filtered = true;
    return decision;
  }

  // Prefer the larger shared exponent.
  const int ku = u.level.exponent;
  const int kv = v.level.exponent;
  int common = -1;
  for (int k : {ku + 1, ku}) {
    if (k == kv || k == kv + 1) {
      common = k;
      break;
    }
  }
  if (common < 0) {
    return absl::InternalError(absl::StrCat(
        "no common level between vertex ", u.owner, " (k=", ku,
        ") and vertex ", v.owner, " (k=", kv, ")"));
  }
  const auto& su = common == ku ? u.samples_at_level : u.samples_at_next;
  const auto& sv = common == kv ? v.samples_at_level : v.samples_at_next;
  const double pu = common == ku ? u.p_level : u.p_next;
  const double pv = common == kv ? v.p_level : v.p_next;

  const std::size_t max_degree = std::max(u.degree, v.degree);
  decision.common_exponent = common;
  decision.statistic = SortedSymDiffSize(su, sv);
  decision.exact_regime = pu >= 1.0 && pv >= 1.0;

  bool yes = false;
  if (decision.exact_regime && !params.exact_regime_uses_tau) {
    decision.threshold = params.beta * static_cast<double>(max_degree);
    yes = BelowAgreementThreshold(decision.statistic, max_degree, 1,
                                  params.beta);
  } else {
    const Level level = LevelFromExponent(common, params.beta);
    const double log_n =
        std::log(static_cast<double>(std::max<std::size_t>(n, 1)));
    const double tau =
        params.a * log_n / level.value * static_cast<double>(max_degree);
    decision.threshold = 0.9 * tau;
    yes = static_cast<double>(decision.statistic) <= decision.threshold;
  }
  decision.verdict = yes ? Verdict::kYes : Verdict::kNo;
  return decision;
}

absl::StatusOr<Verdict> AgreementSampled(const SampleSketch& u,
                                         const SampleSketch& v,
                                         const Params& params, std::size_t n) {
  absl::StatusOr<SampledDecision> decision = DecideSampled(u, v, params, n);
  if (!decision.ok()) return decision.status();
  return decision->verdict;
}

}  // namespace agreeclust
