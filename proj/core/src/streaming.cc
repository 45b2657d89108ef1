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

#include "agreeclust/streaming.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <tuple>
#include <utility>

#include "absl/strings/str_cat.h"
#include "agreeclust/agreement.h"
#include "agreeclust/components.h"
#include "agreeclust/hash.h"
#include "agreeclust/sketch.h"

namespace agreeclust {

VectorEdgeStream::VectorEdgeStream(std::size_t n, std::vector<Edge> edges,
                                   std::optional<std::uint64_t> shuffle_seed)
    : n_(n), edges_(std::move(edges)), shuffle_seed_(shuffle_seed) {}

VectorEdgeStream VectorEdgeStream::FromGraph(
    const SignedGraph& graph, std::optional<std::uint64_t> shuffle_seed) {
  return VectorEdgeStream(graph.num_vertices(), graph.Edges(), shuffle_seed);
}

absl::Status VectorEdgeStream::ForEachEdge(
    int pass, absl::FunctionRef<void(VertexId, VertexId)> fn) {
  if (!shuffle_seed_.has_value()) {
    for (const Edge& e : edges_) fn(e.u, e.v);
    return absl::OkStatus();
  }
  std::vector<std::size_t> order(edges_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  HashStream rng(*shuffle_seed_, static_cast<std::uint64_t>(pass));
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[rng.NextBelow(i)]);
  }
  for (std::size_t i : order) {
    const Edge& e = edges_[i];
    if (rng.Next() & 1) {
      fn(e.v, e.u);
    } else {
      fn(e.u, e.v);
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<FileEdgeStream> FileEdgeStream::Open(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));

  // (min id, max id, ordinal) per record; provider memory only.
  struct Record {
    ExternalId lo;
    ExternalId hi;
    std::uint64_t ordinal;
  };
  std::vector<Record> records;
  absl::Status status = ForEachRawEdge(in, [&](const RawEdge& e) {
    records.push_back({std::min(e.u, e.v), std::max(e.u, e.v),
                       static_cast<std::uint64_t>(records.size())});
  });
  if (!status.ok()) {
    return absl::Status(status.code(),
                        absl::StrCat(path, ": ", status.message()));
  }

  std::vector<ExternalId> ids;
  ids.reserve(2 * records.size());
  for (const Record& r : records) {
    ids.push_back(r.lo);
    ids.push_back(r.hi);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.size() > std::numeric_limits<VertexId>::max()) {
    return absl::OutOfRangeError("too many distinct vertices");
  }

  std::sort(records.begin(), records.end(), [](const Record& x,
                                               const Record& y) {
    return std::tie(x.lo, x.hi, x.ordinal) < std::tie(y.lo, y.hi, y.ordinal);
  });
  std::vector<std::uint64_t> skipped;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const bool repeat = i > 0 && records[i].lo == records[i - 1].lo &&
                        records[i].hi == records[i - 1].hi;
    if (repeat || records[i].lo == records[i].hi) {
      skipped.push_back(records[i].ordinal);
    }
  }
  std::sort(skipped.begin(), skipped.end());
  return FileEdgeStream(path, VertexIndex(std::move(ids)), std::move(skipped));
}

absl::Status FileEdgeStream::ForEachEdge(
    int /*pass*/, absl::FunctionRef<void(VertexId, VertexId)> fn) {
  std::ifstream in(path_);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot reopen ", path_));
  std::uint64_t ordinal = 0;
  auto next_skip = skipped_.begin();
  bool unknown_id = false;
  absl::Status status = ForEachRawEdge(in, [&](const RawEdge& e) {
    const std::uint64_t current = ordinal++;
    if (next_skip != skipped_.end() && *next_skip == current) {
      ++next_skip;
      return;
    }
    const std::optional<VertexId> u = index_.Find(e.u);
    const std::optional<VertexId> v = index_.Find(e.v);
    if (!u.has_value() || !v.has_value()) {
      unknown_id = true;
      return;
    }
    fn(*u, *v);
  });
  if (!status.ok()) return status;
  if (unknown_id) {
    return absl::DataLossError(
        absl::StrCat(path_, " changed between passes"));
  }
  return absl::OkStatus();
}

double StreamingMemoryConstant(const Params& params) {
  return 6.0 + 2.0 * params.sketch_cap_factor * params.a;
}

std::uint64_t StreamingMemoryBudget(std::size_t n, const Params& params) {
  const double log_n =
      std::log(static_cast<double>(std::max<std::size_t>(n, 1)));
  return static_cast<std::uint64_t>(StreamingMemoryConstant(params) *
                                    static_cast<double>(n) * log_n * log_n /
                                    params.beta);
}

namespace {

class StreamRun {
 public:
  StreamRun(EdgeStreamProvider& provider, const Params& params,
            OracleMode mode)
      : provider_(provider),
        params_(params),
        exact_(mode == OracleMode::kExact),
        n_(provider.num_vertices()) {}

  absl::StatusOr<StreamingResult> Run(const StreamingOptions& options);

 private:
  absl::Status Pass(absl::FunctionRef<void(VertexId, VertexId)> fn) {
    absl::Status s = provider_.ForEachEdge(passes_++, fn);
    if (!s.ok()) {
      return absl::Status(s.code(), absl::StrCat("pass ", passes_ - 1, ": ",
                                                 s.message()));
    }
    RecordResident();
    return absl::OkStatus();
  }

  bool InRange(VertexId u, VertexId v) {
    if (u < n_ && v < n_) return true;
    if (range_error_.ok()) {
      range_error_ = absl::InvalidArgumentError(absl::StrCat(
          "streamed edge (", u, ", ", v, ") references a vertex outside [0, ",
          n_, ")"));
    }
    return false;
  }

  void RecordResident() {
    std::uint64_t words = 6 * static_cast<std::uint64_t>(n_);
    for (const auto& c : candidates_) words += c.size();
    for (const auto& s : sketches_) words += s.words();
    peak_ = std::max(peak_, words);
  }

  // The agreement decision for an edge, from resident state only.
  bool Agree(VertexId u, VertexId v) {
    const SampleSketch& su = sketches_[u];
    const SampleSketch& sv = sketches_[v];
    if (exact_) {
      return BelowAgreementThreshold(
          SortedSymDiffSize(su.samples_at_level, sv.samples_at_level),
          std::max(su.degree, sv.degree), 1, params_.beta);
    }
    absl::StatusOr<Verdict> verdict = AgreementSampled(su, sv, params_, n_);
    if (!verdict.ok()) {
      if (decision_error_.ok()) decision_error_ = verdict.status();
      return false;
    }
    return *verdict == Verdict::kYes;
  }

  EdgeStreamProvider& provider_;
  const Params& params_;
  const bool exact_;
  const std::size_t n_;
  int passes_ = 0;
  std::uint64_t peak_ = 0;
  absl::Status range_error_;
  absl::Status decision_error_;

  std::vector<std::uint64_t> degree_;
  std::vector<std::vector<VertexId>> candidates_;
  std::vector<SampleSketch> sketches_;
  std::vector<std::uint64_t> removed_;
  std::vector<bool> light_;
};

absl::StatusOr<StreamingResult> StreamRun::Run(
    const StreamingOptions& options) {
  // P0: degrees, self-loop included.
  degree_.assign(n_, 1);
  if (absl::Status s = Pass([&](VertexId u, VertexId v) {
        if (u == v || !InRange(u, v)) return;
        ++degree_[u];
        ++degree_[v];
      });
      !s.ok()) {
    return s;
  }
  if (!range_error_.ok()) return range_error_;

  // P1: keep only neighbors that some coin selects.
  candidates_.assign(n_, {});
  for (VertexId v = 0; v < n_; ++v) candidates_[v].push_back(v);
  if (absl::Status s = Pass([&](VertexId u, VertexId v) {
        if (u == v || !InRange(u, v)) return;
        if (SampledForDegree(v, degree_[u], n_, params_, exact_)) {
          candidates_[u].push_back(v);
        }
        if (SampledForDegree(u, degree_[v], n_, params_, exact_)) {
          candidates_[v].push_back(u);
        }
      });
      !s.ok()) {
    return s;
  }
  sketches_.reserve(n_);
  for (VertexId v = 0; v < n_; ++v) {
    absl::StatusOr<SampleSketch> sketch = BuildSketchFromCandidates(
        v, degree_[v], candidates_[v], n_, params_, exact_);
    if (!sketch.ok()) return sketch.status();
    sketches_.push_back(*std::move(sketch));
    std::vector<VertexId>().swap(candidates_[v]);
  }
  candidates_.clear();

  // P2: removed counts, then lightness against the original degree.
  removed_.assign(n_, 0);
  if (absl::Status s = Pass([&](VertexId u, VertexId v) {
        if (u == v || !InRange(u, v)) return;
        if (!Agree(u, v)) {
          ++removed_[u];
          ++removed_[v];
        }
      });
      !s.ok()) {
    return s;
  }
  if (!decision_error_.ok()) return decision_error_;
  light_.assign(n_, false);
  for (VertexId v = 0; v < n_; ++v) {
    light_[v] = static_cast<double>(removed_[v]) >
                params_.lambda * static_cast<double>(degree_[v]);
  }

  // P3-P6: double-buffered max-label rounds.
  std::vector<VertexId> labels(n_);
  std::iota(labels.begin(), labels.end(), VertexId{0});
  for (int round = 0; round < kLabelPropagationRounds; ++round) {
    std::vector<VertexId> next = labels;
    if (absl::Status s = Pass([&](VertexId u, VertexId v) {
          if (u == v || !InRange(u, v)) return;
          if (light_[u] && light_[v]) return;
          if (!Agree(u, v)) return;
          next[u] = std::max(next[u], labels[v]);
          next[v] = std::max(next[v], labels[u]);
        });
        !s.ok()) {
      return s;
    }
    labels = std::move(next);
  }
  if (!decision_error_.ok()) return decision_error_;

  StreamingResult result;
  result.clustering = Clustering(
      std::vector<ClusterId>(labels.begin(), labels.end()));
  result.passes = passes_;
  result.peak_resident_words = peak_;
  result.budget_words = StreamingMemoryBudget(n_, params_);
  if (options.enforce_memory_budget && !exact_ &&
      result.peak_resident_words > result.budget_words) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "streaming state peaked at ", result.peak_resident_words,
        " words, above the budget of ", result.budget_words));
  }
  return result;
}

}  // namespace

absl::StatusOr<StreamingResult> RunStreamingPipeline(
    EdgeStreamProvider& provider, const Params& params, OracleMode mode,
    const StreamingOptions& options) {
  if (absl::Status s = ValidateParams(params); !s.ok()) return s;
  StreamRun run(provider, params, mode);
  return run.Run(options);
}

}  // namespace agreeclust
