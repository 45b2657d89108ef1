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

// Multi-pass semi-streaming driver. Working memory is O(n) words plus the
// sketches; the edge set is never stored.
//
// Pass schedule (kStreamingPasses = 7):
//
//   P0     degrees
//   P1     sample collection; coins are pure functions of the seed
//   P2     agreement per edge, removed counts, then lightness
//   P3-P6  one synchronous max-label round each, with the membership of an
//          edge in the sparsified graph recomputed from the resident sketches
//          and lightness as the edge arrives
//
// Every pass computes an order-independent aggregate, so the result does not
// depend on the order in which a pass presents the edges.

#ifndef AGREECLUST_STREAMING_H_
#define AGREECLUST_STREAMING_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/functional/function_ref.h"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "agreeclust/clustering.h"
#include "agreeclust/edge_list.h"
#include "agreeclust/graph.h"
#include "agreeclust/params.h"
#include "agreeclust/pipeline.h"

namespace agreeclust {

inline constexpr int kStreamingPasses = 7;

// A restartable edge stream over vertices [0, num_vertices()). Every pass
// yields the same set of edges; the order may change from pass to pass.
// Memory held by a provider is not charged to the algorithm.
class EdgeStreamProvider {
 public:
  virtual ~EdgeStreamProvider() = default;

  virtual std::size_t num_vertices() const = 0;

  // Streams every edge once. `pass` is the 0-based pass number.
  virtual absl::Status ForEachEdge(
      int pass, absl::FunctionRef<void(VertexId, VertexId)> fn) = 0;
};

// Streams an in-memory list of distinct edges. With a shuffle seed, pass p
// presents a seeded random permutation (and random endpoint orientation)
// that differs between passes.
class VectorEdgeStream : public EdgeStreamProvider {
 public:
  VectorEdgeStream(std::size_t n, std::vector<Edge> edges,
                   std::optional<std::uint64_t> shuffle_seed = std::nullopt);

  static VectorEdgeStream FromGraph(
      const SignedGraph& graph,
      std::optional<std::uint64_t> shuffle_seed = std::nullopt);

  std::size_t num_vertices() const override { return n_; }
  absl::Status ForEachEdge(
      int pass, absl::FunctionRef<void(VertexId, VertexId)> fn) override;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::optional<std::uint64_t> shuffle_seed_;
};

// Streams an edge-list file from disk on every pass. Opening performs one
// indexing scan that maps external ids to [0, n) and notes the positions of
// repeated edges and self pairs, which later passes skip; the result matches
// ReadEdgeListFile.
class FileEdgeStream : public EdgeStreamProvider {
 public:
  static absl::StatusOr<FileEdgeStream> Open(const std::string& path);

  std::size_t num_vertices() const override { return index_.size(); }
  const VertexIndex& index() const { return index_; }

  absl::Status ForEachEdge(
      int pass, absl::FunctionRef<void(VertexId, VertexId)> fn) override;

 private:
  FileEdgeStream(std::string path, VertexIndex index,
                 std::vector<std::uint64_t> skipped)
      : path_(std::move(path)),
        index_(std::move(index)),
        skipped_(std::move(skipped)) {}

  std::string path_;
  VertexIndex index_;
  // Sorted ordinals of edge records that are not streamed.
  std::vector<std::uint64_t> skipped_;
};

struct StreamingOptions {
  // Fail with ResourceExhausted when the peak resident memory exceeds
  // StreamingMemoryBudget. Only meaningful in sketch mode.
  bool enforce_memory_budget = false;
};

struct StreamingResult {
  Clustering clustering;
  int passes = 0;
  std::uint64_t peak_resident_words = 0;
  std::uint64_t budget_words = 0;
};

// C * n * (ln n)^2 / beta words with C = 6 + 2 * sketch_cap_factor * a.
//
// Resident state is six words per vertex (degree, removed count, lightness,
// two label buffers, sketch level) plus the sketches, each at most
// 2 * sketch_cap_factor * a ln n / beta words. For n >= 3, ln n >= 1 and
// beta < 1, so the total is below the budget. Exact mode stores whole
// neighborhoods and is not covered.
double StreamingMemoryConstant(const Params& params);
std::uint64_t StreamingMemoryBudget(std::size_t n, const Params& params);

absl::StatusOr<StreamingResult> RunStreamingPipeline(
    EdgeStreamProvider& provider, const Params& params, OracleMode mode,
    const StreamingOptions& options = {});

}  // namespace agreeclust

#endif  // AGREECLUST_STREAMING_H_
