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

// Edge-list text format: one edge per line as two whitespace-separated
// non-negative integers. Blank lines and lines starting with '#' are skipped.
// Parallel edges and self-loops are accepted.

#ifndef AGREECLUST_EDGE_LIST_H_
#define AGREECLUST_EDGE_LIST_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/functional/function_ref.h"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "agreeclust/graph.h"

namespace agreeclust {

using ExternalId = std::uint64_t;

struct RawEdge {
  ExternalId u = 0;
  ExternalId v = 0;
};

// Parses one line. Returns nullopt for blank and comment lines.
absl::StatusOr<std::optional<RawEdge>> ParseEdgeLine(std::string_view line);

// Calls fn for every edge in the stream. Errors carry the 1-based line number.
absl::Status ForEachRawEdge(std::istream& in,
                            absl::FunctionRef<void(const RawEdge&)> fn);

// Maps sparse external ids onto dense [0, n) in increasing external order.
class VertexIndex {
 public:
  VertexIndex() = default;
  explicit VertexIndex(std::vector<ExternalId> sorted_unique_ids)
      : ids_(std::move(sorted_unique_ids)) {}

  std::size_t size() const { return ids_.size(); }
  ExternalId external(VertexId v) const { return ids_[v]; }
  std::optional<VertexId> Find(ExternalId id) const;
  const std::vector<ExternalId>& ids() const { return ids_; }

  // Identity mapping over [0, n).
  static VertexIndex Identity(std::size_t n);

 private:
  std::vector<ExternalId> ids_;
};

struct LoadedGraph {
  SignedGraph graph;
  VertexIndex index;
};

absl::StatusOr<LoadedGraph> ReadEdgeList(std::istream& in);
absl::StatusOr<LoadedGraph> ReadEdgeListFile(const std::string& path);

// Writes the non-loop edges in edge-id order using external ids.
void WriteEdgeList(const SignedGraph& graph, const VertexIndex& index,
                   std::ostream& out);

}  // namespace agreeclust

#endif  // AGREECLUST_EDGE_LIST_H_
