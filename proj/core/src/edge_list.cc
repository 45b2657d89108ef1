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

#include "agreeclust/edge_list.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <numeric>
#include <ostream>

#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"

namespace agreeclust {
namespace {

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\r'; }

absl::StatusOr<ExternalId> ParseId(absl::string_view& rest) {
  while (!rest.empty() && IsSpace(rest.front())) rest.remove_prefix(1);
  if (rest.empty()) {
    return absl::InvalidArgumentError("expected two vertex ids");
  }
  ExternalId value = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(),
                                   value);
  if (ec != std::errc() ||
      (ptr != rest.data() + rest.size() && !IsSpace(*ptr))) {
    return absl::InvalidArgumentError(
        absl::StrCat("not a non-negative integer: '",
                     rest.substr(0, rest.find_first_of(" \t\r")), "'"));
  }
  rest.remove_prefix(ptr - rest.data());
  return value;
}

}  // namespace

absl::StatusOr<std::optional<RawEdge>> ParseEdgeLine(std::string_view line) {
  absl::string_view rest =
      absl::StripAsciiWhitespace(absl::string_view(line.data(), line.size()));
  if (rest.empty() || rest.front() == '#') return std::nullopt;
  RawEdge edge;
  absl::StatusOr<ExternalId> u = ParseId(rest);
  if (!u.ok()) return u.status();
  absl::StatusOr<ExternalId> v = ParseId(rest);
  if (!v.ok()) return v.status();
  if (!absl::StripAsciiWhitespace(rest).empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat("trailing content: '", absl::StripAsciiWhitespace(rest),
                     "'"));
  }
  edge.u = *u;
  edge.v = *v;
  return edge;
}

absl::Status ForEachRawEdge(std::istream& in,
                            absl::FunctionRef<void(const RawEdge&)> fn) {
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    absl::StatusOr<std::optional<RawEdge>> parsed = ParseEdgeLine(line);
    if (!parsed.ok()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "line ", line_number, ": ", parsed.status().message()));
    }
    if (parsed->has_value()) fn(**parsed);
  }
  if (in.bad()) return absl::DataLossError("read error");
  return absl::OkStatus();
}

std::optional<VertexId> VertexIndex::Find(ExternalId id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<VertexId>(it - ids_.begin());
}

VertexIndex VertexIndex::Identity(std::size_t n) {
  std::vector<ExternalId> ids(n);
  std::iota(ids.begin(), ids.end(), ExternalId{0});
  return VertexIndex(std::move(ids));
}

absl::StatusOr<LoadedGraph> ReadEdgeList(std::istream& in) {
  std::vector<RawEdge> raw;
  absl::Status status =
      ForEachRawEdge(in, [&](const RawEdge& e) { raw.push_back(e); });
  if (!status.ok()) return status;

  std::vector<ExternalId> ids;
  ids.reserve(2 * raw.size());
  for (const RawEdge& e : raw) {
    ids.push_back(e.u);
    ids.push_back(e.v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.size() > std::numeric_limits<VertexId>::max()) {
    return absl::OutOfRangeError("too many distinct vertices");
  }
  VertexIndex index(std::move(ids));

  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const RawEdge& e : raw) {
    edges.push_back({*index.Find(e.u), *index.Find(e.v)});
  }
  absl::StatusOr<SignedGraph> graph = SignedGraph::Build(index.size(), edges);
  if (!graph.ok()) return graph.status();
  return LoadedGraph{std::move(*graph), std::move(index)};
}

absl::StatusOr<LoadedGraph> ReadEdgeListFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  absl::StatusOr<LoadedGraph> loaded = ReadEdgeList(in);
  if (!loaded.ok()) {
    return absl::Status(loaded.status().code(),
                        absl::StrCat(path, ": ", loaded.status().message()));
  }
  return loaded;
}

void WriteEdgeList(const SignedGraph& graph, const VertexIndex& index,
                   std::ostream& out) {
  graph.ForEachEdge([&](VertexId u, VertexId v, std::uint64_t) {
    out << index.external(u) << ' ' << index.external(v) << '\n';
  });
}

}  // namespace agreeclust
