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

#include "agreeclust/validators.h"

#include <algorithm>
#include <functional>

#include "absl/strings/str_cat.h"
#include "agreeclust/components.h"
#include "agreeclust/hash.h"

namespace agreeclust {
namespace {

// Relative slack for comparisons whose exact form is strict or integral.
constexpr double kSlack = 1e-9;

bool AtLeast(double lhs, double rhs) { return lhs + kSlack * (1 + rhs) >= rhs; }

}  // namespace

std::vector<Violation> CheckHeavyPairsWithinTwo(const SparsifiedGraph& sg,
                                                const Clustering& components) {
  std::vector<Violation> out;
  for (const auto& members : components.Clusters()) {
    for (VertexId u : members) {
      if (sg.IsLight(u)) continue;
      const std::vector<int> dist = BoundedBfs(sg.reduced, u, 2);
      for (VertexId v : members) {
        if (v <= u || sg.IsLight(v)) continue;
        if (dist[v] < 0) {
          out.push_back({"heavy-distance-2", u, v,
                         "heavy pair farther than 2 in the sparsified graph"});
        }
      }
    }
  }
  return out;
}

std::vector<Violation> CheckOriginalDistanceTwo(const SignedGraph& graph,
                                                const Clustering& components) {
  std::vector<Violation> out;
  for (const auto& members : components.Clusters()) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        // With self-loops, a common closed neighbor exists iff dist <= 2.
        if (IntersectionSize(graph, members[i], members[j]) == 0) {
          out.push_back({"original-distance-2", members[i], members[j],
                         "no common neighbor in the input graph"});
        }
      }
    }
  }
  return out;
}

std::vector<Violation> CheckFourWeakAgreement(const SparsifiedGraph& sg,
                                              const Clustering& components,
                                              double beta) {
  std::vector<Violation> out;
  for (const auto& members : components.Clusters()) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const VertexId u = members[i];
        const VertexId v = members[j];
        if (sg.IsLight(u) && sg.IsLight(v)) continue;
        if (!InWeakAgreementExact(*sg.base, u, v, 4, beta)) {
          out.push_back({"4-weak-agreement", u, v,
                         absl::StrCat("sym diff ", SymDiffSize(*sg.base, u, v),
                                      " >= 4 beta max degree")});
        }
      }
    }
  }
  return out;
}

std::vector<Violation> CheckInClusterDegree(const SignedGraph& graph,
                                            const Clustering& components,
                                            const Params& params) {
  std::vector<Violation> out;
  const double factor = 1.0 - 8.0 * params.beta - params.lambda;
  for (const auto& members : components.Clusters()) {
    if (members.size() < 2) continue;
    const double bound = factor * static_cast<double>(members.size());
    for (VertexId u : members) {
      const std::size_t inside = InducedDegree(graph, u, members);
      if (!AtLeast(static_cast<double>(inside), bound)) {
        out.push_back({"in-cluster-degree", u, u,
                       absl::StrCat("d(u, CC) = ", inside, " < ", bound,
                                    " for |CC| = ", members.size())});
      }
    }
  }
  return out;
}

std::vector<Violation> CheckDiameter(const SparsifiedGraph& sg,
                                     const Clustering& components, int bound) {
  std::vector<Violation> out;
  const DiameterReport report = ValidateDiameter(sg.reduced, components, bound);
  const auto clusters = components.Clusters();
  for (ClusterId c : report.violations) {
    const auto& entry = report.components[c];
    out.push_back({"diameter", clusters[c].front(), clusters[c].back(),
                   absl::StrCat("component of size ", entry.size,
                                " has eccentricity ",
                                entry.max_eccentricity == kUnreachable
                                    ? std::string("inf")
                                    : absl::StrCat(entry.max_eccentricity))});
  }
  return out;
}

WeakAgreementBoundsReport CheckWeakAgreementBounds(
    const SignedGraph& graph, double beta,
    const WeakAgreementBoundsOptions& options) {
  WeakAgreementBoundsReport report;
  const std::size_t n = graph.num_vertices();

  std::vector<Edge> pairs;
  if (n <= options.all_pairs_limit) {
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) pairs.push_back({u, v});
    }
  } else {
    pairs = graph.Edges();
  }

  std::vector<std::vector<VertexId>> agree(n);
  for (const Edge& e : pairs) {
    ++report.pairs_checked;
    const double du = static_cast<double>(graph.Degree(e.u));
    const double dv = static_cast<double>(graph.Degree(e.v));
    const double common =
        static_cast<double>(IntersectionSize(graph, e.u, e.v));
    for (int i = 1; i <= options.max_i && i * beta < 1.0; ++i) {
      if (!InWeakAgreementExact(graph, e.u, e.v, i, beta)) continue;
      if (i == 1) {
        agree[e.u].push_back(e.v);
        agree[e.v].push_back(e.u);
      }
      ++report.weak_agreement_pairs;
      const double shrink = 1.0 - beta * i;
      const bool degrees_ok = AtLeast(dv, shrink * du) &&
                              AtLeast(du, shrink * dv) &&
                              AtLeast(du / shrink, dv) &&
                              AtLeast(dv / shrink, du);
      if (!degrees_ok) {
        report.violations.push_back(
            {"weak-agreement-degree", e.u, e.v,
             absl::StrCat("i=", i, " degrees ", du, ", ", dv)});
      }
      if (!AtLeast(common, shrink * std::max(du, dv))) {
        report.violations.push_back(
            {"weak-agreement-intersection", e.u, e.v,
             absl::StrCat("i=", i, " common ", common, " degrees ", du, ", ",
                          dv)});
      }
    }
  }

  auto check_chain = [&](const std::vector<VertexId>& chain) {
    ++report.chains_checked;
    const int k = static_cast<int>(chain.size());
    if (!InWeakAgreementExact(graph, chain.front(), chain.back(), k, beta)) {
      report.violations.push_back(
          {"weak-agreement-chain", chain.front(), chain.back(),
           absl::StrCat("chain of length ", k, " ends not in ", k,
                        "-weak agreement")});
    }
  };

  // Walks of 1..4 steps in the agreement graph.
  std::vector<double> walks(n, 1.0);
  double total = 0.0;
  for (int step = 1; step <= 4; ++step) {
    std::vector<double> next(n, 0.0);
    for (VertexId v = 0; v < n; ++v) {
      for (VertexId w : agree[v]) next[v] += walks[w];
    }
    walks = std::move(next);
    for (double w : walks) total += w;
  }

  if (total <= static_cast<double>(options.max_exhaustive_chains)) {
    std::vector<VertexId> chain;
    std::function<void()> extend = [&]() {
      if (chain.size() >= 2) check_chain(chain);
      if (chain.size() == 5) return;
      for (VertexId w : agree[chain.back()]) {
        chain.push_back(w);
        extend();
        chain.pop_back();
      }
    };
    for (VertexId v = 0; v < n; ++v) {
      chain.assign(1, v);
      extend();
    }
  } else {
    std::vector<VertexId> starts;
    for (VertexId v = 0; v < n; ++v) {
      if (!agree[v].empty()) starts.push_back(v);
    }
    HashStream rng(options.seed, 0xc4a1);
    for (std::size_t s = 0; !starts.empty() && s < options.sampled_chains;
         ++s) {
      const std::size_t length = 2 + rng.NextBelow(4);
      std::vector<VertexId> chain = {starts[rng.NextBelow(starts.size())]};
      while (chain.size() < length) {
        const auto& nbrs = agree[chain.back()];
        chain.push_back(nbrs[rng.NextBelow(nbrs.size())]);
      }
      check_chain(chain);
    }
  }
  return report;
}

StructuralReport RunStructuralChecks(const SparsifiedGraph& sg,
                                     const Clustering& components,
                                     const Params& params) {
  StructuralReport report;
  report.preconditions_met = AnalysisValid(params);
  auto append = [&](std::vector<Violation> found) {
    report.violations.insert(report.violations.end(), found.begin(),
                             found.end());
  };
  append(CheckDiameter(sg, components, 4));
  append(CheckHeavyPairsWithinTwo(sg, components));
  append(CheckOriginalDistanceTwo(*sg.base, components));
  append(CheckFourWeakAgreement(sg, components, params.beta));
  append(CheckInClusterDegree(*sg.base, components, params));
  return report;
}

}  // namespace agreeclust
