// Copyright 2026 The stratify Authors
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

#include "stratify/strata.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include <boost/pending/disjoint_sets.hpp>

#include "stratify/stratcast.hpp"

namespace stratify {

namespace {

using Edges = std::vector<std::pair<StratumId, StratumId>>;

std::vector<std::vector<StratumId>> successors(std::size_t count, const Edges& edges) {
  std::vector<std::vector<StratumId>> succ(count);
  for (const auto& [u, v] : edges) succ[u].push_back(v);
  return succ;
}

// Kahn order, sources first. Throws on a cycle.
std::vector<StratumId> topological_order(const std::vector<std::vector<StratumId>>& succ) {
  std::vector<std::size_t> indegree(succ.size(), 0);
  for (const auto& out : succ) {
    for (StratumId v : out) ++indegree[v];
  }
  std::vector<StratumId> order;
  order.reserve(succ.size());
  for (StratumId s = 0; s < succ.size(); ++s) {
    if (indegree[s] == 0) order.push_back(s);
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (StratumId v : succ[order[head]]) {
      if (--indegree[v] == 0) order.push_back(v);
    }
  }
  if (order.size() != succ.size()) throw InvariantViolation("frontier relation contains a cycle");
  return order;
}

// Transitive reduction of an acyclic, duplicate-free edge list.
Edges transitive_reduction(std::size_t count, const Edges& edges) {
  const auto succ = successors(count, edges);
  topological_order(succ);
  std::vector<std::size_t> stamp(count, 0);
  std::vector<StratumId> stack;
  Edges reduced;
  for (StratumId u = 0; u < count; ++u) {
    // Mark everything reachable from u by a path of length >= 2.
    const std::size_t mark = u + 1;
    for (StratumId w : succ[u]) {
      for (StratumId v : succ[w]) {
        if (stamp[v] != mark) {
          stamp[v] = mark;
          stack.push_back(v);
        }
      }
    }
    while (!stack.empty()) {
      const StratumId v = stack.back();
      stack.pop_back();
      for (StratumId t : succ[v]) {
        if (stamp[t] != mark) {
          stamp[t] = mark;
          stack.push_back(t);
        }
      }
    }
    for (StratumId v : succ[u]) {
      if (stamp[v] != mark) reduced.emplace_back(u, v);
    }
  }
  std::sort(reduced.begin(), reduced.end());
  return reduced;
}

}  // namespace

bool Stratification::precedes_or_equal(StratumId tau, StratumId sigma) const {
  if (tau == sigma) return true;
  if (words_ > 0) return (closure_[tau * words_ + sigma / 64] >> (sigma % 64)) & 1u;

  // Large stratifications: search down the covering relation. Dimension drops
  // along every edge, so branches at or below dim(sigma) are pruned.
  const int target_dim = strata[sigma].dim;
  std::vector<StratumId> stack{tau};
  std::vector<bool> seen(strata.size(), false);
  seen[tau] = true;
  while (!stack.empty()) {
    const StratumId s = stack.back();
    stack.pop_back();
    auto it = std::lower_bound(covering.begin(), covering.end(), std::pair<StratumId, StratumId>{s, 0});
    for (; it != covering.end() && it->first == s; ++it) {
      if (it->second == sigma) return true;
      if (!seen[it->second] && strata[it->second].dim > target_dim) {
        seen[it->second] = true;
        stack.push_back(it->second);
      }
    }
  }
  return false;
}

void Stratification::rebuild_closure() {
  const std::size_t count = strata.size();
  std::sort(covering.begin(), covering.end());
  const auto succ = successors(count, covering);
  const auto order = topological_order(succ);
  words_ = 0;
  closure_.clear();
  if (count > kClosureLimit) return;

  words_ = (count + 63) / 64;
  closure_.assign(count * words_, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::uint64_t* row = closure_.data() + *it * words_;
    for (StratumId v : succ[*it]) {
      row[v / 64] |= std::uint64_t{1} << (v % 64);
      const std::uint64_t* sub = closure_.data() + v * words_;
      for (std::size_t w = 0; w < words_; ++w) row[w] |= sub[w];
    }
  }
}

Stratification components(const CWComplex& complex, std::span<const int> codim) {
  const std::size_t m = complex.size();
  if (codim.size() != m) throw PreconditionError("components: codim labels do not match the complex");
  for (CellId c = 0; c < m; ++c) {
    if (codim[c] == kUnassigned) {
      throw PreconditionError("components: cell " + std::to_string(c) + " has no codim");
    }
  }

  boost::disjoint_sets_with_storage<> sets(m);
  for (CellId y = 0; y < m; ++y) {
    for (const Incidence& up : complex.coboundary(y)) {
      if (codim[up.cell] == codim[y]) sets.union_set(up.cell, y);
    }
  }

  // Cells are scanned in ascending order, so the first cell seen for a root is
  // the smallest one in its class.
  std::vector<std::int64_t> class_of_root(m, -1);
  std::vector<std::vector<CellId>> classes;
  for (CellId c = 0; c < m; ++c) {
    const std::size_t root = sets.find_set(c);
    if (class_of_root[root] < 0) {
      class_of_root[root] = static_cast<std::int64_t>(classes.size());
      classes.emplace_back();
    }
    classes[static_cast<std::size_t>(class_of_root[root])].push_back(c);
  }
  std::sort(classes.begin(), classes.end(), [&codim](const auto& a, const auto& b) {
    return std::tie(codim[a.front()], a.front()) < std::tie(codim[b.front()], b.front());
  });

  Stratification strat;
  strat.stratum_of.assign(m, 0);
  const int n = complex.dimension();
  for (std::size_t s = 0; s < classes.size(); ++s) {
    Stratum stratum;
    stratum.id = static_cast<StratumId>(s);
    stratum.codim = codim[classes[s].front()];
    stratum.dim = n - stratum.codim;
    stratum.cells = std::move(classes[s]);
    for (CellId c : stratum.cells) strat.stratum_of[c] = stratum.id;
    strat.strata.push_back(std::move(stratum));
  }
  strat.rebuild_closure();
  return strat;
}

Stratification frontier(const CWComplex& complex, Stratification strat) {
  std::vector<std::pair<StratumId, StratumId>> seeds;
  for (CellId y = 0; y < complex.size(); ++y) {
    for (const Incidence& up : complex.coboundary(y)) {
      const StratumId tau = strat.stratum_of[up.cell];
      const StratumId sigma = strat.stratum_of[y];
      if (tau == sigma) continue;
      if (strat.strata[tau].dim <= strat.strata[sigma].dim) {
        throw InvariantViolation("frontier does not drop dimension between strata " +
                                 std::to_string(tau) + " and " + std::to_string(sigma));
      }
      seeds.emplace_back(tau, sigma);
    }
  }
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());

  strat.covering = transitive_reduction(strat.strata.size(), seeds);
  strat.rebuild_closure();
  return strat;
}

Stratification stratify(const CWComplex& complex, std::span<const int> codim) {
  return frontier(complex, components(complex, codim));
}

bool same_stratum(const Stratification& strat, CellId a, CellId b) {
  return strat.stratum_of.at(a) == strat.stratum_of.at(b);
}

bool has_morphism(const Stratification& strat, CellId w, CellId z) {
  return strat.precedes_or_equal(strat.stratum_of.at(w), strat.stratum_of.at(z));
}

}  // namespace stratify
