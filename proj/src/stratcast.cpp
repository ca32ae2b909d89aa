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

#include "stratify/stratcast.hpp"

#include <chrono>
#include <string>

#include "stratify/local_cohomology.hpp"
#include "stratify/parallel.hpp"

namespace stratify {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct PendingRelation {
  std::size_t index;  // into StratState::level
  CellId upper;
  CellId lower;
};

}  // namespace

StratState::StratState(const CWComplex& complex)
    : d(0),
      codim(complex.size(), kUnassigned),
      level(complex.relation_count(), -1),
      mask(complex.size(), true) {}

int StratState::relation_level(const CWComplex& complex, CellId x, CellId y) const {
  const auto cob = complex.coboundary(y);
  for (std::size_t j = 0; j < cob.size(); ++j) {
    if (cob[j].cell == x) return level[complex.coboundary_offset(y) + j];
  }
  throw PreconditionError("cell " + std::to_string(x) + " is not a codimension-one coface of " +
                          std::to_string(y));
}

void iterate(StratState& state, const CWComplex& complex, const PrimeField& field, unsigned workers,
             IterationTimings* timings) {
  const int n = complex.dimension();
  const int d = state.d;
  if (d > n) {
    throw PreconditionError("iterate: iteration " + std::to_string(d) + " exceeds dimension " +
                            std::to_string(n));
  }
  const int top = n - d;
  IterationTimings local;
  local.d = d;

  // Phases A and B.
  auto start = Clock::now();
  std::vector<CellId> alive;
  std::vector<PendingRelation> pending;
  for (CellId y = 0; y < complex.size(); ++y) {
    if (!state.mask.alive(y)) continue;
    alive.push_back(y);
    const auto cob = complex.coboundary(y);
    const std::size_t offset = complex.coboundary_offset(y);
    for (std::size_t j = 0; j < cob.size(); ++j) {
      if (state.mask.alive(cob[j].cell) && state.level[offset + j] == d - 1) {
        pending.push_back(PendingRelation{offset + j, cob[j].cell, y});
      }
    }
  }

  std::vector<std::uint8_t> manifold_like(complex.size(), 0);  // h(w) concentrated in degree n-d
  std::vector<std::uint8_t> acyclic(pending.size(), 0);
  parallel_for(alive.size() + pending.size(), workers, [&](std::size_t i) {
    if (i < alive.size()) {
      const CellId w = alive[i];
      manifold_like[w] = is_delta(cohomology_dims(star_complex(complex, state.mask, w, field)), top);
    } else {
      const PendingRelation& r = pending[i - alive.size()];
      acyclic[i - alive.size()] =
          is_trivial(cohomology_dims(diff_complex(complex, state.mask, r.upper, r.lower, field)));
    }
  });
  for (std::size_t i = 0; i < pending.size(); ++i) {
    if (acyclic[i]) state.level[pending[i].index] = d;
  }
  local.stars = alive.size();
  local.diffs = pending.size();
  local.star_and_diff = seconds_since(start);

  // Phase C.
  start = Clock::now();
  for (int k = top + 1; k <= n; ++k) {
    for (CellId c : complex.cells_of_dim(k)) {
      if (state.mask.alive(c)) {
        throw InvariantViolation("live subcomplex at iteration " + std::to_string(d) +
                                 " still holds a cell of dimension " + std::to_string(k));
      }
    }
  }
  for (CellId z : complex.cells_of_dim(top)) {
    if (state.mask.alive(z)) state.codim[z] = d;
  }
  std::vector<CellId> slice;
  for (int i = top - 1; i >= 0; --i) {
    slice.clear();
    for (CellId u : complex.cells_of_dim(i)) {
      if (state.mask.alive(u) && manifold_like[u]) slice.push_back(u);
    }
    parallel_for(slice.size(), workers, [&](std::size_t s) {
      const CellId u = slice[s];
      const auto cob = complex.coboundary(u);
      const std::size_t offset = complex.coboundary_offset(u);
      for (std::size_t j = 0; j < cob.size(); ++j) {
        const CellId v = cob[j].cell;
        if (!state.mask.alive(v)) continue;
        if (state.codim[v] != d || state.level[offset + j] != d) return;
      }
      state.codim[u] = d;
    });
  }
  local.assign = seconds_since(start);

  // Phase D.
  start = Clock::now();
  for (CellId c : alive) {
    if (state.codim[c] == d) state.mask.kill(c);
  }
  local.remove = seconds_since(start);

  ++state.d;
  if (timings != nullptr) *timings = local;
}

RunResult run(const CWComplex& complex, const RunOptions& options) {
  ValidationReport report = validate(complex, false, options.prime);
  if (!report.ok()) throw ValidationError(std::move(report));
  const PrimeField field(options.prime);

  RunResult result{StratState(complex), {}};
  while (!result.state.finished(complex)) {
    IterationTimings t;
    iterate(result.state, complex, field, options.workers, &t);
    result.timings.push_back(t);
  }
  return result;
}

}  // namespace stratify
