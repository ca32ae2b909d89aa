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

#pragma once

#include <cstdint>
#include <vector>

#include "stratify/complex.hpp"
#include "stratify/field.hpp"

// Canonical codimension assignment.
//
// Iteration d works on the live subcomplex Y_d (all cells without a codim):
//
//   A. h(w) = cohomology of the star complex of every alive w.
//   B. every alive relation x >1 y with level d-1 whose difference complex
//      st(y) - st(x) is acyclic is promoted to level d. A level of k means the
//      inclusion of stars was a quasi-isomorphism in Y_0, ..., Y_k.
//   C. alive (n-d)-cells get codim d. Then, for i = n-d-1 down to 0, an alive
//      i-cell u gets codim d when h(u) is concentrated in degree n-d with rank
//      one and every alive coface v >1 u already has codim d and level(v >1 u)
//      equal to d. Processing i downwards makes the codimension-one test
//      equivalent to testing all cofaces.
//   D. cells with codim d leave the mask, giving Y_{d+1}.
//
// A and B run together on the worker pool; C is parallel within each fixed i.

namespace stratify {

inline constexpr int kUnassigned = -1;

/// Wall-clock seconds spent in each phase of one iteration.
struct IterationTimings {
  int d = 0;
  double star_and_diff = 0.0;  // phases A and B
  double assign = 0.0;         // phase C
  double remove = 0.0;         // phase D
  std::size_t stars = 0;       // star complexes evaluated
  std::size_t diffs = 0;       // difference complexes evaluated
};

struct StratState {
  /// Starts at d = 0 with every cell alive and unassigned and every level -1.
  explicit StratState(const CWComplex& complex);
  StratState() = default;

  int d = 0;
  std::vector<int> codim;   // per cell, kUnassigned until set
  std::vector<int> level;   // per codimension-one relation, >= -1
  LiveMask mask;

  bool finished(const CWComplex& complex) const { return d > complex.dimension(); }
  /// Level of the relation x >1 y. Throws PreconditionError if x is not a
  /// codimension-one coface of y.
  int relation_level(const CWComplex& complex, CellId x, CellId y) const;
};

struct RunOptions {
  std::uint32_t prime = 2;
  unsigned workers = 1;
};

struct RunResult {
  StratState state;
  std::vector<IterationTimings> timings;
};

/// Advance `state` by one iteration (Y_d -> Y_{d+1}).
void iterate(StratState& state, const CWComplex& complex, const PrimeField& field, unsigned workers,
             IterationTimings* timings = nullptr);

/// Run all iterations d = 0..n. Throws ValidationError if the complex fails
/// shallow validation. The result does not depend on `workers`.
RunResult run(const CWComplex& complex, const RunOptions& options = {});

}  // namespace stratify
