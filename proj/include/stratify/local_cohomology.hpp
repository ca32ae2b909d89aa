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

#include <cstddef>
#include <span>

#include "stratify/cochain.hpp"
#include "stratify/complex.hpp"
#include "stratify/field.hpp"

// Cochain complexes of open stars inside the live subcomplex Y. The star
// complex of w is the local cohomology stalk at w: its generators are the alive
// cofaces of w graded by dimension, and its codifferential is given by the
// attaching degrees. Its cohomology is the compactly supported cohomology of
// the open star of w in Y.
//
// For a codimension-one relation x >1 y the star of x is a subcomplex of the
// star of y, and the inclusion is a quasi-isomorphism exactly when the
// quotient, supported on st(y) - st(x), is acyclic. `diff_complex` builds that
// quotient.

namespace stratify {

/// Cochain complex on an arbitrary sorted set of cells, degrees 0..top_degree.
/// Codifferential entries between cells outside the set are dropped.
CochainComplex complex_on_cells(const CWComplex& complex, std::span<const CellId> sorted_cells,
                                const PrimeField& field, int top_degree);

/// Local cohomology stalk of `w` over the live subcomplex. Throws
/// PreconditionError if `w` is dead.
CochainComplex star_complex(const CWComplex& complex, const LiveMask& mask, CellId w,
                            const PrimeField& field);

/// Complex on the alive cells >= y and not >= x, for x >1 y. Throws
/// PreconditionError unless both cells are alive and x is a codimension-one
/// coface of y.
CochainComplex diff_complex(const CWComplex& complex, const LiveMask& mask, CellId x, CellId y,
                            const PrimeField& field);

/// True iff dims is 1 at index k and 0 everywhere else.
bool is_delta(std::span<const std::size_t> dims, int k);

/// True iff every entry of dims is zero.
bool is_trivial(std::span<const std::size_t> dims);

}  // namespace stratify
