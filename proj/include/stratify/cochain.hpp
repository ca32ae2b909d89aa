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
#include <vector>

#include "stratify/complex.hpp"
#include "stratify/field.hpp"

namespace stratify {

/**
 * \brief Cochain complex over GF(p) with cells as basis vectors.
 *
 * Degrees are absolute cell dimensions. `basis[k]` lists the degree-k
 * generators in ascending id order; `codifferential[k]` maps degree k to
 * degree k+1 (rows index `basis[k+1]`, columns index `basis[k]`).
 */
struct CochainComplex {
  PrimeField field;
  std::vector<std::vector<CellId>> basis;
  std::vector<SparseMatrix> codifferential;

  std::size_t degrees() const { return basis.size(); }
  std::size_t total_size() const;
};

/// True when every codifferential composes to zero with its successor.
/// Throws InvariantViolation if a matrix shape disagrees with the basis sizes.
bool composes_to_zero(const CochainComplex& cx);

}  // namespace stratify
