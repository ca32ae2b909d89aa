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

#include "stratify/local_cohomology.hpp"

#include <algorithm>
#include <string>

namespace stratify {

CochainComplex complex_on_cells(const CWComplex& complex, std::span<const CellId> sorted_cells,
                                const PrimeField& field, int top_degree) {
  CochainComplex cx{field, {}, {}};
  const std::size_t degrees = top_degree < 0 ? 0 : static_cast<std::size_t>(top_degree) + 1;
  cx.basis.resize(degrees);
  for (CellId c : sorted_cells) {
    const int d = complex.dim(c);
    if (d <= top_degree) cx.basis[d].push_back(c);
  }
  if (degrees == 0) return cx;

  cx.codifferential.reserve(degrees - 1);
  std::vector<Triplet> entries;
  for (std::size_t k = 0; k + 1 < degrees; ++k) {
    const auto& cols = cx.basis[k];
    const auto& rows = cx.basis[k + 1];
    entries.clear();
    if (!rows.empty()) {
      for (std::size_t j = 0; j < cols.size(); ++j) {
        for (const Incidence& up : complex.coboundary(cols[j])) {
          auto it = std::lower_bound(rows.begin(), rows.end(), up.cell);
          if (it != rows.end() && *it == up.cell) {
            entries.push_back(Triplet{static_cast<std::size_t>(it - rows.begin()), j, up.degree});
          }
        }
      }
    }
    cx.codifferential.emplace_back(rows.size(), cols.size(), field, entries);
  }
  return cx;
}

CochainComplex star_complex(const CWComplex& complex, const LiveMask& mask, CellId w,
                            const PrimeField& field) {
  const std::vector<CellId> star = upset(complex, mask, std::nullopt, w);
  return complex_on_cells(complex, star, field, complex.dimension());
}

CochainComplex diff_complex(const CWComplex& complex, const LiveMask& mask, CellId x, CellId y,
                            const PrimeField& field) {
  bool adjacent = false;
  if (y < complex.size()) {
    const auto cob = complex.coboundary(y);
    adjacent = std::any_of(cob.begin(), cob.end(), [x](const Incidence& i) { return i.cell == x; });
  }
  if (!adjacent) {
    throw PreconditionError("diff_complex: cell " + std::to_string(x) +
                            " is not a codimension-one coface of " + std::to_string(y));
  }
  const std::vector<CellId> cells = upset(complex, mask, x, y);
  return complex_on_cells(complex, cells, field, complex.dimension());
}

bool is_delta(std::span<const std::size_t> dims, int k) {
  if (k < 0 || static_cast<std::size_t>(k) >= dims.size()) return false;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] != (i == static_cast<std::size_t>(k) ? 1u : 0u)) return false;
  }
  return true;
}

bool is_trivial(std::span<const std::size_t> dims) {
  return std::all_of(dims.begin(), dims.end(), [](std::size_t v) { return v == 0; });
}

}  // namespace stratify
