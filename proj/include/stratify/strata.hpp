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
#include <span>
#include <utility>
#include <vector>

#include "stratify/complex.hpp"

namespace stratify {

using StratumId = std::uint32_t;

struct Stratum {
  StratumId id = 0;
  int dim = 0;
  int codim = 0;
  std::vector<CellId> cells;  // ascending

  friend bool operator==(const Stratum&, const Stratum&) = default;
};

/**
 * \brief Canonical strata of a complex and their frontier order.
 *
 * Strata are numbered by (codim, smallest contained cell). The frontier order
 * tau >= sigma (sigma lies in the closure of tau) is kept as its covering
 * relation; reachability queries use a closure table when the stratification
 * is small enough and a pruned search otherwise.
 */
class Stratification {
 public:
  std::vector<StratumId> stratum_of;
  std::vector<Stratum> strata;
  /// Covering pairs (upper, lower), sorted.
  std::vector<std::pair<StratumId, StratumId>> covering;

  /// tau >= sigma in the frontier order, equality included.
  bool precedes_or_equal(StratumId tau, StratumId sigma) const;

  /// Sorts `covering` and rebuilds the reachability table. Throws
  /// InvariantViolation on a cycle.
  void rebuild_closure();

  friend bool operator==(const Stratification& a, const Stratification& b) {
    return a.stratum_of == b.stratum_of && a.strata == b.strata && a.covering == b.covering;
  }

 private:
  // Above this many strata reachability is answered by search instead of a table.
  static constexpr std::size_t kClosureLimit = 8192;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> closure_;  // row tau, bit sigma: tau > sigma
};

/// Connected components of equal-codim cells along codimension-one relations.
/// Frontier data is left empty.
Stratification components(const CWComplex& complex, std::span<const int> codim);

/// Fills in the frontier: seeds tau >= sigma from every x >1 y crossing two
/// strata, closes transitively and stores the transitive reduction. Throws
/// InvariantViolation if the seed relation has a cycle or fails to drop
/// dimension.
Stratification frontier(const CWComplex& complex, Stratification strat);

/// components() followed by frontier().
Stratification stratify(const CWComplex& complex, std::span<const int> codim);

/// Isomorphism of two cells in the localized face category.
bool same_stratum(const Stratification& strat, CellId a, CellId b);

/// Existence of a morphism w -> z in the localized face category, which holds
/// iff stratum(w) >= stratum(z). Within a stratum all cells are isomorphic, so
/// the stratum-level frontier statement transfers to cells.
bool has_morphism(const Stratification& strat, CellId w, CellId z);

}  // namespace stratify
