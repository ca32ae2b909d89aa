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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "stratify/complex.hpp"
#include "stratify/stratcast.hpp"
#include "stratify/strata.hpp"

namespace stratify {

enum class InputFormat { kSimplices, kCw };

/// Complex plus a human-readable label per cell ("" when none).
struct LabeledComplex {
  CWComplex complex;
  std::vector<std::string> labels;
};

/// One maximal simplex per line, whitespace-separated integer vertex ids.
/// Blank lines and lines starting with '#' are skipped.
std::vector<std::vector<VertexId>> parse_simplices(std::istream& in);

/// JSON document {"cells": [{"id", "dim", "boundary": [[face, deg], ...],
/// "name"?}, ...]}. Ids must be exactly 0..m-1 (any order).
LabeledComplex parse_cw_json(std::istream& in);

/// Reads a complex from disk. Throws MalformedInput.
LabeledComplex load_complex(const std::filesystem::path& path, InputFormat format);

/// Labels of simplicial cells: vertex ids joined by ','.
std::vector<std::string> simplex_labels(const SimplicialComplex& sc);

/// Serializes any complex in the CW JSON input format.
nlohmann::ordered_json complex_to_cw_json(const CWComplex& complex, const std::vector<std::string>& labels = {});

struct RunMetadata {
  unsigned workers = 1;
  std::vector<IterationTimings> iterations;
  double strata_seconds = 0.0;
  double total_seconds = 0.0;
};

/// Result document: cells {id, dim, codim, stratum, label?}, strata
/// {id, dim, codim, cell_count}, frontier covering pairs [upper, lower].
/// Run metadata is only written when given; everything else is a function of
/// the input alone.
nlohmann::ordered_json result_to_json(const CWComplex& complex, std::uint32_t prime, std::span<const int> codim,
                              const Stratification& strat, const std::vector<std::string>& labels = {},
                              const std::optional<RunMetadata>& run = std::nullopt);

struct ResultDocument {
  std::uint32_t prime = 2;
  std::vector<int> dims;
  std::vector<int> codim;
  Stratification strat;
};

/// Inverse of result_to_json (metadata ignored). Throws MalformedInput.
ResultDocument result_from_json(const nlohmann::json& doc);

/// Frontier order as a DOT digraph, strata as nodes labeled "dim=k (cells)".
std::string frontier_to_dot(const Stratification& strat);

}  // namespace stratify
