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

#include "stratify/io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace stratify {

namespace {

constexpr const char* kResultFormat = "stratify-result";
constexpr int kResultVersion = 1;

template <typename T>
T require(const nlohmann::json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw MalformedInput(where + ": missing \"" + key + "\"");
  }
  try {
    return obj.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw MalformedInput(where + ": field \"" + key + "\" has the wrong type");
  }
}

}  // namespace

std::vector<std::vector<VertexId>> parse_simplices(std::istream& in) {
  std::vector<std::vector<VertexId>> simplices;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream tokens(line);
    std::vector<VertexId> simplex;
    std::string token;
    while (tokens >> token) {
      std::size_t used = 0;
      VertexId v = 0;
      try {
        v = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) {
        throw MalformedInput("line " + std::to_string(line_no) + ": \"" + token +
                             "\" is not an integer vertex id");
      }
      simplex.push_back(v);
    }
    simplices.push_back(std::move(simplex));
  }
  return simplices;
}

LabeledComplex parse_cw_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("cells") || !doc["cells"].is_array()) {
    throw MalformedInput("CW document needs a \"cells\" array");
  }
  const auto& cells = doc["cells"];
  const std::size_t m = cells.size();
  std::vector<CellSpec> specs(m);
  std::vector<std::string> names(m);
  std::vector<bool> seen(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& cell = cells[i];
    const std::string where = "cells[" + std::to_string(i) + "]";
    const auto id = require<std::int64_t>(cell, "id", where);
    if (id < 0 || static_cast<std::size_t>(id) >= m || seen[id]) {
      throw MalformedInput(where + ": ids must be exactly 0.." + std::to_string(m - 1) +
                           " without repeats (got " + std::to_string(id) + ")");
    }
    seen[id] = true;
    CellSpec& spec = specs[id];
    spec.dim = require<int>(cell, "dim", where);
    if (spec.dim < 0) throw MalformedInput(where + ": negative dimension");
    if (cell.contains("name")) names[id] = require<std::string>(cell, "name", where);
    if (!cell.contains("boundary")) continue;
    const auto& boundary = cell["boundary"];
    if (!boundary.is_array()) throw MalformedInput(where + ": \"boundary\" must be an array");
    for (const auto& entry : boundary) {
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
          !entry[1].is_number_integer()) {
        throw MalformedInput(where + ": boundary entries must be [face_id, degree] integer pairs");
      }
      const auto face = entry[0].get<std::int64_t>();
      if (face < 0 || static_cast<std::size_t>(face) >= m) {
        throw MalformedInput(where + ": boundary references undeclared cell " + std::to_string(face));
      }
      spec.boundary.push_back(Incidence{static_cast<CellId>(face), entry[1].get<int>()});
    }
  }
  return LabeledComplex{CWComplex(specs), std::move(names)};
}

LabeledComplex load_complex(const std::filesystem::path& path, InputFormat format) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open " + path.string());
  if (format == InputFormat::kCw) return parse_cw_json(in);
  SimplicialComplex sc = build_from_simplices(parse_simplices(in));
  auto labels = simplex_labels(sc);
  return LabeledComplex{std::move(sc.complex), std::move(labels)};
}

std::vector<std::string> simplex_labels(const SimplicialComplex& sc) {
  std::vector<std::string> labels;
  labels.reserve(sc.vertices.size());
  for (const auto& s : sc.vertices) {
    std::string label;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) label += ',';
      label += std::to_string(s[i]);
    }
    labels.push_back(std::move(label));
  }
  return labels;
}

nlohmann::ordered_json complex_to_cw_json(const CWComplex& complex, const std::vector<std::string>& labels) {
  nlohmann::ordered_json cells = nlohmann::ordered_json::array();
  for (CellId c = 0; c < complex.size(); ++c) {
    nlohmann::ordered_json cell;
    cell["id"] = c;
    cell["dim"] = complex.dim(c);
    if (c < labels.size() && !labels[c].empty()) cell["name"] = labels[c];
    nlohmann::ordered_json boundary = nlohmann::ordered_json::array();
    for (const Incidence& f : complex.boundary(c)) boundary.push_back({f.cell, f.degree});
    cell["boundary"] = std::move(boundary);
    cells.push_back(std::move(cell));
  }
  nlohmann::ordered_json doc;
  doc["cells"] = std::move(cells);
  return doc;
}

nlohmann::ordered_json result_to_json(const CWComplex& complex, std::uint32_t prime, std::span<const int> codim,
                                      const Stratification& strat, const std::vector<std::string>& labels,
                                      const std::optional<RunMetadata>& run) {
  nlohmann::ordered_json doc;
  doc["format"] = kResultFormat;
  doc["version"] = kResultVersion;
  doc["coefficient_prime"] = prime;
  doc["dimension"] = complex.dimension();

  nlohmann::ordered_json cells = nlohmann::ordered_json::array();
  for (CellId c = 0; c < complex.size(); ++c) {
    nlohmann::ordered_json cell;
    cell["id"] = c;
    cell["dim"] = complex.dim(c);
    cell["codim"] = codim[c];
    cell["stratum"] = strat.stratum_of[c];
    if (c < labels.size() && !labels[c].empty()) cell["label"] = labels[c];
    cells.push_back(std::move(cell));
  }
  doc["cells"] = std::move(cells);

  nlohmann::ordered_json strata = nlohmann::ordered_json::array();
  for (const Stratum& s : strat.strata) {
    nlohmann::ordered_json entry;
    entry["id"] = s.id;
    entry["dim"] = s.dim;
    entry["codim"] = s.codim;
    entry["cell_count"] = s.cells.size();
    strata.push_back(std::move(entry));
  }
  doc["strata"] = std::move(strata);

  nlohmann::ordered_json frontier = nlohmann::ordered_json::array();
  for (const auto& [upper, lower] : strat.covering) frontier.push_back({upper, lower});
  doc["frontier"] = std::move(frontier);

  if (run) {
    nlohmann::ordered_json meta;
    meta["workers"] = run->workers;
    nlohmann::ordered_json iterations = nlohmann::ordered_json::array();
    for (const IterationTimings& t : run->iterations) {
      nlohmann::ordered_json it;
      it["d"] = t.d;
      it["stars"] = t.stars;
      it["diffs"] = t.diffs;
      it["star_and_diff_seconds"] = t.star_and_diff;
      it["assign_seconds"] = t.assign;
      it["remove_seconds"] = t.remove;
      iterations.push_back(std::move(it));
    }
    meta["iterations"] = std::move(iterations);
    meta["strata_seconds"] = run->strata_seconds;
    meta["total_seconds"] = run->total_seconds;
    doc["run"] = std::move(meta);
  }
  return doc;
}

ResultDocument result_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || doc.value("format", std::string{}) != kResultFormat) {
    throw MalformedInput("not a stratify result document");
  }
  ResultDocument out;
  out.prime = require<std::uint32_t>(doc, "coefficient_prime", "result");
  const int n = require<int>(doc, "dimension", "result");

  const auto& cells = doc.at("cells");
  const std::size_t m = cells.size();
  out.dims.resize(m);
  out.codim.resize(m);
  out.strat.stratum_of.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::string where = "cells[" + std::to_string(i) + "]";
    if (require<std::size_t>(cells[i], "id", where) != i) throw MalformedInput(where + ": ids out of order");
    out.dims[i] = require<int>(cells[i], "dim", where);
    out.codim[i] = require<int>(cells[i], "codim", where);
    out.strat.stratum_of[i] = require<StratumId>(cells[i], "stratum", where);
  }

  const auto& strata = doc.at("strata");
  for (std::size_t s = 0; s < strata.size(); ++s) {
    const std::string where = "strata[" + std::to_string(s) + "]";
    Stratum stratum;
    stratum.id = require<StratumId>(strata[s], "id", where);
    if (stratum.id != s) throw MalformedInput(where + ": ids out of order");
    stratum.dim = require<int>(strata[s], "dim", where);
    stratum.codim = require<int>(strata[s], "codim", where);
    if (stratum.dim != n - stratum.codim) throw MalformedInput(where + ": dim and codim disagree");
    out.strat.strata.push_back(std::move(stratum));
  }
  for (std::size_t c = 0; c < m; ++c) {
    const StratumId s = out.strat.stratum_of[c];
    if (s >= out.strat.strata.size()) throw MalformedInput("cell " + std::to_string(c) + ": unknown stratum");
    out.strat.strata[s].cells.push_back(static_cast<CellId>(c));
  }
  for (std::size_t s = 0; s < strata.size(); ++s) {
    if (require<std::size_t>(strata[s], "cell_count", "strata") != out.strat.strata[s].cells.size()) {
      throw MalformedInput("strata[" + std::to_string(s) + "]: cell_count mismatch");
    }
  }

  for (const auto& edge : doc.at("frontier")) {
    if (!edge.is_array() || edge.size() != 2) throw MalformedInput("frontier entries must be pairs");
    const auto upper = edge[0].get<StratumId>();
    const auto lower = edge[1].get<StratumId>();
    if (upper >= strata.size() || lower >= strata.size()) throw MalformedInput("frontier: unknown stratum");
    out.strat.covering.emplace_back(upper, lower);
  }
  try {
    out.strat.rebuild_closure();
  } catch (const InvariantViolation& e) {
    throw MalformedInput(std::string("frontier: ") + e.what());
  }
  return out;
}

std::string frontier_to_dot(const Stratification& strat) {
  std::ostringstream out;
  out << "digraph frontier {\n";
  for (const Stratum& s : strat.strata) {
    out << "  s" << s.id << " [label=\"dim=" << s.dim << " (" << s.cells.size() << ")\"];\n";
  }
  for (const auto& [upper, lower] : strat.covering) {
    out << "  s" << upper << " -> s" << lower << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace stratify
