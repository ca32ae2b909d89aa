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

#include "stratify/complex.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "cell_set.hpp"
#include "stratify/field.hpp"

namespace stratify {

CWComplex::CWComplex(const std::vector<CellSpec>& cells) {
  const std::size_t m = cells.size();
  dims_.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (cells[i].dim < 0) {
      throw MalformedInput("cell " + std::to_string(i) + " has negative dimension");
    }
    dims_.push_back(cells[i].dim);
    dimension_ = std::max(dimension_, cells[i].dim);
  }

  std::vector<std::size_t> cob_counts(m, 0);
  bnd_offsets_.reserve(m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (const Incidence& inc : cells[i].boundary) {
      if (inc.cell >= m) {
        throw MalformedInput("cell " + std::to_string(i) + " references undeclared cell " +
                             std::to_string(inc.cell));
      }
      if (inc.degree != 1 && inc.degree != -1) {
        throw MalformedInput("cell " + std::to_string(i) + " has incidence degree " +
                             std::to_string(inc.degree) + " on face " + std::to_string(inc.cell));
      }
      if (dims_[inc.cell] != dims_[i] - 1) {
        throw MalformedInput("cell " + std::to_string(i) + " of dimension " + std::to_string(dims_[i]) +
                             " lists face " + std::to_string(inc.cell) + " of dimension " +
                             std::to_string(dims_[inc.cell]));
      }
      bnd_.push_back(inc);
      ++cob_counts[inc.cell];
    }
    bnd_offsets_.push_back(bnd_.size());
  }

  cob_offsets_.resize(m + 1, 0);
  for (std::size_t i = 0; i < m; ++i) cob_offsets_[i + 1] = cob_offsets_[i] + cob_counts[i];
  cob_.resize(bnd_.size());
  std::vector<std::size_t> fill(cob_offsets_.begin(), cob_offsets_.end() - 1);
  // Cells are visited in ascending order, so each coboundary list comes out sorted.
  for (std::size_t x = 0; x < m; ++x) {
    for (const Incidence& inc : boundary(static_cast<CellId>(x))) {
      cob_[fill[inc.cell]++] = Incidence{static_cast<CellId>(x), inc.degree};
    }
  }

  const int levels = dimension_ + 1;
  by_dim_offsets_.assign(static_cast<std::size_t>(levels) + 1, 0);
  for (int d : dims_) ++by_dim_offsets_[static_cast<std::size_t>(d) + 1];
  for (int d = 0; d < levels; ++d) by_dim_offsets_[d + 1] += by_dim_offsets_[d];
  by_dim_.resize(m);
  std::vector<std::size_t> pos(by_dim_offsets_.begin(), by_dim_offsets_.end() - 1);
  for (std::size_t i = 0; i < m; ++i) by_dim_[pos[dims_[i]]++] = static_cast<CellId>(i);
}

std::span<const CellId> CWComplex::cells_of_dim(int d) const {
  if (d < 0 || d > dimension_) return {};
  return {by_dim_.data() + by_dim_offsets_[d], by_dim_.data() + by_dim_offsets_[d + 1]};
}

CWComplex build_from_cw(const std::vector<CellSpec>& cells) { return CWComplex(cells); }

namespace {

bool simplex_less(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

std::optional<CellId> SimplicialComplex::find(std::vector<VertexId> simplex) const {
  std::sort(simplex.begin(), simplex.end());
  auto it = std::lower_bound(vertices.begin(), vertices.end(), simplex, simplex_less);
  if (it == vertices.end() || *it != simplex) return std::nullopt;
  return static_cast<CellId>(it - vertices.begin());
}

SimplicialComplex build_from_simplices(const std::vector<std::vector<VertexId>>& maximal_simplices) {
  std::vector<std::vector<VertexId>> faces;
  for (const auto& input : maximal_simplices) {
    if (input.empty()) throw MalformedInput("empty simplex");
    std::vector<VertexId> s = input;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      std::ostringstream msg;
      msg << "simplex repeats vertex " << *std::adjacent_find(s.begin(), s.end());
      throw MalformedInput(msg.str());
    }
    if (s.size() > 24) throw MalformedInput("simplex dimension above 23 is not supported");
    const std::uint32_t subsets = 1u << s.size();
    for (std::uint32_t mask = 1; mask < subsets; ++mask) {
      std::vector<VertexId> face;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (mask & (1u << i)) face.push_back(s[i]);
      }
      faces.push_back(std::move(face));
    }
  }
  std::sort(faces.begin(), faces.end(), simplex_less);
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

  std::vector<CellSpec> specs(faces.size());
  std::vector<VertexId> sub;
  for (std::size_t c = 0; c < faces.size(); ++c) {
    const auto& s = faces[c];
    specs[c].dim = static_cast<int>(s.size()) - 1;
    if (s.size() < 2) continue;
    for (std::size_t i = 0; i < s.size(); ++i) {
      sub.assign(s.begin(), s.end());
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
      auto it = std::lower_bound(faces.begin(), faces.end(), sub, simplex_less);
      specs[c].boundary.push_back(
          Incidence{static_cast<CellId>(it - faces.begin()), (i % 2 == 0) ? 1 : -1});
    }
  }
  return SimplicialComplex{CWComplex(specs), std::move(faces)};
}

std::size_t LiveMask::count() const {
  return static_cast<std::size_t>(std::count(alive_.begin(), alive_.end(), std::uint8_t{1}));
}

bool is_face_closed(const CWComplex& complex, const LiveMask& mask) {
  for (CellId c = 0; c < complex.size(); ++c) {
    if (!mask.alive(c)) continue;
    for (const Incidence& f : complex.boundary(c)) {
      if (!mask.alive(f.cell)) return false;
    }
  }
  return true;
}

namespace {

// Breadth-first search over alive coboundary edges starting at v, skipping
// anything in `excluded`.
detail::CellSet collect_up(const CWComplex& complex, const LiveMask& mask, CellId v,
                           const detail::CellSet* excluded) {
  detail::CellSet found;
  found.insert(v);
  for (std::size_t i = 0; i < found.size(); ++i) {
    const CellId w = found[i];
    for (const Incidence& up : complex.coboundary(w)) {
      if (!mask.alive(up.cell)) continue;
      if (excluded != nullptr && excluded->contains(up.cell)) continue;
      found.insert(up.cell);
    }
  }
  return found;
}

}  // namespace

std::vector<CellId> upset(const CWComplex& complex, const LiveMask& mask, std::optional<CellId> u,
                          CellId v) {
  if (v >= complex.size() || !mask.alive(v)) {
    throw PreconditionError("upset: cell " + std::to_string(v) + " is not alive");
  }
  if (!u) return collect_up(complex, mask, v, nullptr).take_sorted();
  if (*u >= complex.size() || !mask.alive(*u)) {
    throw PreconditionError("upset: cell " + std::to_string(*u) + " is not alive");
  }
  const detail::CellSet above_u = collect_up(complex, mask, *u, nullptr);
  if (above_u.contains(v)) return {};
  return collect_up(complex, mask, v, &above_u).take_sorted();
}

std::string ValidationReport::summary() const {
  if (issues.empty()) return "valid";
  std::ostringstream out;
  out << issues.size() << " validation issue(s)";
  const std::size_t shown = std::min<std::size_t>(issues.size(), 5);
  for (std::size_t i = 0; i < shown; ++i) out << "; " << issues[i].message;
  if (shown < issues.size()) out << "; ...";
  return out.str();
}

namespace {

std::string cell_list(const std::vector<CellId>& cells) {
  std::ostringstream out;
  for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
  return out.str();
}

// Proper faces of x, ascending.
std::vector<CellId> proper_faces(const CWComplex& complex, CellId x) {
  detail::CellSet found;
  found.insert(x);
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const Incidence& f : complex.boundary(found[i])) found.insert(f.cell);
  }
  std::vector<CellId> faces = found.take_sorted();
  faces.erase(std::find(faces.begin(), faces.end(), x));
  return faces;
}

// Reduced GF(p) Betti numbers of a closed cell set, indexed from degree -1.
std::vector<std::size_t> reduced_betti(const CWComplex& complex, const std::vector<CellId>& cells,
                                       int top, const PrimeField& field) {
  std::vector<std::vector<CellId>> by_dim(static_cast<std::size_t>(top) + 1);
  for (CellId c : cells) by_dim[complex.dim(c)].push_back(c);

  // ranks[k] = rank of the boundary map from degree k to degree k-1, with the
  // augmentation as the degree-0 map; ranks[top + 1] = 0.
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 2, 0);
  ranks[0] = by_dim[0].empty() ? 0 : 1;
  for (int k = 1; k <= top; ++k) {
    const auto& rows = by_dim[k - 1];
    const auto& cols = by_dim[k];
    std::vector<Triplet> entries;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      for (const Incidence& f : complex.boundary(cols[j])) {
        auto it = std::lower_bound(rows.begin(), rows.end(), f.cell);
        if (it != rows.end() && *it == f.cell) {
          entries.push_back(Triplet{static_cast<std::size_t>(it - rows.begin()), j, f.degree});
        }
      }
    }
    ranks[k] = rank(SparseMatrix(rows.size(), cols.size(), field, entries));
  }

  std::vector<std::size_t> betti(static_cast<std::size_t>(top) + 2, 0);
  betti[0] = 1 - ranks[0];
  for (int k = 0; k <= top; ++k) {
    betti[k + 1] = by_dim[k].size() - ranks[k] - ranks[k + 1];
  }
  return betti;
}

}  // namespace

ValidationReport validate(const CWComplex& complex, bool deep, std::uint32_t prime) {
  ValidationReport report;
  report.deep = deep;
  const std::size_t m = complex.size();

  for (CellId x = 0; x < m; ++x) {
    for (const Incidence& f : complex.boundary(x)) {
      if (f.degree != 1 && f.degree != -1) {
        report.issues.push_back({ValidationIssue::Kind::kDegreeRange,
                                 {x, f.cell},
                                 "degree " + std::to_string(f.degree) + " between cells " +
                                     std::to_string(x) + " and " + std::to_string(f.cell)});
      }
    }
  }

  {
    using Rel = std::tuple<CellId, CellId, int>;
    std::vector<Rel> down, up;
    for (CellId x = 0; x < m; ++x) {
      for (const Incidence& f : complex.boundary(x)) down.emplace_back(x, f.cell, f.degree);
      for (const Incidence& c : complex.coboundary(x)) up.emplace_back(c.cell, x, c.degree);
    }
    std::sort(down.begin(), down.end());
    std::sort(up.begin(), up.end());
    if (down != up) {
      std::vector<Rel> diff;
      std::set_symmetric_difference(down.begin(), down.end(), up.begin(), up.end(),
                                    std::back_inserter(diff));
      std::vector<CellId> cells;
      for (const auto& [x, y, s] : diff) {
        cells.push_back(x);
        cells.push_back(y);
      }
      std::sort(cells.begin(), cells.end());
      cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
      report.issues.push_back({ValidationIssue::Kind::kTranspose, cells,
                               "boundary and coboundary disagree at cells " + cell_list(cells)});
    }
  }

  for (CellId x = 0; x < m; ++x) {
    if (complex.dim(x) < 2) continue;
    std::map<CellId, long> sums;
    for (const Incidence& f : complex.boundary(x)) {
      for (const Incidence& g : complex.boundary(f.cell)) sums[g.cell] += long{f.degree} * g.degree;
    }
    std::vector<CellId> bad;
    for (const auto& [z, s] : sums) {
      if (s != 0) bad.push_back(z);
    }
    if (!bad.empty()) {
      bad.insert(bad.begin(), x);
      report.issues.push_back({ValidationIssue::Kind::kBoundarySquare, bad,
                               "boundary of boundary of cell " + std::to_string(x) +
                                   " is nonzero"});
    }
  }

  if (deep) {
    const PrimeField field(prime);
    for (CellId x = 0; x < m; ++x) {
      const int d = complex.dim(x);
      if (d < 1) continue;
      const auto betti = reduced_betti(complex, proper_faces(complex, x), d - 1, field);
      // Sphere S^{d-1}: a single class in degree d-1, which sits at index d.
      bool sphere = true;
      for (std::size_t i = 0; i < betti.size(); ++i) {
        sphere = sphere && betti[i] == (static_cast<int>(i) == d ? 1u : 0u);
      }
      if (!sphere) {
        report.issues.push_back({ValidationIssue::Kind::kNotSphere,
                                 {x},
                                 "faces of cell " + std::to_string(x) + " do not form a " +
                                     std::to_string(d - 1) + "-sphere"});
      }
    }
  }
  return report;
}

}  // namespace stratify
