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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stratify/errors.hpp"

namespace stratify {

/// Dense index of a cell, 0..m-1.
using CellId = std::uint32_t;

/// Vertex label used by simplicial input. Arbitrary integers.
using VertexId = std::int64_t;

/// One codimension-one face relation together with its attaching degree.
struct Incidence {
  CellId cell;
  int degree;  // +1 or -1

  friend bool operator==(const Incidence&, const Incidence&) = default;
};

/// Description of one cell for `CWComplex` construction; the cell's id is its
/// position in the description list.
struct CellSpec {
  int dim = 0;
  std::vector<Incidence> boundary;
};

/**
 * \brief Finite regular CW complex stored as its face poset.
 *
 * Only codimension-one face relations and their signed degrees are stored, in
 * both directions (boundary and coboundary, CSR layout). Longer face relations
 * are recovered by traversal. The object is immutable after construction and
 * may be shared freely between threads.
 *
 * Every codimension-one relation (x >1 y) has a stable relation index: the
 * position of x inside `coboundary(y)` offset by `coboundary_offset(y)`.
 */
class CWComplex {
 public:
  CWComplex() = default;

  /// Throws MalformedInput on dangling references, degrees outside {+1,-1},
  /// negative dimensions, or boundary entries that do not drop one dimension.
  explicit CWComplex(const std::vector<CellSpec>& cells);

  std::size_t size() const { return dims_.size(); }
  bool empty() const { return dims_.empty(); }

  /// Maximal cell dimension; -1 for the empty complex.
  int dimension() const { return dimension_; }

  int dim(CellId c) const { return dims_[c]; }

  std::span<const Incidence> boundary(CellId c) const {
    return {bnd_.data() + bnd_offsets_[c], bnd_.data() + bnd_offsets_[c + 1]};
  }
  std::span<const Incidence> coboundary(CellId c) const {
    return {cob_.data() + cob_offsets_[c], cob_.data() + cob_offsets_[c + 1]};
  }

  /// Cells of dimension `d` in ascending id order; empty outside [0, n].
  std::span<const CellId> cells_of_dim(int d) const;

  /// Number of codimension-one face relations.
  std::size_t relation_count() const { return cob_.size(); }
  std::size_t coboundary_offset(CellId c) const { return cob_offsets_[c]; }

 private:
  std::vector<int> dims_;
  std::vector<std::size_t> bnd_offsets_{0};
  std::vector<Incidence> bnd_;
  std::vector<std::size_t> cob_offsets_{0};
  std::vector<Incidence> cob_;
  std::vector<std::size_t> by_dim_offsets_{0};
  std::vector<CellId> by_dim_;
  int dimension_ = -1;
};

/// Build a complex from an explicit cell list (ids = list positions).
CWComplex build_from_cw(const std::vector<CellSpec>& cells);

/// A simplicial complex together with the sorted vertex list of every cell.
struct SimplicialComplex {
  CWComplex complex;
  std::vector<std::vector<VertexId>> vertices;

  /// Cell id of the simplex spanned by `simplex` (any vertex order).
  std::optional<CellId> find(std::vector<VertexId> simplex) const;
};

/// All faces of the given maximal simplices. Cells are ordered by dimension and
/// then lexicographically by sorted vertex list; the face omitting the i-th
/// sorted vertex has degree (-1)^i. Throws MalformedInput on a repeated vertex
/// or an empty simplex.
SimplicialComplex build_from_simplices(const std::vector<std::vector<VertexId>>& maximal_simplices);

/// Membership predicate for a subcomplex Y of the complex. Cells are masked,
/// never deleted, so ids stay stable.
class LiveMask {
 public:
  LiveMask() = default;
  explicit LiveMask(std::size_t cells, bool alive = true) : alive_(cells, alive ? 1 : 0) {}

  bool alive(CellId c) const { return alive_[c] != 0; }
  void kill(CellId c) { alive_[c] = 0; }
  std::size_t size() const { return alive_.size(); }
  std::size_t count() const;

  friend bool operator==(const LiveMask&, const LiveMask&) = default;

 private:
  std::vector<std::uint8_t> alive_;
};

/// True when every face of an alive cell is alive.
bool is_face_closed(const CWComplex& complex, const LiveMask& mask);

/// Alive cells w >= v with w not >= u (u optional), ascending. With no u this
/// is the open star of v inside the live subcomplex. Throws PreconditionError
/// if v (or u, when given) is not alive.
std::vector<CellId> upset(const CWComplex& complex, const LiveMask& mask, std::optional<CellId> u,
                          CellId v);

struct ValidationIssue {
  enum class Kind {
    kDegreeRange,     // degree outside {+1,-1}
    kTranspose,       // boundary and coboundary disagree
    kBoundarySquare,  // integer boundary of a boundary is nonzero
    kNotSphere,       // proper faces of a cell are not a cohomology sphere
  };
  Kind kind;
  std::vector<CellId> cells;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool deep = false;

  bool ok() const { return issues.empty(); }
  std::string summary() const;
};

/// Shallow checks: degree range, transpose consistency, integer d∘d = 0. With
/// `deep`, additionally require the proper faces of every cell of dimension
/// d >= 1 to have the reduced GF(p) cohomology of the (d-1)-sphere.
ValidationReport validate(const CWComplex& complex, bool deep = false, std::uint32_t prime = 2);

/// Thrown by entry points that refuse complexes failing validation.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(ValidationReport report)
      : std::runtime_error(report.summary()), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

}  // namespace stratify
