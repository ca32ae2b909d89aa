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

#include "stratify/field.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "stratify/cochain.hpp"
#include "stratify/errors.hpp"

namespace stratify {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw std::invalid_argument("coefficient characteristic " + std::to_string(p) +
                                " is not a prime below 2^31");
  }
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  // Fermat: a^(p-2).
  std::uint32_t result = 1;
  std::uint32_t base = a % p_;
  for (std::uint32_t e = p_ - 2; e > 0; e >>= 1) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, PrimeField field)
    : rows_(rows), cols_(cols), field_(field), col_ptr_(cols + 1, 0) {}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, PrimeField field,
                           std::span<const Triplet> entries)
    : rows_(rows), cols_(cols), field_(field), col_ptr_(cols + 1, 0) {
  std::vector<Triplet> sorted(entries.begin(), entries.end());
  for (const Triplet& t : sorted) {
    if (t.row >= rows || t.col >= cols) {
      throw std::out_of_range("matrix entry (" + std::to_string(t.row) + ", " +
                              std::to_string(t.col) + ") outside " + std::to_string(rows) + "x" +
                              std::to_string(cols));
    }
  }
  std::sort(sorted.begin(), sorted.end(), [](const Triplet& a, const Triplet& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  });
  entries_.reserve(sorted.size());
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    std::uint32_t value = 0;
    while (j < sorted.size() && sorted[j].col == sorted[i].col && sorted[j].row == sorted[i].row) {
      value = field_.add(value, field_.reduce(sorted[j].value));
      ++j;
    }
    if (value != 0) {
      entries_.push_back(Entry{static_cast<std::uint32_t>(sorted[i].row), value});
      ++col_ptr_[sorted[i].col + 1];
    }
    i = j;
  }
  std::partial_sum(col_ptr_.begin(), col_ptr_.end(), col_ptr_.begin());
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<Triplet> t;
  t.reserve(entries_.size());
  for (std::size_t c = 0; c < cols_; ++c) {
    for (const Entry& e : column(c)) t.push_back(Triplet{c, e.row, e.value});
  }
  return SparseMatrix(cols_, rows_, field_, t);
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
  std::vector<std::uint32_t> acc(rows_, 0);
  std::vector<std::uint32_t> touched;
  std::vector<Triplet> out;
  for (std::size_t j = 0; j < rhs.cols_; ++j) {
    for (const Entry& e : rhs.column(j)) {
      for (const Entry& f : column(e.row)) {
        if (acc[f.row] == 0) touched.push_back(f.row);
        acc[f.row] = field_.add(acc[f.row], field_.mul(e.value, f.value));
      }
    }
    for (std::uint32_t r : touched) {
      if (acc[r] != 0) out.push_back(Triplet{r, j, acc[r]});
      acc[r] = 0;
    }
    touched.clear();
  }
  return SparseMatrix(rows_, rhs.cols_, field_, out);
}

std::size_t rank(const SparseMatrix& m) {
  const PrimeField& f = m.field();
  std::vector<std::size_t> order(m.cols());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&m](std::size_t a, std::size_t b) {
    return m.column(a).size() < m.column(b).size();
  });

  using Column = std::vector<SparseMatrix::Entry>;
  std::vector<Column> pivots;
  std::vector<std::int64_t> pivot_at(m.rows(), -1);  // pivot column whose lowest row is r
  Column work, next;
  for (std::size_t c : order) {
    auto col = m.column(c);
    work.assign(col.begin(), col.end());
    while (!work.empty()) {
      const std::uint32_t low = work.back().row;
      if (pivot_at[low] < 0) {
        pivot_at[low] = static_cast<std::int64_t>(pivots.size());
        pivots.push_back(work);
        break;
      }
      const Column& piv = pivots[static_cast<std::size_t>(pivot_at[low])];
      const std::uint32_t factor = f.mul(work.back().value, f.inv(piv.back().value));
      // work -= factor * piv, merging sorted row lists.
      next.clear();
      std::size_t i = 0, j = 0;
      while (i < work.size() || j < piv.size()) {
        if (j == piv.size() || (i < work.size() && work[i].row < piv[j].row)) {
          next.push_back(work[i++]);
        } else if (i == work.size() || piv[j].row < work[i].row) {
          next.push_back({piv[j].row, f.neg(f.mul(factor, piv[j].value))});
          ++j;
        } else {
          const std::uint32_t v = f.sub(work[i].value, f.mul(factor, piv[j].value));
          if (v != 0) next.push_back({work[i].row, v});
          ++i;
          ++j;
        }
      }
      std::swap(work, next);
    }
  }
  return pivots.size();
}

std::size_t CochainComplex::total_size() const {
  std::size_t total = 0;
  for (const auto& b : basis) total += b.size();
  return total;
}

namespace {

void check_shapes(const CochainComplex& cx) {
  const std::size_t expected = cx.basis.empty() ? 0 : cx.basis.size() - 1;
  if (cx.codifferential.size() != expected) {
    throw InvariantViolation("cochain complex has " + std::to_string(cx.codifferential.size()) +
                             " codifferentials for " + std::to_string(cx.basis.size()) +
                             " degrees");
  }
  for (std::size_t k = 0; k < cx.codifferential.size(); ++k) {
    const SparseMatrix& d = cx.codifferential[k];
    if (d.cols() != cx.basis[k].size() || d.rows() != cx.basis[k + 1].size()) {
      throw InvariantViolation("codifferential in degree " + std::to_string(k) +
                               " does not match the basis sizes");
    }
  }
}

}  // namespace

bool composes_to_zero(const CochainComplex& cx) {
  check_shapes(cx);
  for (std::size_t k = 0; k + 1 < cx.codifferential.size(); ++k) {
    if (cx.codifferential[k + 1].multiply(cx.codifferential[k]).nonzeros() != 0) return false;
  }
  return true;
}

std::vector<std::size_t> cohomology_dims(const CochainComplex& cx) {
  if (!composes_to_zero(cx)) {
    throw InvariantViolation("codifferentials do not compose to zero; the cell set is not locally closed");
  }
  const std::size_t n = cx.basis.size();
  std::vector<std::size_t> ranks(cx.codifferential.size());
  for (std::size_t k = 0; k < ranks.size(); ++k) ranks[k] = rank(cx.codifferential[k]);
  std::vector<std::size_t> dims(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t h = cx.basis[k].size();
    if (k < ranks.size()) h -= ranks[k];
    if (k > 0) h -= ranks[k - 1];
    dims[k] = h;
  }
  return dims;
}

}  // namespace stratify
