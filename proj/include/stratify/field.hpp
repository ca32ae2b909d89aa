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
#include <span>
#include <vector>

namespace stratify {

bool is_prime(std::uint64_t n);

/// Arithmetic in GF(p). Elements are plain integers in [0, p).
class PrimeField {
 public:
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p = 2);

  std::uint32_t characteristic() const { return p_; }

  std::uint32_t reduce(std::int64_t v) const {
    const std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// Multiplicative inverse of a nonzero element.
  std::uint32_t inv(std::uint32_t a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

struct Triplet {
  std::size_t row;
  std::size_t col;
  std::int64_t value;
};

/**
 * \brief Sparse matrix over GF(p), stored column-compressed.
 *
 * Construction sums duplicate positions and drops zeros, so the stored entries
 * are always distinct and nonzero. Row indices are sorted inside each column.
 */
class SparseMatrix {
 public:
  struct Entry {
    std::uint32_t row;
    std::uint32_t value;
  };

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols, PrimeField field);
  /// Throws std::out_of_range on positions outside the matrix.
  SparseMatrix(std::size_t rows, std::size_t cols, PrimeField field, std::span<const Triplet> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const { return entries_.size(); }
  const PrimeField& field() const { return field_; }

  std::span<const Entry> column(std::size_t c) const {
    return {entries_.data() + col_ptr_[c], entries_.data() + col_ptr_[c + 1]};
  }

  SparseMatrix transpose() const;
  /// Returns this * rhs.
  SparseMatrix multiply(const SparseMatrix& rhs) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  PrimeField field_;
  std::vector<std::size_t> col_ptr_{0};
  std::vector<Entry> entries_;
};

/// GF(p) rank by sparse column elimination. Columns are processed in order of
/// increasing fill; the result does not depend on that order.
std::size_t rank(const SparseMatrix& m);

struct CochainComplex;

/// dim H^k = n_k - rank(d^k) - rank(d^{k-1}) for every degree of `cx`.
/// Throws InvariantViolation if consecutive codifferentials do not compose to zero.
std::vector<std::size_t> cohomology_dims(const CochainComplex& cx);

}  // namespace stratify
