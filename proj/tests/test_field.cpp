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

#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "stratify/cochain.hpp"
#include "stratify/field.hpp"

using namespace stratify;

namespace {

SparseMatrix from_dense(const oracle::Matrix& d, std::size_t cols, const PrimeField& f) {
  std::vector<Triplet> t;
  for (std::size_t r = 0; r < d.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (d[r][c] != 0) t.push_back({r, c, d[r][c]});
    }
  }
  return SparseMatrix(d.size(), cols, f, t);
}

oracle::Matrix random_dense(std::mt19937& rng, std::size_t rows, std::size_t cols, std::uint32_t p, double fill) {
  std::bernoulli_distribution nonzero(fill);
  std::uniform_int_distribution<std::int64_t> value(1, p - 1);
  oracle::Matrix m(rows, std::vector<std::int64_t>(cols, 0));
  for (auto& row : m) {
    for (auto& v : row) {
      if (nonzero(rng)) v = value(rng);
    }
  }
  return m;
}

}  // namespace

TEST_SUITE("field") {

TEST_CASE("primality and field construction") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
  CHECK_NOTHROW(PrimeField(2147483629));
}

TEST_CASE("field arithmetic") {
  const PrimeField f(7);
  CHECK(f.reduce(-1) == 6);
  CHECK(f.reduce(15) == 1);
  CHECK(f.add(5, 4) == 2);
  CHECK(f.sub(2, 5) == 4);
  CHECK(f.neg(3) == 4);
  CHECK(f.neg(0) == 0);
  CHECK(f.mul(3, 5) == 1);
  for (std::uint32_t a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  const PrimeField big(2147483647);
  CHECK(big.mul(big.inv(123456789), 123456789) == 1);
  CHECK(PrimeField(2).inv(1) == 1);
}

TEST_CASE("sparse construction sums duplicates and drops zeros") {
  const PrimeField f(3);
  const std::vector<Triplet> t{{0, 0, 1}, {0, 0, 2}, {1, 0, 1}, {1, 1, -1}, {0, 1, 4}};
  const SparseMatrix m(2, 2, f, t);
  CHECK(m.nonzeros() == 3);
  REQUIRE(m.column(0).size() == 1);
  CHECK(m.column(0)[0].row == 1);
  REQUIRE(m.column(1).size() == 2);
  CHECK(m.column(1)[0].row == 0);
  CHECK(m.column(1)[0].value == 1);
  CHECK(m.column(1)[1].value == 2);
  const std::vector<Triplet> bad{{2, 0, 1}};
  CHECK_THROWS_AS(SparseMatrix(2, 2, f, bad), std::out_of_range);
}

TEST_CASE("rank examples") {
  const PrimeField f(2);
  const std::vector<Triplet> id{{0, 0, 1}, {1, 1, 1}, {2, 2, 1}};
  CHECK(rank(SparseMatrix(3, 3, f, id)) == 3);
  const std::vector<Triplet> row{{0, 0, 1}, {0, 1, 1}};
  CHECK(rank(SparseMatrix(1, 2, f, row)) == 1);
  // Coboundary of the closed 2-simplex from edges to the triangle.
  const std::vector<Triplet> d1{{0, 0, 1}, {0, 1, -1}, {0, 2, 1}};
  CHECK(rank(SparseMatrix(1, 3, f, d1)) == 1);
  CHECK(rank(SparseMatrix(0, 0, f)) == 0);
  CHECK(rank(SparseMatrix(4, 5, f)) == 0);
  // [[1,1],[1,1]] has rank 1 over any field; [[1,1],[1,-1]] has rank 1 over GF(2) only.
  const std::vector<Triplet> h{{0, 0, 1}, {0, 1, 1}, {1, 0, 1}, {1, 1, -1}};
  CHECK(rank(SparseMatrix(2, 2, PrimeField(2), h)) == 1);
  CHECK(rank(SparseMatrix(2, 2, PrimeField(3), h)) == 2);
}

TEST_CASE("property: sparse rank equals dense rank, also after transposing") {
  std::mt19937 rng(42);
  for (std::uint32_t p : {2u, 3u, 7u, 65521u}) {
    const PrimeField f(p);
    for (int trial = 0; trial < 60; ++trial) {
      std::uniform_int_distribution<std::size_t> dim(0, 50);
      std::uniform_real_distribution<double> fill(0.02, 0.6);
      const std::size_t rows = dim(rng);
      const std::size_t cols = dim(rng);
      auto dense = random_dense(rng, rows, cols, p, fill(rng));
      // Duplicate a few rows and columns so that rank deficiency is common.
      if (rows > 2) dense[rows - 1] = dense[0];
      const SparseMatrix m = from_dense(dense, cols, f);
      const std::size_t expected = oracle::dense_rank(dense, p);
      CAPTURE(p);
      CAPTURE(rows);
      CAPTURE(cols);
      CHECK(rank(m) == expected);
      CHECK(rank(m.transpose()) == expected);
    }
  }
}

TEST_CASE("multiply and transpose") {
  const PrimeField f(5);
  const std::vector<Triplet> a{{0, 0, 1}, {0, 1, 2}, {1, 1, 3}};
  const std::vector<Triplet> b{{0, 0, 4}, {1, 0, 1}, {1, 1, 1}};
  const SparseMatrix ab = SparseMatrix(2, 2, f, a).multiply(SparseMatrix(2, 2, f, b));
  // [[1,2],[0,3]] * [[4,0],[1,1]] = [[6,2],[3,3]] = [[1,2],[3,3]] mod 5
  REQUIRE(ab.column(0).size() == 2);
  CHECK(ab.column(0)[0].value == 1);
  CHECK(ab.column(0)[1].value == 3);
  CHECK(ab.column(1)[0].value == 2);
  CHECK(ab.column(1)[1].value == 3);
  const SparseMatrix t = SparseMatrix(2, 3, f, std::vector<Triplet>{{1, 2, 4}}).transpose();
  CHECK(t.rows() == 3);
  CHECK(t.cols() == 2);
  CHECK(t.column(1)[0].row == 2);
  CHECK_THROWS_AS(SparseMatrix(2, 3, f).multiply(SparseMatrix(2, 3, f)), std::invalid_argument);
}

TEST_CASE("cohomology of small complexes") {
  const PrimeField f(2);
  // 0 -> R in degree 2 only.
  CochainComplex point{f, {{}, {}, {7}}, {SparseMatrix(0, 0, f), SparseMatrix(1, 0, f)}};
  CHECK(cohomology_dims(point) == std::vector<std::size_t>{0, 0, 1});
  // R -> R^2 with a rank-one map, degrees 1 and 2.
  const std::vector<Triplet> y{{0, 0, 1}, {1, 0, -1}};
  CochainComplex edge{f, {{}, {1}, {2, 3}}, {SparseMatrix(1, 0, f), SparseMatrix(2, 1, f, y)}};
  CHECK(cohomology_dims(edge) == std::vector<std::size_t>{0, 0, 1});
  // R -> R, rank one: acyclic.
  const std::vector<Triplet> w{{0, 0, 1}};
  CochainComplex arc{f, {{}, {1}, {2}}, {SparseMatrix(1, 0, f), SparseMatrix(1, 1, f, w)}};
  CHECK(cohomology_dims(arc) == std::vector<std::size_t>{0, 0, 0});
  CHECK(cohomology_dims(CochainComplex{f, {}, {}}).empty());
}

TEST_CASE("non-composing codifferentials are rejected") {
  const PrimeField f(3);
  const std::vector<Triplet> a{{0, 0, 1}};
  CochainComplex bad{f, {{0}, {1}, {2}}, {SparseMatrix(1, 1, f, a), SparseMatrix(1, 1, f, a)}};
  CHECK_FALSE(composes_to_zero(bad));
  CHECK_THROWS_AS(cohomology_dims(bad), InvariantViolation);
  CochainComplex shape{f, {{0}, {1, 2}}, {SparseMatrix(1, 1, f)}};
  CHECK_THROWS_AS(composes_to_zero(shape), InvariantViolation);
}

TEST_CASE("property: Euler characteristic of random chain complexes") {
  std::mt19937 rng(7);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const PrimeField f(p);
    for (int trial = 0; trial < 40; ++trial) {
      std::uniform_int_distribution<std::size_t> dim(0, 12);
      const std::size_t n0 = dim(rng), n1 = dim(rng), n2 = dim(rng);
      const auto d0 = random_dense(rng, n1, n0, p, 0.4);
      // Rows of d1 are combinations of the left kernel of d0, so d1 d0 = 0.
      oracle::Matrix d0t(n0, std::vector<std::int64_t>(n1));
      for (std::size_t r = 0; r < n1; ++r) {
        for (std::size_t c = 0; c < n0; ++c) d0t[c][r] = d0[r][c];
      }
      const auto left_kernel = oracle::kernel_basis(d0t, n1, p);
      oracle::Matrix d1(n2, std::vector<std::int64_t>(n1, 0));
      std::uniform_int_distribution<std::int64_t> coef(0, p - 1);
      for (auto& row : d1) {
        for (const auto& k : left_kernel) {
          const std::int64_t c = coef(rng);
          for (std::size_t i = 0; i < n1; ++i) row[i] = (row[i] + c * k[i]) % p;
        }
      }
      CochainComplex cx{f, {std::vector<CellId>(n0), std::vector<CellId>(n1), std::vector<CellId>(n2)},
                        {from_dense(d0, n0, f), from_dense(d1, n1, f)}};
      REQUIRE(composes_to_zero(cx));
      const auto h = cohomology_dims(cx);
      CHECK(static_cast<long>(n0) - static_cast<long>(n1) + static_cast<long>(n2) ==
            static_cast<long>(h[0]) - static_cast<long>(h[1]) + static_cast<long>(h[2]));
      CHECK(h[0] == n0 - oracle::dense_rank(d0, p));
    }
  }
}

}  // TEST_SUITE
