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

#include <algorithm>
#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "stratify/complex.hpp"
#include "stratify/io.hpp"

// Shared fixtures and random complexes for the test binaries.

namespace testsupport {

inline std::filesystem::path fixture_dir() { return STRATIFY_FIXTURE_DIR; }

struct Fixture {
  std::string file;
  stratify::InputFormat format;
};

inline const std::vector<Fixture>& all_fixtures() {
  static const std::vector<Fixture> fixtures{
      {"circle4.txt", stratify::InputFormat::kSimplices},
      {"triangle.txt", stratify::InputFormat::kSimplices},
      {"tetra_boundary.txt", stratify::InputFormat::kSimplices},
      {"torus_4x4.txt", stratify::InputFormat::kSimplices},
      {"parallelogram_fin.txt", stratify::InputFormat::kSimplices},
      {"two_cone_disks.json", stratify::InputFormat::kCw},
      {"pinched_torus_disk.txt", stratify::InputFormat::kSimplices},
      {"cone_wedge_2x3.txt", stratify::InputFormat::kSimplices},
      {"cone_wedge_3x4.txt", stratify::InputFormat::kSimplices},
      {"cw_circle.json", stratify::InputFormat::kCw},
  };
  return fixtures;
}

inline stratify::LabeledComplex load_fixture(const Fixture& f) {
  return stratify::load_complex(fixture_dir() / f.file, f.format);
}

inline stratify::LabeledComplex load_fixture(const std::string& file) {
  for (const Fixture& f : all_fixtures()) {
    if (f.file == file) return load_fixture(f);
  }
  throw std::invalid_argument("unknown fixture " + file);
}

/// Cell id in a labeled complex by label.
inline stratify::CellId by_label(const stratify::LabeledComplex& lc, const std::string& label) {
  const auto it = std::find(lc.labels.begin(), lc.labels.end(), label);
  if (it == lc.labels.end()) throw std::invalid_argument("no cell labeled " + label);
  return static_cast<stratify::CellId>(it - lc.labels.begin());
}

/// Random pure-or-mixed 2-dimensional simplicial complex on at most
/// `max_vertices` vertices: random triangles, a few dangling edges and
/// sometimes an isolated vertex.
inline std::vector<std::vector<stratify::VertexId>> random_2d(std::mt19937& rng, int max_vertices) {
  std::uniform_int_distribution<int> nv_dist(4, max_vertices - 1);  // one id kept for an isolated vertex
  const int nv = nv_dist(rng);
  std::uniform_int_distribution<int> vertex(0, nv - 1);
  std::uniform_int_distribution<int> tri_count(1, 2 * nv);
  std::set<std::vector<stratify::VertexId>> simplices;
  const int triangles = tri_count(rng);
  // Triangles are drawn near each other so that the result is not mostly
  // isolated fins.
  for (int t = 0; t < triangles; ++t) {
    const int a = vertex(rng);
    std::uniform_int_distribution<int> near(-3, 3);
    std::vector<stratify::VertexId> s{a, (a + nv + near(rng)) % nv, (a + nv + near(rng)) % nv};
    std::sort(s.begin(), s.end());
    if (std::unique(s.begin(), s.end()) != s.end()) continue;
    simplices.insert(s);
  }
  std::uniform_int_distribution<int> extra(0, 3);
  for (int e = extra(rng); e > 0; --e) {
    std::vector<stratify::VertexId> s{vertex(rng), vertex(rng)};
    if (s[0] != s[1]) simplices.insert(s);
  }
  if (extra(rng) == 0) simplices.insert({nv});
  if (simplices.empty()) simplices.insert({0, 1, 2});
  return {simplices.begin(), simplices.end()};
}

/// Random simplicial complex of dimension up to 3 with at most `max_cells`
/// cells. Simplices are added until a random target size between a third of
/// the bound and the bound itself is reached.
inline stratify::SimplicialComplex random_small(std::mt19937& rng, std::size_t max_cells) {
  std::uniform_int_distribution<int> nv_dist(4, 24);
  const int nv = nv_dist(rng);
  std::uniform_int_distribution<std::size_t> target_dist(max_cells / 3, max_cells);
  const std::size_t target = target_dist(rng);
  std::uniform_int_distribution<int> vertex(0, nv - 1);
  std::uniform_int_distribution<int> size_dist(2, 4);
  std::uniform_int_distribution<int> near(0, 6);

  std::vector<std::vector<stratify::VertexId>> simplices;
  std::set<std::vector<stratify::VertexId>> faces;
  for (int attempts = 0; faces.size() < target && attempts < 1000; ++attempts) {
    const int size = std::min(size_dist(rng), nv);
    std::set<stratify::VertexId> s;
    const int base = vertex(rng);
    while (static_cast<int>(s.size()) < size) s.insert((base + near(rng)) % nv);
    const std::vector<stratify::VertexId> simplex(s.begin(), s.end());
    std::vector<std::vector<stratify::VertexId>> fresh;
    for (unsigned mask = 1; mask < (1u << simplex.size()); ++mask) {
      std::vector<stratify::VertexId> face;
      for (std::size_t i = 0; i < simplex.size(); ++i) {
        if (mask & (1u << i)) face.push_back(simplex[i]);
      }
      if (!faces.count(face)) fresh.push_back(std::move(face));
    }
    if (faces.size() + fresh.size() > max_cells) continue;
    faces.insert(fresh.begin(), fresh.end());
    simplices.push_back(simplex);
  }
  if (simplices.empty()) simplices.push_back({0, 1});
  return stratify::build_from_simplices(simplices);
}

}  // namespace testsupport
