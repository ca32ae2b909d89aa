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

#include "stratify/generators.hpp"

#include <stdexcept>

namespace stratify::gen {

Simplices circle(int n) {
  if (n < 3) throw std::invalid_argument("circle needs at least 3 vertices");
  Simplices out;
  for (int i = 0; i < n; ++i) out.push_back({i, (i + 1) % n});
  return out;
}

Simplices tetrahedron_boundary() { return {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}; }

Simplices grid_torus(int a, int b) {
  if (a < 3 || b < 3) throw std::invalid_argument("grid torus needs a, b >= 3");
  auto id = [b](int i, int j) { return static_cast<VertexId>(i) * b + j; };
  Simplices out;
  out.reserve(static_cast<std::size_t>(2) * a * b);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) {
      const int i1 = (i + 1) % a;
      const int j1 = (j + 1) % b;
      out.push_back({id(i, j), id(i1, j), id(i1, j1)});
      out.push_back({id(i, j), id(i1, j1), id(i, j1)});
    }
  }
  return out;
}

Simplices pinched_torus_with_disk(int a, int b) {
  if (a < 4 || b < 3) throw std::invalid_argument("pinched torus needs a >= 4, b >= 3");
  // Every vertex of the meridian i = 0 maps to the pinch vertex 0.
  auto collapse = [b](VertexId v) { return v < b ? VertexId{0} : v; };
  Simplices out;
  for (const auto& t : grid_torus(a, b)) {
    std::vector<VertexId> image{collapse(t[0]), collapse(t[1]), collapse(t[2])};
    if (image[0] == image[1] || image[0] == image[2] || image[1] == image[2]) continue;
    out.push_back(std::move(image));
  }
  const VertexId apex = static_cast<VertexId>(a) * b;
  for (int i = 0; i < a; ++i) {
    const VertexId u = collapse(static_cast<VertexId>(i) * b);
    const VertexId v = collapse(static_cast<VertexId>((i + 1) % a) * b);
    out.push_back({apex, u, v});
  }
  return out;
}

Simplices cone_over_wedge(int circles, int length) {
  if (circles < 1 || length < 3) throw std::invalid_argument("cone over wedge needs circles >= 1, length >= 3");
  Simplices out;
  VertexId next = 2;
  for (int c = 0; c < circles; ++c) {
    std::vector<VertexId> cycle{1};
    for (int k = 1; k < length; ++k) cycle.push_back(next++);
    for (int k = 0; k < length; ++k) out.push_back({0, cycle[k], cycle[(k + 1) % length]});
  }
  return out;
}

}  // namespace stratify::gen
