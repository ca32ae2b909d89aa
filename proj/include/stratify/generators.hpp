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

#include <vector>

#include "stratify/complex.hpp"

// Maximal-simplex lists for the standard test spaces.

namespace stratify::gen {

using Simplices = std::vector<std::vector<VertexId>>;

/// Cycle on n >= 3 vertices.
Simplices circle(int n);

/// Boundary of the tetrahedron (a triangulated 2-sphere).
Simplices tetrahedron_boundary();

/// Flat torus from an a x b grid (a, b >= 3), each square split along the
/// same diagonal. Vertex (i, j) has id i * b + j. 6ab cells, every vertex star
/// has 13 cells.
Simplices grid_torus(int a, int b);

/// The grid torus with the meridian i = 0 collapsed to one pinch vertex, plus a
/// disk coned over the equator j = 0 (which runs through the pinch point).
/// Requires a >= 4, b >= 3. The pinch vertex has id 0 and the cone apex id
/// a * b.
Simplices pinched_torus_with_disk(int a, int b);

/// Cone (apex id 0) over a wedge of `circles` cycles of `length` >= 3 vertices
/// sharing the wedge point (id 1).
Simplices cone_over_wedge(int circles, int length);

}  // namespace stratify::gen
