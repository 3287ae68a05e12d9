// Copyright 2026 chromalab contributors
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

#ifndef CHROMALAB_SOLVERS_HPP
#define CHROMALAB_SOLVERS_HPP

#include "chromalab/color_partition.hpp"
#include "chromalab/coloring.hpp"
#include "chromalab/graph.hpp"

namespace chromalab {

inline constexpr int kDefaultSolverCap = 16;

struct ColoringResult {
    int value;
    ColorPartition witness;
};

struct ResolvingResult {
    int value;
    ResolvingSet witness;
};

// All four solvers share the same contract: exact value plus the
// lexicographically least optimal witness under ascending vertex order
// and first-use color order. They throw CapError when
// g.order() > vertex_cap.

// Iterative deepening from a greedy clique lower bound.
ColoringResult chromatic_number(const Graph& g, int vertex_cap = kDefaultSolverCap);

// Minimum k admitting a locating k-coloring. Within fixed k the proper
// coloring backtracker prunes same-colored pairs whose color codes can
// no longer diverge in any completion.
ColoringResult locating_chromatic_number(const Graph& g, int vertex_cap = kDefaultSolverCap);

// Minimum k admitting a distinguishing k-coloring. Prunes via twin
// transpositions and, for small listed groups, automorphisms whose
// support is already colored.
ColoringResult distinguishing_chromatic_number(const Graph& g, int vertex_cap = kDefaultSolverCap);

// Minimum resolving set, by increasing-size subset search with a
// twin-class lower bound.
ResolvingResult metric_dimension(const Graph& g, int vertex_cap = kDefaultSolverCap);

// d(u,x) = d(v,x) for every other vertex x; such pairs are swappable by
// a transposition automorphism and unresolvable by outside vertices.
bool twin_vertices(const Graph& g, int u, int v);

}  // namespace chromalab

#endif  // CHROMALAB_SOLVERS_HPP
