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

#ifndef CHROMALAB_COLORING_HPP
#define CHROMALAB_COLORING_HPP

#include <vector>

#include "chromalab/color_partition.hpp"
#include "chromalab/graph.hpp"

namespace chromalab {

// Ordered k-tuple (d(v,V_1), ..., d(v,V_k)).
using ColorCode = std::vector<int>;

ColorCode color_code(const Graph& g, const ColorPartition& c, int v);

// All n color codes under c, indexed by vertex.
std::vector<ColorCode> color_codes(const Graph& g, const ColorPartition& c);

// No edge joins two vertices of the same color.
bool is_proper(const Graph& g, const ColorPartition& c);

// Proper and all color codes pairwise distinct.
bool is_locating(const Graph& g, const ColorPartition& c);

// Proper and preserved by no automorphism except the identity.
bool is_distinguishing(const Graph& g, const ColorPartition& c);

// Ordered vertex list W = (w_1, ..., w_k).
using ResolvingSet = std::vector<int>;

// r_W(v) = (d(v,w_1), ..., d(v,w_k)).
std::vector<int> metric_representation(const Graph& g, const ResolvingSet& w, int v);

// All n representations pairwise distinct.
bool is_resolving(const Graph& g, const ResolvingSet& w);

}  // namespace chromalab

#endif  // CHROMALAB_COLORING_HPP
