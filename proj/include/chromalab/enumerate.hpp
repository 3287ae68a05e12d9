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

#ifndef CHROMALAB_ENUMERATE_HPP
#define CHROMALAB_ENUMERATE_HPP

#include <vector>

#include "chromalab/graph.hpp"

namespace chromalab {

inline constexpr int kMaxEnumGraphOrder = 7;
inline constexpr int kMaxEnumTreeOrder = 10;

// Exactly one canonically relabeled representative per isomorphism
// class of connected graphs on exactly n vertices, sorted by canonical
// key. Grown by vertex augmentation from the (n-1)-vertex classes with
// canonical-form dedup. Throws CapError for n > kMaxEnumGraphOrder.
std::vector<Graph> enumerate_connected_graphs(int n);

// Same contract for free trees on exactly n vertices (leaf
// augmentation). Throws CapError for n > kMaxEnumTreeOrder.
std::vector<Graph> enumerate_trees(int n);

// Concatenation of the per-order streams for 1..nmax, ascending.
std::vector<Graph> enumerate_connected_graphs_upto(int nmax);
std::vector<Graph> enumerate_trees_upto(int nmax);

}  // namespace chromalab

#endif  // CHROMALAB_ENUMERATE_HPP
