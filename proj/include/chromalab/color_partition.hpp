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

#ifndef CHROMALAB_COLOR_PARTITION_HPP
#define CHROMALAB_COLOR_PARTITION_HPP

#include <vector>

#include "chromalab/graph.hpp"

namespace chromalab {

// Surjective assignment of colors 1..k to vertices 0..n-1. The classes
// V_1..V_k partition the vertex set; every color is used at least once.
class ColorPartition {
public:
    // assignment[v] is the color of v, in 1..k; all k colors must appear.
    ColorPartition(int k, std::vector<int> assignment);

    // Builds from explicit classes; classes[i] holds the vertices of
    // color i+1. The classes must partition {0..n-1} and be non-empty.
    static ColorPartition from_classes(int n, const std::vector<std::vector<int>>& classes);

    int num_colors() const { return k_; }
    int size() const { return static_cast<int>(assignment_.size()); }
    int color(int v) const { return assignment_[v]; }
    const std::vector<int>& assignment() const { return assignment_; }

    std::vector<std::vector<int>> classes() const;

    bool operator==(const ColorPartition&) const = default;

private:
    int k_;
    std::vector<int> assignment_;
};

}  // namespace chromalab

#endif  // CHROMALAB_COLOR_PARTITION_HPP
