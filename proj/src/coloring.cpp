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

#include "chromalab/coloring.hpp"

#include <algorithm>

#include "chromalab/automorphisms.hpp"

namespace chromalab {

ColorCode color_code(const Graph& g, const ColorPartition& c, int v) {
    const int n = g.order();
    ColorCode code(c.num_colors(), n);
    for (int u = 0; u < n; ++u) {
        int& entry = code[c.color(u) - 1];
        entry = std::min(entry, g.dist(v, u));
    }
    return code;
}

std::vector<ColorCode> color_codes(const Graph& g, const ColorPartition& c) {
    std::vector<ColorCode> codes;
    codes.reserve(g.order());
    for (int v = 0; v < g.order(); ++v) codes.push_back(color_code(g, c, v));
    return codes;
}

bool is_proper(const Graph& g, const ColorPartition& c) {
    for (auto [u, v] : g.edges())
        if (c.color(u) == c.color(v)) return false;
    return true;
}

bool is_locating(const Graph& g, const ColorPartition& c) {
    if (!is_proper(g, c)) return false;
    auto codes = color_codes(g, c);
    std::sort(codes.begin(), codes.end());
    return std::adjacent_find(codes.begin(), codes.end()) == codes.end();
}

bool is_distinguishing(const Graph& g, const ColorPartition& c) {
    if (!is_proper(g, c)) return false;
    return !find_color_preserving_automorphism(g, c).has_value();
}

std::vector<int> metric_representation(const Graph& g, const ResolvingSet& w, int v) {
    std::vector<int> rep;
    rep.reserve(w.size());
    for (int wi : w) rep.push_back(g.dist(v, wi));
    return rep;
}

bool is_resolving(const Graph& g, const ResolvingSet& w) {
    std::vector<std::vector<int>> reps;
    reps.reserve(g.order());
    for (int v = 0; v < g.order(); ++v) reps.push_back(metric_representation(g, w, v));
    std::sort(reps.begin(), reps.end());
    return std::adjacent_find(reps.begin(), reps.end()) == reps.end();
}

}  // namespace chromalab
