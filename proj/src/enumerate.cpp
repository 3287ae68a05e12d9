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

#include "chromalab/enumerate.hpp"

#include <algorithm>
#include <map>

#include "chromalab/automorphisms.hpp"
#include "chromalab/graph6.hpp"

namespace chromalab {

namespace {

// Every connected graph on n vertices arises from a connected graph on
// n-1 vertices (delete a non-cut vertex) by re-attaching one vertex to
// a non-empty neighbor set, so augmenting every class representative
// with every subset is exhaustive; canonical dedup keeps one per class.
std::vector<Graph> augment_all(const std::vector<Graph>& smaller,
                               bool leaf_only) {
    std::map<std::string, Graph> seen;
    for (const Graph& g : smaller) {
        const int n = g.order();
        const std::uint64_t subsets = std::uint64_t{1} << n;
        for (std::uint64_t s = 1; s < subsets; ++s) {
            if (leaf_only && std::popcount(s) != 1) continue;
            auto edges = g.edges();
            for (std::uint64_t m = s; m; m &= m - 1)
                edges.emplace_back(std::countr_zero(m), n);
            Graph candidate(n + 1, edges);
            Graph canon = canonical_relabel(candidate);
            seen.try_emplace(write_graph6(canon), std::move(canon));
        }
    }
    std::vector<Graph> out;
    out.reserve(seen.size());
    for (auto& [key, g] : seen) out.push_back(std::move(g));
    return out;
}

std::vector<Graph> enumerate_level(int n, int max_order, bool trees, const char* what) {
    if (n < 1 || n > max_order)
        throw CapError(std::string(what) + " enumeration supports 1 <= n <= " +
                       std::to_string(max_order) + ", got " + std::to_string(n));
    std::vector<Graph> level = {Graph(1, {})};
    for (int size = 2; size <= n; ++size) level = augment_all(level, trees);
    return level;
}

}  // namespace

std::vector<Graph> enumerate_connected_graphs(int n) {
    return enumerate_level(n, kMaxEnumGraphOrder, false, "connected graph");
}

std::vector<Graph> enumerate_trees(int n) {
    return enumerate_level(n, kMaxEnumTreeOrder, true, "tree");
}

std::vector<Graph> enumerate_connected_graphs_upto(int nmax) {
    std::vector<Graph> out;
    for (int n = 1; n <= nmax; ++n) {
        auto level = enumerate_connected_graphs(n);
        std::move(level.begin(), level.end(), std::back_inserter(out));
    }
    return out;
}

std::vector<Graph> enumerate_trees_upto(int nmax) {
    std::vector<Graph> out;
    for (int n = 1; n <= nmax; ++n) {
        auto level = enumerate_trees(n);
        std::move(level.begin(), level.end(), std::back_inserter(out));
    }
    return out;
}

}  // namespace chromalab
