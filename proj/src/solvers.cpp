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

#include "chromalab/solvers.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "chromalab/automorphisms.hpp"

namespace chromalab {

bool twin_vertices(const Graph& g, int u, int v) {
    const std::uint64_t self = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    return (g.neighbor_mask(u) & ~self) == (g.neighbor_mask(v) & ~self);
}

namespace {

// Scanning listed group elements per search node stays cheap only for
// small groups; larger listed groups are still scanned once per leaf.
constexpr std::uint64_t kSupportPruneOrderCap = 2048;
constexpr std::uint64_t kLeafScanOrderCap = 20000;

void check_cap(const Graph& g, int cap, const char* what) {
    if (g.order() > cap)
        throw CapError(std::string(what) + " capped at n=" + std::to_string(cap) +
                       ", got n=" + std::to_string(g.order()));
}

int greedy_clique_bound(const Graph& g) {
    const int n = g.order();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });
    int best = 1;
    for (int start : order) {
        int size = 1;
        std::uint64_t cand = g.neighbor_mask(start);
        for (int u : order) {
            if (!((cand >> u) & 1)) continue;
            ++size;
            cand &= g.neighbor_mask(u);
        }
        best = std::max(best, size);
    }
    return best;
}

// Proper-coloring DFS over exactly-k-color assignments: vertices in
// index order, colors ascending, new colors introduced in first-use
// order. Prune(v, c) may reject an assignment; Leaf() accepts a
// complete coloring and stops the search.
struct ColoringSearch {
    const Graph& g;
    int k;
    std::vector<int> colors;  // 1-based, 0 = unassigned
    int max_used = 0;

    ColoringSearch(const Graph& graph, int num_colors)
        : g(graph), k(num_colors), colors(graph.order(), 0) {}

    template <typename Prune, typename Leaf>
    bool run(Prune&& prune, Leaf&& leaf) {
        return descend(0, prune, leaf);
    }

    template <typename Prune, typename Leaf>
    bool descend(int v, Prune& prune, Leaf& leaf) {
        const int n = g.order();
        if (v == n) return max_used == k && leaf();
        if (k - max_used > n - v) return false;  // cannot reach k colors
        const int limit = std::min(max_used + 1, k);
        const std::uint64_t below = (std::uint64_t{1} << v) - 1;
        for (int c = 1; c <= limit; ++c) {
            bool proper = true;
            for (std::uint64_t m = g.neighbor_mask(v) & below; m; m &= m - 1)
                if (colors[std::countr_zero(m)] == c) {
                    proper = false;
                    break;
                }
            if (!proper) continue;
            const int prev_max = max_used;
            colors[v] = c;
            max_used = std::max(max_used, c);
            if (prune(v, c) && descend(v + 1, prune, leaf)) return true;
            colors[v] = 0;
            max_used = prev_max;
        }
        return false;
    }
};

// True when some completion can still give u and v different color
// codes. v is the most recently assigned vertex; all w > v are free.
bool pair_separable(const Graph& g, const std::vector<int>& colors, int max_used, int u, int v) {
    const int n = g.order();
    for (int w = v + 1; w < n; ++w)
        if (g.dist(u, w) != g.dist(v, w)) return true;
    for (int i = 1; i <= max_used; ++i) {
        int du = n + 1, dv = n + 1;
        for (int w = 0; w <= v; ++w) {
            if (colors[w] != i) continue;
            du = std::min(du, g.dist(u, w));
            dv = std::min(dv, g.dist(v, w));
        }
        if (du != dv) return true;
    }
    return false;
}

bool codes_all_distinct(const Graph& g, const std::vector<int>& colors, int k) {
    const int n = g.order();
    std::vector<std::vector<int>> codes(n, std::vector<int>(k, n + 1));
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u) {
            int& entry = codes[v][colors[u] - 1];
            entry = std::min(entry, g.dist(v, u));
        }
    std::sort(codes.begin(), codes.end());
    return std::adjacent_find(codes.begin(), codes.end()) == codes.end();
}

}  // namespace

ColoringResult chromatic_number(const Graph& g, int vertex_cap) {
    check_cap(g, vertex_cap, "chromatic solver");
    const int n = g.order();
    for (int k = std::max(greedy_clique_bound(g), 1); k <= n; ++k) {
        ColoringSearch search(g, k);
        if (search.run([](int, int) { return true; }, [] { return true; }))
            return {k, ColorPartition(k, search.colors)};
    }
    throw std::logic_error("chromatic search failed to terminate");
}

ColoringResult locating_chromatic_number(const Graph& g, int vertex_cap) {
    check_cap(g, vertex_cap, "locating solver");
    const int n = g.order();
    for (int k = chromatic_number(g, vertex_cap).value; k <= n; ++k) {
        ColoringSearch search(g, k);
        auto prune = [&](int v, int c) {
            for (int u = 0; u < v; ++u)
                if (search.colors[u] == c &&
                    !pair_separable(g, search.colors, search.max_used, u, v))
                    return false;
            return true;
        };
        auto leaf = [&] { return codes_all_distinct(g, search.colors, k); };
        if (search.run(prune, leaf)) return {k, ColorPartition(k, search.colors)};
    }
    throw std::logic_error("locating search failed to terminate");
}

ColoringResult distinguishing_chromatic_number(const Graph& g, int vertex_cap) {
    check_cap(g, vertex_cap, "distinguishing solver");
    const int n = g.order();
    const AutGroup aut = automorphisms(g, std::max(vertex_cap, n));

    const ColoringResult chi = chromatic_number(g, vertex_cap);
    if (aut.order == 1) return chi;  // every proper coloring distinguishes a rigid graph

    const bool support_prune = aut.listed() && aut.order <= kSupportPruneOrderCap;
    const bool leaf_scan = aut.listed() && aut.order <= kLeafScanOrderCap;

    for (int k = chi.value; k <= n; ++k) {
        ColoringSearch search(g, k);
        auto prune = [&](int v, int c) {
            for (int u = 0; u < v; ++u)
                if (search.colors[u] == c && twin_vertices(g, u, v)) return false;
            if (support_prune) {
                // An automorphism whose support is fully colored and
                // color-preserving survives every completion.
                for (const auto& f : aut.elements) {
                    bool applies = false;
                    for (int w = 0; w < n; ++w) {
                        if (f[w] == w) continue;
                        if (w > v || f[w] > v || search.colors[w] != search.colors[f[w]]) {
                            applies = false;
                            break;
                        }
                        applies = true;
                    }
                    if (applies) return false;
                }
            }
            return true;
        };
        auto leaf = [&] {
            if (leaf_scan) {
                for (const auto& f : aut.elements) {
                    bool preserving = true, moved = false;
                    for (int w = 0; w < n; ++w) {
                        if (f[w] != w) moved = true;
                        if (search.colors[f[w]] != search.colors[w]) {
                            preserving = false;
                            break;
                        }
                    }
                    if (moved && preserving) return false;
                }
                return true;
            }
            ColorPartition c(k, search.colors);
            return !find_color_preserving_automorphism(g, c).has_value();
        };
        if (search.run(prune, leaf)) return {k, ColorPartition(k, search.colors)};
    }
    throw std::logic_error("distinguishing search failed to terminate");
}

ResolvingResult metric_dimension(const Graph& g, int vertex_cap) {
    check_cap(g, vertex_cap, "metric dimension solver");
    const int n = g.order();
    if (n == 1) return {0, {}};

    // Twin-class lower bound: a class with equal open (or closed)
    // neighborhoods can leave at most one vertex outside W.
    int lb = 1;
    for (bool closed : {false, true}) {
        std::map<std::uint64_t, int> classes;
        for (int v = 0; v < n; ++v) {
            std::uint64_t key = g.neighbor_mask(v);
            if (closed) key |= std::uint64_t{1} << v;
            ++classes[key];
        }
        int bound = 0;
        for (const auto& [key, count] : classes) bound += count - 1;
        lb = std::max(lb, bound);
    }

    for (int s = std::max(lb, 1); s <= n - 1; ++s) {
        std::vector<int> w(s);
        std::iota(w.begin(), w.end(), 0);
        while (true) {
            if (is_resolving(g, w)) return {s, w};
            // next lexicographic s-combination of {0..n-1}
            int i = s - 1;
            while (i >= 0 && w[i] == n - s + i) --i;
            if (i < 0) break;
            ++w[i];
            for (int j = i + 1; j < s; ++j) w[j] = w[j - 1] + 1;
        }
    }
    throw std::logic_error("metric dimension search failed to terminate");
}

}  // namespace chromalab
