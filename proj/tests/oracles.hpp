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

// Brute-force oracles for the test suite. Everything here recomputes
// predicates from first principles (permutation scans, exhaustive
// assignment enumeration, labeled-count identities) so the solvers and
// the symmetry machinery are checked against an independent path.

#ifndef CHROMALAB_TESTS_ORACLES_HPP
#define CHROMALAB_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "chromalab/graph.hpp"

namespace oracle {

using chromalab::Graph;

inline bool is_proper(const Graph& g, const std::vector<int>& col) {
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v) && col[u] == col[v]) return false;
    return true;
}

inline bool is_locating(const Graph& g, const std::vector<int>& col, int k) {
    if (!is_proper(g, col)) return false;
    const int n = g.order();
    std::vector<std::vector<int>> codes;
    for (int v = 0; v < n; ++v) {
        std::vector<int> code(k, 1 << 20);
        for (int u = 0; u < n; ++u) code[col[u] - 1] = std::min(code[col[u] - 1], g.dist(v, u));
        codes.push_back(std::move(code));
    }
    std::sort(codes.begin(), codes.end());
    return std::adjacent_find(codes.begin(), codes.end()) == codes.end();
}

inline bool is_automorphism(const Graph& g, const std::vector<int>& perm) {
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v) != g.adjacent(perm[u], perm[v])) return false;
    return true;
}

// Scans all n! permutations; independent of the backtracking search.
inline std::uint64_t automorphism_count(const Graph& g) {
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t count = 0;
    do {
        if (is_automorphism(g, perm)) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

inline bool is_distinguishing(const Graph& g, const std::vector<int>& col) {
    if (!is_proper(g, col)) return false;
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end())) {
        if (!is_automorphism(g, perm)) continue;
        bool preserving = true;
        for (int v = 0; v < g.order(); ++v)
            if (col[perm[v]] != col[v]) {
                preserving = false;
                break;
            }
        if (preserving) return false;  // non-identity color-preserving automorphism
    }
    return true;
}

// Visits every surjective assignment of colors 1..k to n vertices.
inline void for_each_surjective(int n, int k,
                                const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> col(n, 1);
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= k;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        std::uint64_t used = 0;
        for (int v = 0; v < n; ++v) {
            col[v] = static_cast<int>(c % k) + 1;
            used |= std::uint64_t{1} << col[v];
            c /= k;
        }
        if (std::popcount(used) == k) fn(col);
    }
}

inline int chi(const Graph& g) {
    for (int k = 1; k <= g.order(); ++k) {
        bool found = false;
        for_each_surjective(g.order(), k, [&](const std::vector<int>& col) {
            if (!found && is_proper(g, col)) found = true;
        });
        if (found) return k;
    }
    return g.order();
}

inline int chi_L(const Graph& g) {
    for (int k = 1; k <= g.order(); ++k) {
        bool found = false;
        for_each_surjective(g.order(), k, [&](const std::vector<int>& col) {
            if (!found && is_locating(g, col, k)) found = true;
        });
        if (found) return k;
    }
    return g.order();
}

inline int chi_D(const Graph& g) {
    for (int k = 1; k <= g.order(); ++k) {
        bool found = false;
        for_each_surjective(g.order(), k, [&](const std::vector<int>& col) {
            if (!found && is_distinguishing(g, col)) found = true;
        });
        if (found) return k;
    }
    return g.order();
}

inline bool is_resolving(const Graph& g, const std::vector<int>& w) {
    std::set<std::vector<int>> reps;
    for (int v = 0; v < g.order(); ++v) {
        std::vector<int> rep;
        for (int wi : w) rep.push_back(g.dist(v, wi));
        if (!reps.insert(rep).second) return false;
    }
    return true;
}

inline int dim(const Graph& g) {
    const int n = g.order();
    if (n == 1) return 0;
    for (int s = 1; s < n; ++s) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            if (std::popcount(mask) != s) continue;
            std::vector<int> w;
            for (int v = 0; v < n; ++v)
                if ((mask >> v) & 1) w.push_back(v);
            if (oracle::is_resolving(g, w)) return s;
        }
    }
    return n - 1;
}

// Label-invariant signature by minimizing the upper-triangle bitstring
// over all n! labelings; usable up to n ~ 8.
inline std::uint64_t min_label_signature(const Graph& g) {
    const int n = g.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t sig = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                sig = (sig << 1) | (g.adjacent(perm[u], perm[v]) ? 1 : 0);
        best = std::min(best, sig);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Number of connected labeled graphs on n vertices, by the standard
// subtraction recurrence over the component containing vertex 1.
inline std::uint64_t labeled_connected_count(int n) {
    std::vector<std::uint64_t> total(n + 1), connected(n + 1);
    std::vector<std::vector<std::uint64_t>> binom(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    for (int i = 0; i <= n; ++i) {
        binom[i][0] = 1;
        for (int j = 1; j <= i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
    }
    for (int i = 0; i <= n; ++i) total[i] = std::uint64_t{1} << (i * (i - 1) / 2);
    for (int i = 1; i <= n; ++i) {
        connected[i] = total[i];
        for (int k = 1; k < i; ++k)
            connected[i] -= binom[i - 1][k - 1] * connected[k] * total[i - k];
    }
    return connected[n];
}

// Decodes a Pruefer sequence into tree edges.
inline std::vector<std::pair<int, int>> prufer_decode(const std::vector<int>& seq, int n) {
    std::vector<int> degree(n, 1);
    for (int v : seq) ++degree[v];
    std::vector<std::pair<int, int>> edges;
    std::vector<bool> used(n, false);
    for (int v : seq) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (degree[leaf] == 1 && !used[leaf]) {
                edges.emplace_back(leaf, v);
                used[leaf] = true;
                --degree[v];
                break;
            }
        }
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v) {
        if (used[v] || degree[v] != 1) continue;
        (a < 0 ? a : b) = v;
    }
    edges.emplace_back(a, b);
    return edges;
}

// Isomorphism classes of trees on n vertices via exhaustive Pruefer
// enumeration and min-signature dedup (n <= 7 practical).
inline std::size_t prufer_tree_class_count(int n) {
    if (n <= 2) return 1;
    std::set<std::uint64_t> classes;
    std::vector<int> seq(n - 2, 0);
    while (true) {
        classes.insert(min_label_signature(Graph(n, prufer_decode(seq, n))));
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    return classes.size();
}

}  // namespace oracle

#endif  // CHROMALAB_TESTS_ORACLES_HPP
