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

#include "chromalab/automorphisms.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "chromalab/graph6.hpp"

namespace chromalab {

bool is_identity(const Permutation& p) {
    for (std::size_t v = 0; v < p.size(); ++v)
        if (p[v] != static_cast<int>(v)) return false;
    return true;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
    Permutation out(inner.size());
    for (std::size_t v = 0; v < inner.size(); ++v) out[v] = outer[inner[v]];
    return out;
}

Permutation inverse(const Permutation& p) {
    Permutation out(p.size());
    for (std::size_t v = 0; v < p.size(); ++v) out[p[v]] = static_cast<int>(v);
    return out;
}

std::string format_permutation(const Permutation& p) {
    std::string out = "[";
    for (std::size_t v = 0; v < p.size(); ++v) {
        if (v) out += ',';
        out += std::to_string(p[v]);
    }
    out += ']';
    return out;
}

namespace {

// Maps equal-signature requirements to small ids; candidates for an
// image must share the source vertex's id.
std::vector<int> signature_ids(const std::vector<std::vector<int>>& sigs) {
    std::map<std::vector<int>, int> ids;
    std::vector<int> out(sigs.size());
    for (std::size_t v = 0; v < sigs.size(); ++v) {
        auto [it, _] = ids.try_emplace(sigs[v], static_cast<int>(ids.size()));
        out[v] = it->second;
    }
    return out;
}

std::vector<int> structural_signature_ids(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> sigs(n);
    for (int v = 0; v < n; ++v) {
        auto& s = sigs[v];
        s.push_back(g.degree(v));
        std::vector<int> dists, ndegs;
        for (int u = 0; u < n; ++u)
            if (u != v) dists.push_back(g.dist(v, u));
        for (std::uint64_t m = g.neighbor_mask(v); m; m &= m - 1)
            ndegs.push_back(g.degree(std::countr_zero(m)));
        std::sort(dists.begin(), dists.end());
        std::sort(ndegs.begin(), ndegs.end());
        s.insert(s.end(), dists.begin(), dists.end());
        s.insert(s.end(), ndegs.begin(), ndegs.end());
    }
    return signature_ids(sigs);
}

// Backtracking over image arrays in ascending candidate order. map may
// carry a forced prefix (-1 marks free slots); forced entries are
// verified with the same consistency rules before the search descends.
// visit returns true to stop the whole search.
bool search_mappings(const Graph& g, const std::vector<int>& sig, std::vector<int>& map, int v,
                     std::uint64_t used, const std::function<bool(const Permutation&)>& visit) {
    const int n = g.order();
    if (v == n) return visit(map);

    const auto consistent = [&](int w) {
        if (sig[w] != sig[v]) return false;
        for (int j = 0; j < v; ++j)
            if (map[j] >= 0 && g.dist(v, j) != g.dist(w, map[j])) return false;
        return true;
    };

    if (map[v] >= 0) {
        if (!consistent(map[v])) return false;
        return search_mappings(g, sig, map, v + 1, used | (std::uint64_t{1} << map[v]), visit);
    }
    for (int w = 0; w < n; ++w) {
        if ((used >> w) & 1) continue;
        if (!consistent(w)) continue;
        map[v] = w;
        if (search_mappings(g, sig, map, v + 1, used | (std::uint64_t{1} << w), visit)) {
            map[v] = -1;
            return true;
        }
        map[v] = -1;
    }
    return false;
}

// Does some automorphism fix 0..i-1 pointwise and send i to w?
std::optional<Permutation> automorphism_with_prefix(const Graph& g, const std::vector<int>& sig,
                                                    int i, int w) {
    std::vector<int> map(g.order(), -1);
    for (int j = 0; j < i; ++j) map[j] = j;
    map[i] = w;
    std::optional<Permutation> found;
    search_mappings(g, sig, map, 0, 0, [&](const Permutation& p) {
        found = p;
        return true;
    });
    return found;
}

}  // namespace

AutGroup automorphisms(const Graph& g, int vertex_cap) {
    const int n = g.order();
    if (n > vertex_cap)
        throw CapError("automorphism search capped at n=" + std::to_string(vertex_cap) +
                       ", got n=" + std::to_string(n));
    const auto sig = structural_signature_ids(g);

    // Orbit-stabilizer chain with base 0,1,...,n-1: the order is the
    // product of the orbit sizes of i under the stabilizer of 0..i-1.
    AutGroup group;
    for (int i = 0; i < n; ++i) {
        std::uint64_t orbit = 1;
        for (int w = i + 1; w < n; ++w) {
            if (sig[w] != sig[i]) continue;
            if (auto f = automorphism_with_prefix(g, sig, i, w)) {
                ++orbit;
                group.generators.push_back(std::move(*f));
            }
        }
        group.order *= orbit;
    }

    if (group.order <= kAutListingCap) {
        std::vector<int> map(n, -1);
        group.elements.reserve(group.order);
        search_mappings(g, sig, map, 0, 0, [&](const Permutation& p) {
            group.elements.push_back(p);
            return false;
        });
    }
    return group;
}

std::optional<Permutation> find_color_preserving_automorphism(const Graph& g,
                                                              const ColorPartition& c) {
    const int n = g.order();
    if (c.size() != n) throw ParamError("partition size does not match graph order");

    // Signature: (color, degree, distance to each color class).
    const auto classes = c.classes();
    std::vector<std::vector<int>> sigs(n);
    for (int v = 0; v < n; ++v) {
        auto& s = sigs[v];
        s.push_back(c.color(v));
        s.push_back(g.degree(v));
        for (const auto& cls : classes) {
            int d = n;
            for (int u : cls) d = std::min(d, g.dist(v, u));
            s.push_back(d);
        }
    }
    const auto sig = signature_ids(sigs);

    std::vector<int> map(n, -1);
    std::optional<Permutation> found;
    search_mappings(g, sig, map, 0, 0, [&](const Permutation& p) {
        if (is_identity(p)) return false;
        found = p;
        return true;
    });
    return found;
}

namespace {

bool are_twins(const Graph& g, int u, int w) {
    const std::uint64_t self = (std::uint64_t{1} << u) | (std::uint64_t{1} << w);
    return (g.neighbor_mask(u) & ~self) == (g.neighbor_mask(w) & ~self);
}

// Maximal adjacency-row sequence over orderings that start at a
// maximum-degree vertex and keep the chosen prefix connected. Per level
// only maximal rows are expanded, and candidates interchangeable by a
// twin transposition are expanded once.
struct CanonicalSearch {
    const Graph& g;
    int n;
    std::vector<int> cur, best;
    std::vector<std::uint64_t> rows, best_rows;
    bool have_best = false;

    explicit CanonicalSearch(const Graph& graph)
        : g(graph), n(graph.order()), cur(n), best(n), rows(n), best_rows(n) {}

    void dfs(int p, std::uint64_t used) {
        if (p == n) {
            if (!have_best ||
                std::lexicographical_compare(best_rows.begin(), best_rows.end(), rows.begin(),
                                             rows.end())) {
                best_rows = rows;
                best = cur;
                have_best = true;
            }
            return;
        }
        std::vector<int> cands;
        std::uint64_t best_row = 0;
        for (int w = 0; w < n; ++w) {
            if ((used >> w) & 1) continue;
            std::uint64_t row = 0;
            for (int q = 0; q < p; ++q) row = (row << 1) | (g.adjacent(w, cur[q]) ? 1 : 0);
            if (p > 0 && row == 0) continue;  // prefix must stay connected
            if (cands.empty() || row > best_row) {
                cands.assign(1, w);
                best_row = row;
            } else if (row == best_row) {
                bool dup = false;
                for (int u : cands)
                    if (are_twins(g, u, w)) {
                        dup = true;
                        break;
                    }
                if (!dup) cands.push_back(w);
            }
        }
        for (int w : cands) {
            cur[p] = w;
            rows[p] = best_row;
            dfs(p + 1, used | (std::uint64_t{1} << w));
        }
    }
};

}  // namespace

Graph canonical_relabel(const Graph& g, int vertex_cap) {
    const int n = g.order();
    if (n > vertex_cap)
        throw CapError("canonical form capped at n=" + std::to_string(vertex_cap) + ", got n=" +
                       std::to_string(n));
    if (n == 1) return g;

    CanonicalSearch search(g);
    int max_deg = 0;
    for (int v = 0; v < n; ++v) max_deg = std::max(max_deg, g.degree(v));
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != max_deg) continue;
        bool dup = false;
        for (int u = 0; u < v; ++u)
            if (g.degree(u) == max_deg && are_twins(g, u, v)) {
                dup = true;
                break;
            }
        if (dup) continue;
        search.cur[0] = v;
        search.rows[0] = 0;
        search.dfs(1, std::uint64_t{1} << v);
    }

    // best[p] is the original vertex placed at canonical position p.
    std::vector<std::pair<int, int>> edges;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            if (g.adjacent(search.best[p], search.best[q])) edges.emplace_back(p, q);
    return Graph(n, edges);
}

std::string canonical_form(const Graph& g, int vertex_cap) {
    return write_graph6(canonical_relabel(g, vertex_cap));
}

}  // namespace chromalab
