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

#include "chromalab/graph.hpp"

#include <sstream>

namespace chromalab {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 1) throw ParamError("graph order must be at least 1, got " + std::to_string(n));
    if (n > kMaxVertices)
        throw CapError("graph order " + std::to_string(n) + " exceeds the supported maximum " +
                       std::to_string(kMaxVertices));

    adj_.assign(n, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParamError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") out of range for n=" + std::to_string(n));
        if (u == v)
            throw ParamError("self-loop at vertex " + std::to_string(u));
        adj_[u] |= std::uint64_t{1} << v;
        adj_[v] |= std::uint64_t{1} << u;
    }
    for (int v = 0; v < n; ++v) edge_count_ += degree(v);
    edge_count_ /= 2;

    // All-pairs BFS over bitmask frontiers; also proves connectivity.
    dist_.assign(static_cast<std::size_t>(n) * n, 0);
    const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    for (int s = 0; s < n; ++s) {
        std::uint64_t seen = std::uint64_t{1} << s;
        std::uint64_t frontier = seen;
        int d = 0;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f; f &= f - 1)
                next |= adj_[std::countr_zero(f)];
            next &= ~seen;
            ++d;
            for (std::uint64_t f = next; f; f &= f - 1)
                dist_[s * n_ + std::countr_zero(f)] = static_cast<std::uint8_t>(d);
            seen |= next;
            frontier = next;
        }
        if (seen != all)
            throw DisconnectedError("graph on " + std::to_string(n) + " vertices is disconnected");
        for (int v = 0; v < n; ++v) diameter_ = std::max(diameter_, static_cast<int>(dist_[s * n_ + v]));
    }
}

std::vector<std::vector<int>> Graph::distance_matrix() const {
    std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v) out[u][v] = dist(u, v);
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n) || n < 1)
                throw ParseError("edge list line " + std::to_string(lineno) +
                                 ": expected positive vertex count");
            continue;
        }
        int u, v;
        if (!(ls >> u)) continue;  // blank line
        if (!(ls >> v))
            throw ParseError("edge list line " + std::to_string(lineno) +
                             ": expected \"u v\" pair");
        edges.emplace_back(u, v);
    }
    if (n < 0) throw ParseError("edge list line 1: expected vertex count, got empty input");
    try {
        return Graph(n, edges);
    } catch (const ParamError& e) {
        throw ParseError(std::string("edge list: ") + e.what());
    }
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace chromalab
