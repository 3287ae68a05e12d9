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

#ifndef CHROMALAB_GRAPH_HPP
#define CHROMALAB_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chromalab {

// Text input that cannot be decoded (graph6 or edge list).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A decoded or constructed graph is not connected.
struct DisconnectedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An input exceeds a hard size limit or a solver cap.
struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid family or partition parameters.
struct ParamError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Simple undirected connected graph on vertices 0..n-1.
//
// Adjacency is stored as one bitmask row per vertex (n <= 62, the graph6
// short-form limit). The all-pairs BFS distance matrix is computed at
// construction and never changes, so a Graph is immutable and safe to
// share across threads.
class Graph {
public:
    static constexpr int kMaxVertices = 62;

    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int edge_count() const { return edge_count_; }

    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }
    std::uint64_t neighbor_mask(int v) const { return adj_[v]; }
    int degree(int v) const { return std::popcount(adj_[v]); }

    int dist(int u, int v) const { return dist_[u * n_ + v]; }
    int diameter() const { return diameter_; }

    // Full n x n hop-count matrix.
    std::vector<std::vector<int>> distance_matrix() const;

    // Edges as (u, v) pairs with u < v, in row order.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    int edge_count_ = 0;
    int diameter_ = 0;
    std::vector<std::uint64_t> adj_;
    std::vector<std::uint8_t> dist_;
};

// Edge-list text format: first line "n", then one "u v" pair per line,
// 0-based. Throws ParseError (message names the offending line) or
// DisconnectedError.
Graph parse_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

}  // namespace chromalab

#endif  // CHROMALAB_GRAPH_HPP
