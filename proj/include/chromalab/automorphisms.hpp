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

#ifndef CHROMALAB_AUTOMORPHISMS_HPP
#define CHROMALAB_AUTOMORPHISMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chromalab/color_partition.hpp"
#include "chromalab/graph.hpp"

namespace chromalab {

// Image array: perm[v] is the image of vertex v.
using Permutation = std::vector<int>;

bool is_identity(const Permutation& p);
Permutation compose(const Permutation& outer, const Permutation& inner);  // v -> outer[inner[v]]
Permutation inverse(const Permutation& p);

// One-line report form, e.g. "[3,2,1,0]".
std::string format_permutation(const Permutation& p);

inline constexpr int kDefaultVertexCap = 16;
inline constexpr std::uint64_t kAutListingCap = 100000;

// Full automorphism group at desk scale. `elements` is the complete
// listing in lexicographic image order when the order is at most
// kAutListingCap; for larger groups only `generators` is populated and
// the order comes from an orbit-stabilizer chain.
struct AutGroup {
    std::uint64_t order = 1;
    std::vector<Permutation> elements;
    std::vector<Permutation> generators;

    bool listed() const { return !elements.empty(); }
};

// Backtracking over images with degree/distance-profile pruning.
// Throws CapError when g.order() > vertex_cap.
AutGroup automorphisms(const Graph& g, int vertex_cap = kDefaultVertexCap);

// Searches directly for one non-identity automorphism f with
// color(f(v)) = color(v) for all v (lexicographically least such image
// array), without materializing the group. Properness of c is not
// required. Returns std::nullopt if only the identity preserves c.
std::optional<Permutation> find_color_preserving_automorphism(const Graph& g,
                                                              const ColorPartition& c);

// Label-invariant key: equal strings exactly for isomorphic graphs.
// The key is the graph6 encoding of a canonical relabeling (maximal
// adjacency bitstring over degree-seeded connected orderings).
// Throws CapError when g.order() > vertex_cap.
std::string canonical_form(const Graph& g, int vertex_cap = kDefaultVertexCap);

// The canonical relabeling itself; canonical_form(g) == write_graph6 of it.
Graph canonical_relabel(const Graph& g, int vertex_cap = kDefaultVertexCap);

}  // namespace chromalab

#endif  // CHROMALAB_AUTOMORPHISMS_HPP
