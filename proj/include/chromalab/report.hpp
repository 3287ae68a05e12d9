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

#ifndef CHROMALAB_REPORT_HPP
#define CHROMALAB_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "chromalab/graph.hpp"
#include "chromalab/solvers.hpp"

namespace chromalab {

// Per-graph record of all solved invariants. Witness colorings are
// color-per-vertex arrays (1-based colors); the dim witness is the
// resolving vertex list.
struct InvariantReport {
    std::string graph6;
    int n = 0;
    int edges = 0;
    int chi = 0;
    int chi_L = 0;
    int chi_D = 0;
    int dim = 0;
    int diam = 0;
    std::uint64_t aut_order = 1;
    std::vector<int> chi_witness;
    std::vector<int> chi_L_witness;
    std::vector<int> chi_D_witness;
    std::vector<int> dim_witness;
};

// Runs all solvers and re-validates every witness under its predicate
// before returning. Throws CapError when g.order() > vertex_cap.
InvariantReport compute_report(const Graph& g, int vertex_cap = kDefaultSolverCap);

// Fixed field names: graph, n, edges, chi, chi_L, chi_D, dim, diam,
// aut_order, witnesses.
nlohmann::ordered_json report_to_json(const InvariantReport& r);

std::string report_table_header();
std::string report_table_row(const InvariantReport& r);

}  // namespace chromalab

#endif  // CHROMALAB_REPORT_HPP
