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

#include "chromalab/report.hpp"

#include <iomanip>
#include <sstream>

#include "chromalab/automorphisms.hpp"
#include "chromalab/coloring.hpp"
#include "chromalab/graph6.hpp"

namespace chromalab {

InvariantReport compute_report(const Graph& g, int vertex_cap) {
    InvariantReport r;
    r.graph6 = write_graph6(g);
    r.n = g.order();
    r.edges = g.edge_count();
    r.diam = g.diameter();

    const auto chi = chromatic_number(g, vertex_cap);
    const auto loc = locating_chromatic_number(g, vertex_cap);
    const auto dis = distinguishing_chromatic_number(g, vertex_cap);
    const auto dim = metric_dimension(g, vertex_cap);
    r.chi = chi.value;
    r.chi_L = loc.value;
    r.chi_D = dis.value;
    r.dim = dim.value;
    r.chi_witness = chi.witness.assignment();
    r.chi_L_witness = loc.witness.assignment();
    r.chi_D_witness = dis.witness.assignment();
    r.dim_witness = dim.witness;
    r.aut_order = automorphisms(g, std::max(vertex_cap, g.order())).order;

    if (!is_proper(g, chi.witness) || !is_locating(g, loc.witness) ||
        !is_distinguishing(g, dis.witness) || !is_resolving(g, dim.witness))
        throw std::logic_error("solver witness failed re-validation for " + r.graph6);
    return r;
}

nlohmann::ordered_json report_to_json(const InvariantReport& r) {
    nlohmann::ordered_json j;
    j["graph"] = r.graph6;
    j["n"] = r.n;
    j["edges"] = r.edges;
    j["chi"] = r.chi;
    j["chi_L"] = r.chi_L;
    j["chi_D"] = r.chi_D;
    j["dim"] = r.dim;
    j["diam"] = r.diam;
    j["aut_order"] = r.aut_order;
    j["witnesses"] = {{"chi", r.chi_witness},
                      {"chi_L", r.chi_L_witness},
                      {"chi_D", r.chi_D_witness},
                      {"dim", r.dim_witness}};
    return j;
}

std::string report_table_header() {
    std::ostringstream out;
    out << std::left << std::setw(16) << "graph" << std::right << std::setw(4) << "n"
        << std::setw(7) << "edges" << std::setw(5) << "chi" << std::setw(7) << "chi_L"
        << std::setw(7) << "chi_D" << std::setw(5) << "dim" << std::setw(6) << "diam"
        << std::setw(16) << "aut";
    return out.str();
}

std::string report_table_row(const InvariantReport& r) {
    std::ostringstream out;
    out << std::left << std::setw(16) << r.graph6 << std::right << std::setw(4) << r.n
        << std::setw(7) << r.edges << std::setw(5) << r.chi << std::setw(7) << r.chi_L
        << std::setw(7) << r.chi_D << std::setw(5) << r.dim << std::setw(6) << r.diam
        << std::setw(16) << r.aut_order;
    return out.str();
}

}  // namespace chromalab
