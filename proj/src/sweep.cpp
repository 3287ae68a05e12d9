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

#include "chromalab/sweep.hpp"

#include "chromalab/graph6.hpp"

namespace chromalab {

std::vector<InvariantReport> compute_reports(const std::vector<Graph>& graphs, int vertex_cap,
                                             int workers) {
    if (workers < 1) throw ParamError("worker count must be >= 1");
    // Cap violations are raised before the parallel region so no
    // exception crosses a thread boundary.
    for (const Graph& g : graphs)
        if (g.order() > vertex_cap)
            throw CapError("graph " + write_graph6(g) + " exceeds solver cap n=" +
                           std::to_string(vertex_cap));
    if (workers == 1) return compute_reports_serial(graphs, vertex_cap);

    std::vector<InvariantReport> reports(graphs.size());
    const int count = static_cast<int>(graphs.size());
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (int i = 0; i < count; ++i) reports[i] = compute_report(graphs[i], vertex_cap);
    return reports;
}

std::vector<InvariantReport> compute_reports_serial(const std::vector<Graph>& graphs,
                                                    int vertex_cap) {
    std::vector<InvariantReport> reports;
    reports.reserve(graphs.size());
    for (const Graph& g : graphs) reports.push_back(compute_report(g, vertex_cap));
    return reports;
}

}  // namespace chromalab
