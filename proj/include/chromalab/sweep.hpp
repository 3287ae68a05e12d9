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

#ifndef CHROMALAB_SWEEP_HPP
#define CHROMALAB_SWEEP_HPP

#include <vector>

#include "chromalab/report.hpp"

namespace chromalab {

// Corpus sweeps fan the per-graph solves out across an OpenMP worker
// pool. Results land in index-order slots, so the output is identical
// for every worker count; compute_reports_serial is the plain-loop
// reference the parallel kernel is tested and benchmarked against.
std::vector<InvariantReport> compute_reports(const std::vector<Graph>& graphs,
                                             int vertex_cap = kDefaultSolverCap,
                                             int workers = 1);

std::vector<InvariantReport> compute_reports_serial(const std::vector<Graph>& graphs,
                                                    int vertex_cap = kDefaultSolverCap);

}  // namespace chromalab

#endif  // CHROMALAB_SWEEP_HPP
