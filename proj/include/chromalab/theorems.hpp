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

#ifndef CHROMALAB_THEOREMS_HPP
#define CHROMALAB_THEOREMS_HPP

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "chromalab/report.hpp"

namespace chromalab {

enum class VerdictStatus { holds, violated, inapplicable };

std::string to_string(VerdictStatus s);

// Machine verdict for one theorem on one graph (or one corpus).
// Theorem ids: T2.1, T2.2, T2.3, C2.5, C-bound-dim, C-bound-diam,
// T-f1, T-nearly-1, T-nearly-2, T-trees-3, Ex-P7.
//
// A verdict with `discrepancy` set records a mismatch between the
// statement as written and the brute-force ground truth; the evidence
// carries the full records and the verdict does not count as violated.
struct TheoremVerdict {
    std::string theorem_id;
    std::string graph_key;
    VerdictStatus status = VerdictStatus::holds;
    nlohmann::ordered_json evidence = nlohmann::ordered_json::object();
    bool discrepancy = false;
};

// Line-record form: {theorem_id, graph_key, status, evidence}.
nlohmann::ordered_json verdict_to_json(const TheoremVerdict& v);

// Non-adjacency is transitive, i.e. the complement is a disjoint union
// of cliques.
bool is_complete_multipartite(const Graph& g);

bool is_bipartite(const Graph& g);

// chi_L = n iff complete multipartite (order >= 3), and chi_D = n iff
// complete multipartite. Returns the T2.1 and T2.2 verdicts.
std::pair<TheoremVerdict, TheoremVerdict> check_multipartite_theorems(const Graph& g,
                                                                      const InvariantReport& r);

enum class LocatingCheckMode { minimum_only, all_partitions };

// Every locating coloring is distinguishing (T2.3): either over all
// minimum locating colorings, or pointwise over every surjective
// partition with at most n colors (all_partitions supports n <= 7).
TheoremVerdict check_locating_implies_distinguishing(const Graph& g, const InvariantReport& r,
                                                     LocatingCheckMode mode);

// chi <= chi_D <= chi_L <= n (C2.5 plus the trivial ends).
TheoremVerdict check_order_chain(const Graph& g, const InvariantReport& r);

// chi_D <= chi + dim and chi_L <= chi + dim.
TheoremVerdict check_dim_bound(const Graph& g, const InvariantReport& r);

// chi_D <= n - diam + 2 for n >= 3, diam >= 2.
TheoremVerdict check_diam_bound(const Graph& g, const InvariantReport& r);

// With chi_D = n-1: every distinguishing (n-1)-coloring is locating and
// chi_L = n-1.
TheoremVerdict check_near_complete_1(const Graph& g, const InvariantReport& r);

// With chi_D = n-2: every distinguishing (n-2)-coloring satisfying
// condition (i) (a 3-class exists) or condition (ii) (both 2-classes
// split by singleton-class neighborhoods) is locating; colorings
// meeting neither hypothesis are reported unasserted.
TheoremVerdict check_near_complete_2(const Graph& g, const InvariantReport& r);

// The fixed per-graph battery, in order: T2.1, T2.2, T2.3, C2.5,
// C-bound-dim, C-bound-diam, T-nearly-1, T-nearly-2. T2.3 runs in
// all_partitions mode when n <= all_mode_max_n.
std::vector<TheoremVerdict> check_graph_theorems(const Graph& g, const InvariantReport& r,
                                                 int all_mode_max_n = 5);

// Reports + battery for a whole corpus, fanned out per graph; output
// order is (graph index, battery order) regardless of worker count.
std::vector<TheoremVerdict> verify_corpus(const std::vector<Graph>& graphs,
                                          int vertex_cap = kDefaultSolverCap, int workers = 1,
                                          int all_mode_max_n = 5);

// Builds the spider construction and solves it exactly: chi_D = n and
// chi_L = m for n >= 3. The degenerate n = m = 2 spider is a path whose
// solved values are recorded and checked only for chi_D = chi_L.
// Throws CapError when the construction exceeds the solver cap.
TheoremVerdict verify_spider(int n, int m, int vertex_cap = kDefaultSolverCap);

struct SurveyRecord {
    std::string key;
    InvariantReport report;
    bool complete_multipartite = false;
    bool bipartite = false;
    bool tree = false;
    bool chi3_class = false;  // chi_D == chi_L == 3
};

nlohmann::ordered_json survey_record_to_json(const SurveyRecord& r);

struct SurveyResult {
    std::vector<SurveyRecord> tree_records;       // every tree on <= nmax vertices
    std::vector<SurveyRecord> graph_chi3_census;  // connected graphs <= min(nmax,7) in the class
    TheoremVerdict tree_verdict;                  // T-trees-3
};

// Tree survey (nmax <= 9): computes {chi_D = chi_L = 3} by brute force,
// compares it against {chi_L = 3 and |Aut| >= 2}, asserts that rigid
// chi_L = 3 trees have chi_D = 2, and emits any set mismatch as flagged
// discrepancy records. Also emits the general-graph chi_D = chi_L = 3
// census as data.
SurveyResult survey_chi3(int nmax, int vertex_cap = kDefaultSolverCap, int workers = 1);

// The fixed P_7 regression: the partition {a1,a5},{a2,a4,a6},{a3,a7} is
// proper and distinguishing but not locating, with both colliding codes
// equal to (1,0,1); chi_D(P_7) = chi_L(P_7) = 3 and dim(P_7) = 1.
TheoremVerdict reproduce_p7_example();

}  // namespace chromalab

#endif  // CHROMALAB_THEOREMS_HPP
