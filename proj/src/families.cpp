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

#include "chromalab/families.hpp"

#include <numeric>

namespace chromalab {

namespace {

int single_param(const FamilySpec& spec, const char* name, int min) {
    if (spec.params.size() != 1)
        throw ParamError(std::string(name) + " expects exactly one parameter");
    const int n = spec.params[0];
    if (n < min)
        throw ParamError(std::string(name) + " requires n >= " + std::to_string(min) + ", got " +
                         std::to_string(n));
    return n;
}

Graph make_path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

Graph make_cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(n - 1, 0);
    return Graph(n, edges);
}

Graph make_star(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return Graph(n, edges);
}

Graph make_complete_multipartite(const std::vector<int>& parts) {
    if (parts.empty()) throw ParamError("complete_multipartite needs at least one part");
    for (int p : parts)
        if (p < 1) throw ParamError("complete_multipartite part sizes must be >= 1");
    const int n = std::accumulate(parts.begin(), parts.end(), 0);
    if (parts.size() == 1 && n > 1)
        throw ParamError("complete_multipartite with a single part of size >= 2 is edgeless");
    std::vector<int> part_of(n);
    int v = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int j = 0; j < parts[i]; ++j) part_of[v++] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (part_of[a] != part_of[b]) edges.emplace_back(a, b);
    return Graph(n, edges);
}

Graph make_spider(int n, int m) {
    if (n < 2 || m < n || m > 2 * n - 1)
        throw ParamError("spider requires 2 <= n <= m <= 2n-1, got n=" + std::to_string(n) +
                         ", m=" + std::to_string(m));
    const int legs = (n - 1) * (n - 1);
    const int pendants = m - n;
    const int total = 1 + 2 * legs + pendants;
    std::vector<std::pair<int, int>> edges;
    int next = 1;
    for (int leg = 0; leg < legs; ++leg) {
        edges.emplace_back(0, next);         // center - x
        edges.emplace_back(next, next + 1);  // x - y
        next += 2;
    }
    for (int p = 0; p < pendants; ++p) edges.emplace_back(0, next++);
    return Graph(total, edges);
}

}  // namespace

Graph generate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::path:
            return make_path(single_param(spec, "path", 1));
        case Family::cycle:
            return make_cycle(single_param(spec, "cycle", 3));
        case Family::star:
            return make_star(single_param(spec, "star", 1));
        case Family::complete_multipartite:
            return make_complete_multipartite(spec.params);
        case Family::spider: {
            if (spec.params.size() != 2) throw ParamError("spider expects parameters n,m");
            return make_spider(spec.params[0], spec.params[1]);
        }
    }
    throw ParamError("unknown family");
}

FamilySpec make_family_spec(const std::string& name, const std::vector<int>& params) {
    if (name == "path") return {Family::path, params};
    if (name == "cycle") return {Family::cycle, params};
    if (name == "star") return {Family::star, params};
    if (name == "complete_multipartite") return {Family::complete_multipartite, params};
    if (name == "spider") return {Family::spider, params};
    throw ParamError("unknown family \"" + name +
                     "\" (expected path|cycle|star|complete_multipartite|spider)");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::star: return "star";
        case Family::complete_multipartite: return "complete_multipartite";
        case Family::spider: return "spider";
    }
    return "?";
}

}  // namespace chromalab
