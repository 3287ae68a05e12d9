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

#ifndef CHROMALAB_FAMILIES_HPP
#define CHROMALAB_FAMILIES_HPP

#include <string>
#include <vector>

#include "chromalab/graph.hpp"

namespace chromalab {

enum class Family { path, cycle, complete_multipartite, star, spider };

// Family generator parameters:
//   path, cycle, star      params = {n}   (cycle needs n >= 3)
//   complete_multipartite  params = part sizes, all >= 1
//   spider                 params = {n, m} with 2 <= n <= m <= 2n-1
struct FamilySpec {
    Family family;
    std::vector<int> params;
};

// Deterministic vertex numbering:
//   path/cycle: 0..n-1 along the walk; star: center 0, leaves 1..n-1;
//   complete_multipartite: parts laid out in the given order;
//   spider(n, m): center 0, then (n-1)^2 legs as consecutive (x, y)
//   pairs with center-x-y paths, then the m-n pendants of the center.
// Throws ParamError on invalid parameters.
Graph generate(const FamilySpec& spec);

// Parses the CLI spelling, e.g. ("spider", {3, 5}). Throws ParamError
// on an unknown family name.
FamilySpec make_family_spec(const std::string& name, const std::vector<int>& params);

std::string family_name(Family f);

}  // namespace chromalab

#endif  // CHROMALAB_FAMILIES_HPP
