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

#include "chromalab/color_partition.hpp"

namespace chromalab {

ColorPartition::ColorPartition(int k, std::vector<int> assignment)
    : k_(k), assignment_(std::move(assignment)) {
    if (k_ < 1) throw ParamError("color partition needs k >= 1");
    if (assignment_.empty()) throw ParamError("color partition needs at least one vertex");
    std::vector<bool> used(k_, false);
    for (std::size_t v = 0; v < assignment_.size(); ++v) {
        const int c = assignment_[v];
        if (c < 1 || c > k_)
            throw ParamError("vertex " + std::to_string(v) + " has color " + std::to_string(c) +
                             " outside 1.." + std::to_string(k_));
        used[c - 1] = true;
    }
    for (int c = 0; c < k_; ++c)
        if (!used[c])
            throw ParamError("color " + std::to_string(c + 1) + " is unused (partition must be surjective)");
}

ColorPartition ColorPartition::from_classes(int n, const std::vector<std::vector<int>>& classes) {
    std::vector<int> assignment(n, 0);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        for (int v : classes[i]) {
            if (v < 0 || v >= n)
                throw ParamError("class vertex " + std::to_string(v) + " out of range");
            if (assignment[v] != 0)
                throw ParamError("vertex " + std::to_string(v) + " appears in two classes");
            assignment[v] = static_cast<int>(i) + 1;
        }
    }
    for (int v = 0; v < n; ++v)
        if (assignment[v] == 0)
            throw ParamError("vertex " + std::to_string(v) + " missing from all classes");
    return ColorPartition(static_cast<int>(classes.size()), std::move(assignment));
}

std::vector<std::vector<int>> ColorPartition::classes() const {
    std::vector<std::vector<int>> out(k_);
    for (int v = 0; v < size(); ++v) out[assignment_[v] - 1].push_back(v);
    return out;
}

}  // namespace chromalab
