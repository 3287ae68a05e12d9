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

#ifndef CHROMALAB_GRAPH6_HPP
#define CHROMALAB_GRAPH6_HPP

#include <string>
#include <string_view>

#include "chromalab/graph.hpp"

namespace chromalab {

// graph6 short form, n <= 62: byte n+63, then the upper-triangle bits
// in column-major order, 6 bits per byte, each byte offset by 63,
// zero-padded at the end.
//
// parse_graph6 throws ParseError on malformed input (bad length,
// out-of-range byte, long-form header) and DisconnectedError when the
// decoded graph is not connected.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

}  // namespace chromalab

#endif  // CHROMALAB_GRAPH6_HPP
