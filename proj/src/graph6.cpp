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

#include "chromalab/graph6.hpp"

namespace chromalab {

namespace {
constexpr int kBias = 63;
constexpr int kMaxByte = 126;

int triangle_bytes(int n) {
    int bits = n * (n - 1) / 2;
    return (bits + 5) / 6;
}
}  // namespace

Graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw ParseError("graph6: empty input");

    const unsigned char head = static_cast<unsigned char>(text[0]);
    if (head == '~')
        throw ParseError("graph6: long form (n > 62) is not supported");
    if (head < kBias || head > kBias + Graph::kMaxVertices)
        throw ParseError("graph6: header byte out of range");
    const int n = head - kBias;

    const int want = triangle_bytes(n);
    if (static_cast<int>(text.size()) != 1 + want)
        throw ParseError("graph6: expected " + std::to_string(1 + want) + " bytes for n=" +
                         std::to_string(n) + ", got " + std::to_string(text.size()));

    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            const unsigned char byte = static_cast<unsigned char>(text[1 + bit / 6]);
            if (byte < kBias || byte > kMaxByte)
                throw ParseError("graph6: data byte " + std::to_string(bit / 6 + 1) +
                                 " out of range");
            if ((byte - kBias) >> (5 - bit % 6) & 1) edges.emplace_back(row, col);
        }
    }
    // Trailing pad bits must be zero.
    for (int pad = bit; pad < want * 6; ++pad) {
        const unsigned char byte = static_cast<unsigned char>(text[1 + pad / 6]);
        if (byte < kBias || byte > kMaxByte)
            throw ParseError("graph6: data byte " + std::to_string(pad / 6 + 1) + " out of range");
        if ((byte - kBias) >> (5 - pad % 6) & 1)
            throw ParseError("graph6: nonzero padding bits");
    }
    return Graph(n, edges);
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    out.reserve(1 + triangle_bytes(n));
    out.push_back(static_cast<char>(n + kBias));
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kBias));
    return out;
}

}  // namespace chromalab
