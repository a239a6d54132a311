// Copyright 2026 The locturan Authors
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

#include "locturan/graph6.hpp"

#include <vector>

namespace locturan {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

std::size_t data_bytes(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw Graph6Error("graph6: empty record");

  for (char c : line) {
    const auto b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126) throw Graph6Error("graph6: byte " + std::to_string(b) + " outside 63..126");
  }
  const auto first = static_cast<unsigned char>(line[0]);
  if (first == 126) throw Graph6Error("graph6: multi-byte size prefix (n > 62) unsupported; n > 32");
  const int n = first - kBias;
  if (n > kMaxVertices) throw Graph6Error("graph6: n = " + std::to_string(n) + " exceeds 32");

  const std::string_view data = line.substr(1);
  if (data.size() != data_bytes(n)) {
    throw Graph6Error("graph6: expected " + std::to_string(data_bytes(n)) + " data bytes for n = " +
                      std::to_string(n) + ", got " + std::to_string(data.size()));
  }

  std::vector<Edge> edges;
  std::size_t pos = 0;
  auto bit_at = [&](std::size_t k) {
    const int chunk = static_cast<unsigned char>(data[k / 6]) - kBias;
    return (chunk >> (5 - k % 6)) & 1;
  };
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++pos) {
      if (bit_at(pos)) edges.push_back({i, j});
    }
  }
  for (; pos < data.size() * 6; ++pos) {
    if (bit_at(pos)) throw Graph6Error("graph6: nonzero padding bits");
  }
  return Graph(n, edges);
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.reserve(1 + data_bytes(n));
  out.push_back(static_cast<char>(n + kBias));
  int chunk = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

}  // namespace locturan
