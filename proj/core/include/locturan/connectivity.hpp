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

#pragma once

#include <vector>

#include "locturan/graph.hpp"

namespace locturan {

/// Vertex sets of the connected components, ordered by least member.
std::vector<VertexSet> connected_components(const Graph& g);

/// Component of `g` containing v.
VertexSet component_of(const Graph& g, Vertex v);

bool is_connected(const Graph& g);

/// Vertices whose removal increases the number of components.
VertexSet cut_vertices(const Graph& g);

struct BridgeDecomposition {
  std::vector<Edge> cut_edges;    ///< lexicographic order
  std::vector<VertexSet> pieces;  ///< components of g minus the cut edges
};

/// Cut edges (bridges) and the 2-edge-connected pieces left after deleting
/// them. Isolated vertices form singleton pieces.
BridgeDecomposition cut_edges_and_2ec_pieces(const Graph& g);

/// Connected on at least two vertices with no cut edge.
bool is_two_edge_connected(const Graph& g);

}  // namespace locturan
