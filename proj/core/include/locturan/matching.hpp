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

/// A maximum matching found by Edmonds' blossom algorithm, in edge order.
std::vector<Edge> max_matching(const Graph& g);

int matching_number(const Graph& g);

/// mate[v] is v's partner in `matching`, or -1 when v is exposed.
std::vector<Vertex> mates(const Graph& g, const std::vector<Edge>& matching);

}  // namespace locturan
