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

#include <string>
#include <vector>

#include "locturan/graph.hpp"

namespace locturan {

/// Position of each vertex in the canonical ordering: the ordering whose
/// column-major upper-triangle bit string is lexicographically least.
///
/// The search is exhaustive over permutations with prefix pruning, so the
/// result is exact; it is intended for n <= 8 and gets slow on large
/// highly symmetric graphs.
std::vector<Vertex> canonical_labeling(const Graph& g);

/// graph6 string of g relabeled by canonical_labeling. Equal iff isomorphic.
std::string canonical_form(const Graph& g);

inline constexpr int kMaxEnumerationOrder = 8;

/// One canonical representative per isomorphism class on exactly n vertices,
/// ordered by canonical form. Requires 1 <= n <= 8 (std::out_of_range).
std::vector<Graph> enumerate_graphs(int n, bool connected_only);

}  // namespace locturan
