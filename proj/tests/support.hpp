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

#include <map>
#include <string>
#include <vector>

#include "locturan/canonical.hpp"
#include "locturan/graph.hpp"
#include "locturan/graph6.hpp"

namespace testing_support {

/// Enumerated graphs on exactly n vertices, cached per (n, connected).
inline const std::vector<locturan::Graph>& graphs_of_order(int n, bool connected_only) {
  static std::map<std::pair<int, bool>, std::vector<locturan::Graph>> cache;
  auto [it, inserted] = cache.try_emplace({n, connected_only});
  if (inserted) it->second = locturan::enumerate_graphs(n, connected_only);
  return it->second;
}

/// Every graph with 1 <= order <= n_max.
inline std::vector<locturan::Graph> graphs_up_to(int n_max, bool connected_only) {
  std::vector<locturan::Graph> out;
  for (int n = 1; n <= n_max; ++n) {
    const auto& level = graphs_of_order(n, connected_only);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

inline locturan::Graph g6(const std::string& text) { return locturan::parse_graph6(text); }

}  // namespace testing_support
