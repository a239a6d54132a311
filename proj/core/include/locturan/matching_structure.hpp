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

#include <stdexcept>
#include <vector>

#include "locturan/graph.hpp"
#include "locturan/rational.hpp"

namespace locturan {

/// True iff G - v has a perfect matching for every vertex v. Even order > 0
/// is never factor-critical; K_1 (and, vacuously, K_0) is.
bool is_factor_critical(const Graph& g);

/// Gallai-Edmonds partition. D holds the vertices missed by some maximum
/// matching, A the neighbors of D outside D, and C the remainder.
struct GEDecomposition {
  VertexSet c = 0;
  VertexSet a = 0;
  VertexSet d = 0;
  std::vector<VertexSet> d_components;  ///< components of G[D], by least member
};

/// Thrown when a computed structure fails its own re-verification. This
/// signals an internal bug, not bad input.
class StructureCheckError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Computes D directly as { v : mu(G - v) = mu(G) } and re-verifies the
/// structure clauses before returning (StructureCheckError otherwise).
GEDecomposition gallai_edmonds(const Graph& g);

/// Empty string when every structural clause holds for `ge` against the
/// matching `m`; otherwise a description of the first failure.
std::string check_gallai_edmonds(const Graph& g, const GEDecomposition& ge, const std::vector<Edge>& m);

struct ClosureResult {
  Graph closed;
  std::vector<Edge> added;  ///< in addition order
  int threshold = 0;
};

/// k-closure: repeatedly joins the lexicographically least nonadjacent pair
/// whose current degree sum is at least k. Requires k >= 0.
ClosureResult k_closure(const Graph& g, int k);

/// mu of the (2 mu + 1)-closure equals mu(g).
bool closure_preserves_matching_number(const Graph& g);

/// f(s) = C(s, 2) + (2k - s + 1)(n - s).
Rational nw_bound(int s, int k, int n);

/// The clique measurements behind the edge bound on a (2k+1)-closure.
struct ClosureCliqueBound {
  int k = 0;                 ///< mu(G)
  Graph closure;             ///< the (2k+1)-closure
  VertexSet high_degree = 0; ///< closure vertices of degree >= k + 1
  VertexSet clique = 0;      ///< largest maximal clique containing high_degree
  int s = 0;                 ///< |clique|
  Rational edges;            ///< e(closure)
  Rational bound;            ///< f(k) when s <= k, else max{f(s), f(k+1)}
  bool holds_for_all_t = true;  ///< e <= max{f(t), f(k+1)} for every s <= t <= 2k+1
};

ClosureCliqueBound closure_clique_bound(const Graph& g);

/// Whether (n <= (5 mu + 1)/2 and e(G) > 2 mu^2) implies that every edge lies
/// inside one vertex set of size at most 2 mu + 1.
struct StabilityVerdict {
  int mu = 0;
  bool hypothesis = false;
  bool conclusion = false;
  bool holds() const { return !hypothesis || conclusion; }
};

StabilityVerdict stability_check(const Graph& g);

}  // namespace locturan
