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

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "locturan/graph.hpp"
#include "locturan/rational.hpp"
#include "locturan/weighted_graph.hpp"

namespace locturan {

using VertexPath = std::vector<Vertex>;

/// A multiset of paths meant to cover every edge exactly twice.
struct PathDoubleCover {
  std::vector<VertexPath> paths;

  friend bool operator==(const PathDoubleCover&, const PathDoubleCover&) = default;
};

/// Raised when the cover search fails or runs out of its node budget. Every
/// simple graph has a small path double cover, so this indicates a defect.
class SpdcSearchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SpdcOptions {
  std::uint64_t node_budget = 200'000'000;
};

/// Deterministic backtracking search for a path double cover with at most n
/// paths. Components are covered independently; each new path must contain
/// the least edge still short of two covers.
PathDoubleCover find_spdc(const Graph& g, const SpdcOptions& options = {});

struct PdcVerdict {
  bool valid = false;
  bool small = false;           ///< at most n paths
  std::vector<int> coverage;    ///< per edge, indexed like Graph::edges()
  std::vector<std::string> problems;
};

/// Checks that every path is a simple path of g and every edge is covered
/// exactly twice. Never throws; problems are listed in the verdict.
PdcVerdict validate_pdc(const Graph& g, const PathDoubleCover& cover);

/// The cover-based certificate for sum_e w(e)/w(p(e)) <= n/2.
struct CoverBound {
  Rational path_sum;   ///< sum over paths P of sum over e in P of w(e)/w(p(e))
  Rational edge_sum;   ///< sum over edges of w(e)/w(p(e))
  bool doubling_identity = false;  ///< path_sum == 2 * edge_sum
  std::vector<Rational> per_path;
  bool per_path_at_most_one = false;
  std::size_t t = 0;   ///< paths with at least one edge
  Rational certified;  ///< t / 2
};

/// Terms with w(e) = 0 count as 0. Throws std::invalid_argument when the
/// cover is not a valid PDC of g's underlying graph.
CoverBound bound_from_cover(const WeightedGraph& g, const PathDoubleCover& cover);

/// One path per line, vertex ids separated by spaces; '#' lines are comments.
void write_cover(std::ostream& out, const PathDoubleCover& cover);
/// Throws std::invalid_argument on non-numeric tokens.
PathDoubleCover read_cover(std::istream& in);

}  // namespace locturan
