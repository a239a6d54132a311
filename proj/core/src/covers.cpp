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

#include "locturan/covers.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "locturan/connectivity.hpp"
#include "locturan/local_stats.hpp"

namespace locturan {

namespace {

struct StateHash {
  std::size_t operator()(const std::vector<std::uint8_t>& s) const {
    std::size_t h = 1469598103934665603ULL;
    for (std::uint8_t b : s) h = (h ^ b) * 1099511628211ULL;
    return h;
  }
};

class CoverSearch {
 public:
  CoverSearch(const Graph& g, int budget_paths, std::uint64_t node_budget)
      : g_(g), budget_(budget_paths), node_budget_(node_budget), count_(g.size(), 0) {
    for (Vertex v = 0; v < g.order(); ++v) residual_[v] = 2 * g.degree(v);
    remaining_ = 2 * static_cast<int>(g.size());
  }

  bool run() { return solve(budget_); }
  const std::vector<VertexPath>& paths() const { return chosen_; }
  bool out_of_budget() const { return nodes_ > node_budget_; }

 private:
  bool feasible(int k) const {
    if (remaining_ > k * (g_.order() - 1)) return false;
    int odd = 0;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if ((residual_[v] + 1) / 2 > k) return false;
      odd += residual_[v] & 1;
    }
    return odd <= 2 * k;
  }

  void apply(const VertexPath& p, int delta) {
    for (std::size_t i = 1; i < p.size(); ++i) {
      const std::size_t idx = *g_.edge_index(Edge::make(p[i - 1], p[i]));
      count_[idx] = static_cast<std::uint8_t>(count_[idx] + delta);
      residual_[p[i - 1]] -= delta;
      residual_[p[i]] -= delta;
      remaining_ -= delta;
    }
  }

  bool usable(Vertex a, Vertex b) const { return count_[*g_.edge_index(Edge::make(a, b))] < 2; }

  bool solve(int k) {
    if (remaining_ == 0) return true;
    if (k == 0 || !feasible(k) || ++nodes_ > node_budget_) return false;
    if (const auto it = failed_.find(count_); it != failed_.end() && it->second >= k) return false;

    const auto first = std::find_if(count_.begin(), count_.end(), [](std::uint8_t c) { return c < 2; });
    const Edge seed = g_.edges()[first - count_.begin()];
    VertexPath tail{seed.u, seed.v};
    if (extend_tail(tail, bit(seed.u) | bit(seed.v), k)) return true;

    auto& known = failed_[count_];
    known = std::max(known, k);
    return false;
  }

  // Paths through the seed edge are built as reverse(head) + tail, where tail
  // starts with the seed edge; each path arises exactly once.
  bool extend_tail(VertexPath& tail, VertexSet used, int k) {
    for (Vertex w : members(g_.neighbors(tail.back()) & ~used)) {
      if (!usable(tail.back(), w)) continue;
      tail.push_back(w);
      if (extend_tail(tail, used | bit(w), k)) return true;
      tail.pop_back();
      if (out_of_budget()) return false;
    }
    VertexPath head{tail.front()};
    return extend_head(head, tail, used, k);
  }

  bool extend_head(VertexPath& head, const VertexPath& tail, VertexSet used, int k) {
    for (Vertex w : members(g_.neighbors(head.back()) & ~used)) {
      if (!usable(head.back(), w)) continue;
      head.push_back(w);
      if (extend_head(head, tail, used | bit(w), k)) return true;
      head.pop_back();
      if (out_of_budget()) return false;
    }
    VertexPath path(head.rbegin(), head.rend());
    path.insert(path.end(), tail.begin() + 1, tail.end());
    apply(path, +1);
    chosen_.push_back(path);
    if (solve(k - 1)) return true;
    chosen_.pop_back();
    apply(path, -1);
    return false;
  }

  const Graph& g_;
  int budget_;
  std::uint64_t node_budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint8_t> count_;
  std::array<int, kMaxVertices> residual_{};
  int remaining_ = 0;
  std::vector<VertexPath> chosen_;
  std::unordered_map<std::vector<std::uint8_t>, int, StateHash> failed_;
};

}  // namespace

PathDoubleCover find_spdc(const Graph& g, const SpdcOptions& options) {
  PathDoubleCover cover;
  for (VertexSet comp : connected_components(g)) {
    if (popcount(comp) < 2) continue;
    const auto original = members(comp);
    const Graph piece = g.induced(comp);
    CoverSearch search(piece, piece.order(), options.node_budget);
    if (!search.run()) {
      throw SpdcSearchError(search.out_of_budget()
                                ? "SPDC search exceeded its node budget on a component of order " +
                                      std::to_string(piece.order())
                                : "SPDC search exhausted without a cover on a component of order " +
                                      std::to_string(piece.order()));
    }
    for (const VertexPath& p : search.paths()) {
      VertexPath mapped;
      for (Vertex v : p) mapped.push_back(original[v]);
      cover.paths.push_back(std::move(mapped));
    }
  }
  return cover;
}

PdcVerdict validate_pdc(const Graph& g, const PathDoubleCover& cover) {
  PdcVerdict out;
  out.coverage.assign(g.size(), 0);
  for (std::size_t i = 0; i < cover.paths.size(); ++i) {
    const VertexPath& p = cover.paths[i];
    const std::string where = "path " + std::to_string(i);
    if (p.empty()) {
      out.problems.push_back(where + " is empty");
      continue;
    }
    VertexSet seen = 0;
    bool ok = true;
    for (std::size_t j = 0; j < p.size() && ok; ++j) {
      if (p[j] < 0 || p[j] >= g.order()) {
        out.problems.push_back(where + " has out-of-range vertex " + std::to_string(p[j]));
        ok = false;
      } else if (contains(seen, p[j])) {
        out.problems.push_back(where + " repeats vertex " + std::to_string(p[j]) + " (not a simple path)");
        ok = false;
      } else if (j > 0 && !g.adjacent(p[j - 1], p[j])) {
        out.problems.push_back(where + " uses non-edge " + std::to_string(p[j - 1]) + "-" + std::to_string(p[j]));
        ok = false;
      } else {
        seen |= bit(p[j]);
      }
    }
    if (!ok) continue;
    for (std::size_t j = 1; j < p.size(); ++j) ++out.coverage[*g.edge_index(Edge::make(p[j - 1], p[j]))];
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (out.coverage[i] != 2) {
      out.problems.push_back("edge " + g.edges()[i].str() + " covered " + std::to_string(out.coverage[i]) +
                             " times");
    }
  }
  out.valid = out.problems.empty();
  out.small = static_cast<int>(cover.paths.size()) <= g.order();
  return out;
}

CoverBound bound_from_cover(const WeightedGraph& g, const PathDoubleCover& cover) {
  const PdcVerdict verdict = validate_pdc(g.graph(), cover);
  if (!verdict.valid) throw std::invalid_argument("not a path double cover: " + verdict.problems.front());

  const WeightedEdgeProfile wp = weighted_path_profile(g);
  auto term = [&](std::size_t idx) {
    const Rational& w = g.weight(idx);
    return w.is_zero() ? Rational(0) : w / wp.values[idx];
  };

  CoverBound out;
  for (std::size_t i = 0; i < g.graph().size(); ++i) out.edge_sum += term(i);
  out.per_path_at_most_one = true;
  for (const VertexPath& p : cover.paths) {
    Rational inner;
    for (std::size_t j = 1; j < p.size(); ++j) inner += term(*g.graph().edge_index(Edge::make(p[j - 1], p[j])));
    if (inner > Rational(1)) out.per_path_at_most_one = false;
    out.path_sum += inner;
    out.per_path.push_back(inner);
    if (p.size() >= 2) ++out.t;
  }
  out.doubling_identity = out.path_sum == Rational(2) * out.edge_sum;
  out.certified = Rational(static_cast<std::int64_t>(out.t), 2);
  return out;
}

void write_cover(std::ostream& out, const PathDoubleCover& cover) {
  for (const VertexPath& p : cover.paths) {
    for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i];
    out << '\n';
  }
}

PathDoubleCover read_cover(std::istream& in) {
  PathDoubleCover cover;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream row(line);
    VertexPath p;
    std::string token;
    while (row >> token) {
      std::size_t used = 0;
      int v = -1;
      try {
        v = std::stoi(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) throw std::invalid_argument("non-numeric vertex '" + token + "' in cover");
      p.push_back(v);
    }
    cover.paths.push_back(std::move(p));
  }
  return cover;
}

}  // namespace locturan
