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

#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <istream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "locturan/canonical.hpp"
#include "locturan/corpus.hpp"
#include "locturan/covers.hpp"
#include "locturan/graph6.hpp"
#include "locturan/local_stats.hpp"
#include "locturan/matching.hpp"
#include "locturan/matching_structure.hpp"
#include "locturan/report.hpp"
#include "locturan/verifiers.hpp"

namespace locturan::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Bad flags, unreadable input or malformed records: exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string input = "-";
  std::string output;
  std::string format = "json";
  int n = 0;
  int n_min = 1;
  bool connected = false;
  std::vector<std::string> theorems;
  std::string roots = "all";
  std::vector<int> clique_orders;
  std::string weights = "unit";
  std::optional<std::uint64_t> seed;
  int trials = 1;
  bool cover = false;
  bool summary = false;
  std::string stat;
  std::optional<int> k;
};

class Io {
 public:
  Io(const RunConfig& cfg, std::istream& in, std::ostream& out) : in_(&in), out_(&out) {
    if (cfg.input != "-") {
      file_in_ = std::make_unique<std::ifstream>(cfg.input);
      if (!*file_in_) throw UsageError("cannot open input '" + cfg.input + "'");
      in_ = file_in_.get();
    }
    if (!cfg.output.empty()) {
      file_out_ = std::make_unique<std::ofstream>(cfg.output);
      if (!*file_out_) throw UsageError("cannot open output '" + cfg.output + "'");
      out_ = file_out_.get();
    }
  }
  std::istream& in() { return *in_; }
  std::ostream& out() { return *out_; }

 private:
  std::unique_ptr<std::ifstream> file_in_;
  std::unique_ptr<std::ofstream> file_out_;
  std::istream* in_;
  std::ostream* out_;
};

std::vector<Graph> read_graphs(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
    if (line.empty() || line[0] == '#') continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const std::exception& ex) {
      throw UsageError("line " + std::to_string(number) + ": " + ex.what());
    }
  }
  return out;
}

std::vector<WeightedGraph> read_weighted(std::istream& in) {
  std::vector<WeightedGraph> out;
  try {
    while (auto g = read_weighted_graph(in)) out.push_back(std::move(*g));
  } catch (const std::exception& ex) {
    throw UsageError(std::string("weighted input: ") + ex.what());
  }
  return out;
}

std::string edge_text(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

std::string join(const std::vector<Vertex>& vs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? sep : "") + std::to_string(vs[i]);
  return out;
}

std::string set_text(VertexSet s) { return "{" + join(members(s), ",") + "}"; }

std::optional<Vertex> single_root(const RunConfig& cfg) {
  if (cfg.roots == "all") return std::nullopt;
  try {
    std::size_t used = 0;
    const int v = std::stoi(cfg.roots, &used);
    if (used != cfg.roots.size() || v < 0) throw std::invalid_argument(cfg.roots);
    return static_cast<Vertex>(v);
  } catch (const std::exception&) {
    throw UsageError("--roots expects 'all' or a vertex id, got '" + cfg.roots + "'");
  }
}

WeightSource weight_source(const RunConfig& cfg) {
  if (cfg.weights == "random") {
    if (!cfg.seed) throw UsageError("--weights random requires --seed");
    return WeightSource::kRandom;
  }
  return WeightSource::kUnit;
}

// ---- enumerate ------------------------------------------------------------

int cmd_enumerate(const RunConfig& cfg, Io& io) {
  if (cfg.n < 1 || cfg.n > 8) throw UsageError("--n must be between 1 and 8");
  for (const Graph& g : enumerate_graphs(cfg.n, cfg.connected)) io.out() << write_graph6(g) << '\n';
  return kExitOk;
}

// ---- stats ----------------------------------------------------------------

struct StatRecord {
  std::string graph6;
  std::string stat;
  std::optional<Vertex> root;
  std::optional<int> s;
  std::vector<Vertex> item;  ///< edge ends or clique members
  std::string value;
};

void emit_stat(std::ostream& out, OutputFormat fmt, const StatRecord& r) {
  switch (fmt) {
    case OutputFormat::kJson: {
      Json j;
      j["graph6"] = r.graph6;
      j["stat"] = r.stat;
      if (r.root) j["root"] = *r.root;
      if (r.s) j["s"] = *r.s;
      j[r.s ? "clique" : "edge"] = r.item;
      j["value"] = r.value;
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::kCsv:
      out << r.graph6 << ',' << r.stat << ',' << (r.root ? std::to_string(*r.root) : "") << ','
          << (r.s ? std::to_string(*r.s) : "") << ',' << join(r.item, "-") << ',' << r.value << '\n';
      break;
    case OutputFormat::kText:
      out << r.graph6 << ' ' << r.stat;
      if (r.root) out << " v=" << *r.root;
      out << ' ' << join(r.item, "-") << ' ' << r.value << '\n';
      break;
  }
}

int cmd_stats(const RunConfig& cfg, Io& io) {
  const OutputFormat fmt = parse_output_format(cfg.format);
  if (fmt == OutputFormat::kCsv) io.out() << "graph6,stat,root,s,item,value\n";
  const bool clique_stat = cfg.stat == "pS" || cfg.stat == "sK";
  if (clique_stat && cfg.clique_orders.empty()) throw UsageError("--stat " + cfg.stat + " requires --s");

  auto edge_records = [&](const Graph& g, const std::string& g6, StatKind kind, std::optional<Vertex> root) {
    const EdgeStatProfile p = edge_profile(g, kind, root);
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
      emit_stat(io.out(), fmt, {g6, cfg.stat, root, std::nullopt, {p.edges[i].u, p.edges[i].v},
                                std::to_string(p.values[i])});
    }
  };

  if (cfg.stat == "wp") {
    std::vector<WeightedGraph> weighted;
    if (cfg.weights == "file") {
      weighted = read_weighted(io.in());
    } else {
      const WeightSource source = weight_source(cfg);
      for (const Graph& g : read_graphs(io.in())) {
        weighted.push_back(source == WeightSource::kRandom ? WeightSampler(*cfg.seed).sample(g)
                                                           : WeightedGraph::unit(g));
      }
    }
    for (const WeightedGraph& w : weighted) {
      const WeightedEdgeProfile p = weighted_path_profile(w);
      const std::string g6 = write_graph6(w.graph());
      for (std::size_t i = 0; i < p.edges.size(); ++i) {
        emit_stat(io.out(), fmt, {g6, cfg.stat, std::nullopt, std::nullopt, {p.edges[i].u, p.edges[i].v},
                                  p.values[i].str()});
      }
    }
    return kExitOk;
  }

  std::optional<StatKind> kind;
  if (!clique_stat) {
    try {
      kind = parse_stat_kind(cfg.stat);
    } catch (const std::invalid_argument& ex) {
      throw UsageError(std::string(ex.what()) + "; or pS, sK, wp");
    }
  }
  const std::optional<Vertex> root = single_root(cfg);
  for (const Graph& g : read_graphs(io.in())) {
    const std::string g6 = write_graph6(g);
    if (clique_stat) {
      const CliqueStatKind ck = cfg.stat == "pS" ? CliqueStatKind::kConsecutivePath : CliqueStatKind::kStar;
      for (int s : cfg.clique_orders) {
        if (s < 1) throw UsageError("--s must be positive");
        const CliqueStatProfile p = clique_profile(g, s, ck);
        for (std::size_t i = 0; i < p.cliques.size(); ++i) {
          emit_stat(io.out(), fmt, {g6, cfg.stat, std::nullopt, s, members(p.cliques[i]),
                                    std::to_string(p.values[i])});
        }
      }
    } else if (*kind == StatKind::kRootedPath) {
      if (root) {
        if (*root >= g.order()) throw UsageError("root " + std::to_string(*root) + " out of range for " + g6);
        edge_records(g, g6, *kind, root);
      } else {
        for (Vertex v = 0; v < g.order(); ++v) edge_records(g, g6, *kind, v);
      }
    } else {
      edge_records(g, g6, *kind, std::nullopt);
    }
  }
  return kExitOk;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const RunConfig& cfg, Io& io, std::ostream& err) {
  const OutputFormat fmt = parse_output_format(cfg.format);
  const bool from_input = cfg.n == 0;
  if (!from_input && (cfg.n_min < 1 || cfg.n_min > cfg.n || cfg.n > 8)) {
    throw UsageError("need 1 <= --n-min <= --n <= 8");
  }
  if (cfg.trials < 1) throw UsageError("--trials must be positive");

  CorpusOptions opts;
  for (const std::string& id : cfg.theorems) {
    if (id == "all") {
      for (const TheoremInfo& info : theorem_catalog()) opts.theorems.push_back(info.id);
      continue;
    }
    try {
      opts.theorems.push_back(theorem_info(id).id);
    } catch (const std::invalid_argument& ex) {
      throw UsageError(ex.what());
    }
  }
  opts.root = single_root(cfg);
  if (!cfg.clique_orders.empty()) opts.clique_orders = cfg.clique_orders;
  for (int s : opts.clique_orders) {
    if (s < 2) throw UsageError("--s must be at least 2");
  }
  opts.attach_cover = cfg.cover;
  opts.trials = cfg.trials;
  const bool weight_file = cfg.weights == "file";
  if (!weight_file) {
    opts.weights = weight_source(cfg);
    opts.seed = cfg.seed.value_or(0);
  }
  if (weight_file && !from_input) throw UsageError("--weights file reads weighted graphs from --input, not --n");

  if (fmt == OutputFormat::kCsv) io.out() << csv_header() << '\n';
  const ReportSink sink = [&](const VerificationReport& r) { write_report(io.out(), r, fmt); };

  CorpusResult result;
  if (from_input && weight_file) {
    const std::vector<WeightedGraph> weighted = read_weighted(io.in());
    std::vector<Graph> graphs;
    for (const WeightedGraph& w : weighted) graphs.push_back(w.graph());
    result = verify_graphs(graphs, opts, sink, &weighted);
  } else if (from_input) {
    result = verify_graphs(read_graphs(io.in()), opts, sink);
  } else {
    result = verify_corpus(cfg.n_min, cfg.n, cfg.connected, opts, sink);
  }
  io.out().flush();
  if (cfg.summary) err << summary_json(result, true) << '\n';
  if (const auto bad = result.first_failure()) {
    err << "counterexample: " << bad->graph6 << " (" << bad->theorem << ' ' << report_label(*bad) << ")\n";
    return kExitCounterexample;
  }
  return kExitOk;
}

// ---- structure dumps ------------------------------------------------------

/// Computed structures that fail re-validation point at a library bug.
[[noreturn]] void structure_failure(const std::string& what) {
  throw StructureCheckError("refusing to emit: " + what);
}

int cmd_spdc(const RunConfig& cfg, Io& io) {
  const OutputFormat fmt = parse_output_format(cfg.format);
  if (fmt == OutputFormat::kCsv) io.out() << "graph6,path_index,path\n";
  for (const Graph& g : read_graphs(io.in())) {
    const std::string g6 = write_graph6(g);
    const PathDoubleCover cover = find_spdc(g);
    const PdcVerdict verdict = validate_pdc(g, cover);
    if (!verdict.valid || !verdict.small) {
      structure_failure("cover for " + g6 + (verdict.problems.empty() ? "" : ": " + verdict.problems.front()));
    }
    switch (fmt) {
      case OutputFormat::kJson: {
        Json j;
        j["graph6"] = g6;
        j["paths"] = cover.paths;
        j["count"] = cover.paths.size();
        j["valid"] = true;
        io.out() << j.dump() << '\n';
        break;
      }
      case OutputFormat::kCsv:
        for (std::size_t i = 0; i < cover.paths.size(); ++i) {
          io.out() << g6 << ',' << i << ',' << join(cover.paths[i], " ") << '\n';
        }
        break;
      case OutputFormat::kText: {
        io.out() << g6 << " paths=" << cover.paths.size() << " valid";
        for (std::size_t i = 0; i < cover.paths.size(); ++i) {
          io.out() << (i ? " | " : ": ") << join(cover.paths[i], "-");
        }
        io.out() << '\n';
        break;
      }
    }
  }
  return kExitOk;
}

int cmd_closure(const RunConfig& cfg, Io& io) {
  if (!cfg.k || *cfg.k < 0) throw UsageError("closure requires --k >= 0");
  const OutputFormat fmt = parse_output_format(cfg.format);
  if (fmt == OutputFormat::kCsv) io.out() << "graph6,k,closed,added\n";
  for (const Graph& g : read_graphs(io.in())) {
    const std::string g6 = write_graph6(g);
    const ClosureResult c = k_closure(g, *cfg.k);
    // Supergraph, exactly the listed additions, and closed under the rule.
    Graph rebuilt = g;
    for (const Edge& e : c.added) {
      if (rebuilt.has_edge(e)) structure_failure("closure of " + g6 + " re-adds " + edge_text(e));
      rebuilt = rebuilt.with_edge(e);
    }
    if (!(rebuilt == c.closed)) structure_failure("closure of " + g6);
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v = u + 1; v < g.order(); ++v) {
        if (!c.closed.adjacent(u, v) && c.closed.degree(u) + c.closed.degree(v) >= *cfg.k) {
          structure_failure("closure of " + g6 + " is not closed");
        }
      }
    }
    std::string added;
    for (const Edge& e : c.added) added += (added.empty() ? "" : " ") + edge_text(e);
    switch (fmt) {
      case OutputFormat::kJson: {
        Json j;
        j["graph6"] = g6;
        j["k"] = *cfg.k;
        j["closed"] = write_graph6(c.closed);
        Json list = Json::array();
        for (const Edge& e : c.added) list.push_back({e.u, e.v});
        j["added"] = list;
        io.out() << j.dump() << '\n';
        break;
      }
      case OutputFormat::kCsv:
        io.out() << g6 << ',' << *cfg.k << ',' << write_graph6(c.closed) << ',' << added << '\n';
        break;
      case OutputFormat::kText:
        io.out() << g6 << " k=" << *cfg.k << " closed=" << write_graph6(c.closed) << " added="
                 << (added.empty() ? "none" : added) << '\n';
        break;
    }
  }
  return kExitOk;
}

int cmd_ge(const RunConfig& cfg, Io& io) {
  const OutputFormat fmt = parse_output_format(cfg.format);
  if (fmt == OutputFormat::kCsv) io.out() << "graph6,C,A,D,components\n";
  for (const Graph& g : read_graphs(io.in())) {
    const std::string g6 = write_graph6(g);
    const GEDecomposition ge = gallai_edmonds(g);
    const std::string problem = check_gallai_edmonds(g, ge, max_matching(g));
    if (!problem.empty()) structure_failure("decomposition of " + g6 + ": " + problem);
    switch (fmt) {
      case OutputFormat::kJson: {
        Json j;
        j["graph6"] = g6;
        j["C"] = members(ge.c);
        j["A"] = members(ge.a);
        j["D"] = members(ge.d);
        Json comps = Json::array();
        for (VertexSet comp : ge.d_components) comps.push_back(members(comp));
        j["components"] = comps;
        io.out() << j.dump() << '\n';
        break;
      }
      case OutputFormat::kCsv: {
        std::string comps;
        for (VertexSet comp : ge.d_components) comps += (comps.empty() ? "" : " ") + join(members(comp), "-");
        io.out() << g6 << ',' << join(members(ge.c), " ") << ',' << join(members(ge.a), " ") << ','
                 << join(members(ge.d), " ") << ',' << comps << '\n';
        break;
      }
      case OutputFormat::kText: {
        io.out() << g6 << " C=" << set_text(ge.c) << " A=" << set_text(ge.a) << " D=" << set_text(ge.d)
                 << " components=" << ge.d_components.size();
        for (VertexSet comp : ge.d_components) io.out() << ' ' << set_text(comp);
        io.out() << '\n';
        break;
      }
    }
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact localized statistics and verification over small graphs", "locturan"};
  app.require_subcommand(1);

  auto add_io = [&](CLI::App* sub, bool with_input) {
    if (with_input) sub->add_option("-i,--input", cfg.input, "graph6 lines, one graph per line ('-' = stdin)");
    sub->add_option("-o,--output", cfg.output, "write to this file instead of stdout");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("-f,--format", cfg.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
  };

  CLI::App* enumerate = app.add_subcommand("enumerate", "one graph6 line per isomorphism class on exactly n vertices");
  enumerate->add_option("-n,--n", cfg.n, "order, 1..8")->required();
  enumerate->add_flag("--connected", cfg.connected, "connected graphs only");
  add_io(enumerate, false);

  CLI::App* stats = app.add_subcommand("stats", "per-edge or per-clique statistics");
  stats->add_option("--stat", cfg.stat, "p, c, p_v, mu, s, pS, sK or wp")->required();
  stats->add_option("--roots", cfg.roots, "root for p_v: 'all' or a vertex id")->capture_default_str();
  stats->add_option("--s", cfg.clique_orders, "clique order for pS and sK (repeatable)");
  stats->add_option("--weights", cfg.weights, "weights for wp: unit, file or random")
      ->check(CLI::IsMember({"unit", "file", "random"}));
  stats->add_option("--seed", cfg.seed, "seed for random weights");
  add_io(stats, true);
  add_format(stats);

  CLI::App* verify = app.add_subcommand("verify", "verification reports; exit 1 on the first counterexample");
  verify->add_option("--theorem", cfg.theorems, "theorem id (repeatable) or 'all'")->required();
  verify->add_option("-n,--n", cfg.n, "largest order of the generated corpus (omit to read --input)");
  verify->add_option("--n-min", cfg.n_min, "smallest order of the generated corpus")->capture_default_str();
  verify->add_flag("--connected", cfg.connected, "connected graphs only");
  verify->add_option("--roots", cfg.roots, "'all' or a vertex id")->capture_default_str();
  verify->add_option("--s", cfg.clique_orders, "clique orders (repeatable; default 2 3 4)");
  verify->add_option("--weights", cfg.weights, "unit, file (weighted records on --input) or random")
      ->check(CLI::IsMember({"unit", "file", "random"}))
      ->capture_default_str();
  verify->add_option("--seed", cfg.seed, "seed for random weights; trial t uses seed + t");
  verify->add_option("--trials", cfg.trials, "random weightings per graph")->capture_default_str();
  verify->add_flag("--cover", cfg.cover, "attach the path-double-cover certificate to weighted-mt");
  verify->add_flag("--summary", cfg.summary, "print per-theorem summary with equality census to stderr");
  add_io(verify, true);
  add_format(verify);

  CLI::App* spdc = app.add_subcommand("spdc", "small path double cover of each input graph");
  add_io(spdc, true);
  add_format(spdc);

  CLI::App* closure = app.add_subcommand("closure", "k-closure of each input graph");
  closure->add_option("--k", cfg.k, "degree-sum threshold")->required();
  add_io(closure, true);
  add_format(closure);

  CLI::App* ge = app.add_subcommand("ge", "Gallai-Edmonds decomposition of each input graph");
  add_io(ge, true);
  add_format(ge);

  std::vector<const char*> argv{"locturan"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Io io(cfg, in, out);
    if (enumerate->parsed()) return cmd_enumerate(cfg, io);
    if (stats->parsed()) return cmd_stats(cfg, io);
    if (verify->parsed()) return cmd_verify(cfg, io, err);
    if (spdc->parsed()) return cmd_spdc(cfg, io);
    if (closure->parsed()) return cmd_closure(cfg, io);
    if (ge->parsed()) return cmd_ge(cfg, io);
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& ex) {
    // Size caps, search budgets and failed self-checks.
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace locturan::cli
