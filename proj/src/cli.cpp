// Copyright 2026 The edcn Authors
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


#include "edcn/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "edcn/edcn.hpp"
#include "edcn/embed_odd.hpp"
#include "edcn/families.hpp"
#include "edcn/graph.hpp"
#include "edcn/io.hpp"
#include "edcn/oracle.hpp"

namespace edcn {
namespace {

using nlohmann::json;

constexpr std::uint64_t kGridBudget = 2'000'000;

std::string EdgeText(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

// "kstar:<k>" or nullopt.
std::optional<int> ParseKStar(const std::string& text) {
  constexpr std::string_view kPrefix = "kstar:";
  if (text.rfind(kPrefix, 0) != 0) return std::nullopt;
  const std::string_view rest = std::string_view(text).substr(kPrefix.size());
  int k = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), k);
  if (rest.empty() || ec != std::errc() || ptr != rest.data() + rest.size() ||
      k < 1) {
    throw Error(ErrorCode::kParse, "expected kstar:<k> with k >= 1, got '" +
                                       text + "'");
  }
  return k;
}

// edcn ----------------------------------------------------------------------

struct EdcnArgs {
  std::string spec;
  bool certificate = false;
  bool oracle_check = false;
  std::uint64_t budget = 20'000'000;
};

int RunEdcn(const EdcnArgs& args, std::ostream& out, std::ostream& err) {
  const FamilySpec spec = ParseFamilySpec(args.spec);
  CertificateOptions options;
  options.oracle_budget = args.budget;
  const EdcnResult r = edcn_with_certificate(spec, options);
  out << "lambda=" << r.lambda << " (" << r.provenance << ")\n";

  int code = kExitOk;
  if (args.oracle_check) {
    const LoopedGraph g = realize(spec).graph;
    const BruteforceResult b =
        edcn_bruteforce(g, r.lambda, SearchOptions{args.budget, true});
    if (b.status == BruteforceResult::Status::kBudgetExhausted) {
      err << "oracle budget exhausted below k=" << r.lambda << "\n";
      code = kExitCapability;
    } else if (b.status != BruteforceResult::Status::kExact ||
               b.lambda != r.lambda) {
      err << "oracle mismatch: oracle gives "
          << (b.status == BruteforceResult::Status::kExact
                  ? std::to_string(b.lambda)
                  : "> " + std::to_string(r.lambda))
          << ", computed " << r.lambda << "\n";
      code = kExitVerifyFailed;
    } else {
      out << "oracle=" << b.lambda << " (agrees)\n";
    }
  }
  if (args.certificate) {
    json cert = {{"spec", ToString(spec)},
                 {"lambda", r.lambda},
                 {"provenance", r.provenance},
                 {"method", r.method},
                 {"graph", GraphToJson(realize(spec).graph)},
                 {"coloring", ColoringToJson(r.coloring)},
                 {"embedding", EmbeddingToJson(r.embedding)}};
    out << cert.dump(2) << "\n";
  }
  return code;
}

// verify --------------------------------------------------------------------

int RunVerify(const std::string& graph_path, const std::string& labels_path,
              std::ostream& out, std::ostream& err) {
  const LoopedGraph g = GraphFromJson(ReadJsonFile(graph_path));
  const json doc = ReadJsonFile(labels_path);
  VertexColoring coloring;
  if (doc.is_object() && doc.contains("map")) {
    Embedding e = EmbeddingFromJson(doc);
    if (!(e.source.edges() == g.edges()) ||
        e.source.vertex_count() != g.vertex_count()) {
      err << "embedding source differs from " << graph_path << "\n";
      return kExitVerifyFailed;
    }
    const EmbeddingReport report = verify_embedding(e);
    if (!report.ok) {
      err << "FAIL: " << report.violation << "\n";
      return kExitVerifyFailed;
    }
    coloring = VertexColoring::FromEmbedding(e);
  } else {
    coloring = ColoringFromJson(doc);
  }
  const ColoringReport report = verify_coloring(g, coloring);
  if (!report.ok) {
    const Edge pair(coloring.colors[report.first.u],
                    coloring.colors[report.first.v]);
    err << "FAIL: edges " << EdgeText(report.first) << " and "
        << EdgeText(report.second) << " both receive color pair "
        << EdgeText(pair) << "\n";
    return kExitVerifyFailed;
  }
  out << "ok: " << g.edge_count() << " edges, " << coloring.k
      << " colors, all edge color pairs distinct\n";
  return kExitOk;
}

// grid ----------------------------------------------------------------------

struct GridArgs {
  std::string family;
  std::vector<int> ks;
  bool construct = false;
  bool oracle = false;
  bool both = false;
  bool summary = false;
  bool json_out = false;
  int max_edges = -1;
  std::uint64_t budget = kGridBudget;
};

struct GridRow {
  std::vector<int> params;
  int k = 0;
  int edges = 0;
  std::optional<int> formula;
  std::string construct = "-";
  std::string oracle = "-";
  std::string status;
};

std::vector<FamilySpec> Instances(const std::string& family, int max_edges) {
  std::vector<FamilySpec> out;
  const int m = max_edges;
  if (family == "path") {
    for (int n = 2; n - 1 <= m; ++n) out.push_back(PathSpec{n});
  } else if (family == "cycle") {
    for (int n = 3; n <= m; ++n) out.push_back(CycleSpec{n});
  } else if (family == "petal") {
    for (int c2 = 3; 1 + 2 * c2 <= m; ++c2) {
      for (int c3 = c2; 1 + c2 + c3 <= m; ++c3) {
        out.push_back(PetalSpec{{1, c2, c3}});
      }
    }
  } else if (family == "chorded") {
    for (int n = 4; n + 1 <= m; ++n) {
      for (int j = 2; j <= n / 2; ++j) out.push_back(ChordedCycleSpec{n, j});
    }
  } else if (family == "spider3") {
    for (int a = 1; 3 * a <= m; ++a) {
      for (int b = a; a + 2 * b <= m; ++b) {
        for (int c = b; a + b + c <= m; ++c) out.push_back(SpiderSpec{{a, b, c}});
      }
    }
  } else if (family == "spider4") {
    for (int a = 1; 4 * a <= m; ++a) {
      for (int b = a; a + 3 * b <= m; ++b) {
        for (int c = b; a + b + 2 * c <= m; ++c) {
          for (int d = c; a + b + c + d <= m; ++d) {
            out.push_back(SpiderSpec{{a, b, c, d}});
          }
        }
      }
    }
  } else {
    throw Error(ErrorCode::kParse,
                "unknown grid family '" + family +
                    "' (path, cycle, petal, chorded, spider3, spider4)");
  }
  return out;
}

std::vector<int> Params(const FamilySpec& spec) {
  return std::visit(
      [](const auto& s) -> std::vector<int> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PathSpec> ||
                      std::is_same_v<T, CycleSpec>) {
          return {s.n};
        } else if constexpr (std::is_same_v<T, PetalSpec>) {
          return s.petals;
        } else if constexpr (std::is_same_v<T, ChordedCycleSpec>) {
          return {s.n, s.j};
        } else if constexpr (std::is_same_v<T, SpiderSpec>) {
          return s.legs;
        } else {
          return {s.length};
        }
      },
      spec);
}

// Constructs at k, or at the largest smaller k a constructor covers and
// lifts the result.
std::string RunConstruct(const FamilySpec& spec, int k) {
  for (int at = k; at >= 1; --at) {
    try {
      const std::optional<Construction> c = construct_at(spec, at);
      if (!c) continue;
      const Embedding e = LiftTo(c->embedding, k);
      return verify_embedding(e).ok ? "embedded" : "invalid";
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kTooManyEdges ||
          e.code() == ErrorCode::kProvenImpossible) {
        return at == k ? "impossible" : "uncovered";
      }
      if (e.code() == ErrorCode::kInternal) return "invalid";
      throw;
    }
  }
  return "uncovered";
}

std::string RunOracle(const LoopedGraph& g, int k, std::uint64_t budget) {
  const SearchResult r = find_embedding(g, k, SearchOptions{budget, true});
  switch (r.status) {
    case SearchStatus::kFound:
      return verify_embedding(*r.embedding).ok ? "embedded" : "invalid";
    case SearchStatus::kProvenNone:
      return "impossible";
    case SearchStatus::kBudgetExhausted:
      return "budget";
  }
  return "budget";
}

bool Decisive(const std::string& s) {
  return s == "embedded" || s == "impossible";
}

std::string Status(const GridRow& row) {
  if (row.construct == "invalid" || row.oracle == "invalid") return "FAIL";
  if (Decisive(row.construct) && Decisive(row.oracle) &&
      row.construct != row.oracle) {
    return "FAIL";
  }
  const std::string& decided = Decisive(row.construct) ? row.construct
                                                       : row.oracle;
  if (!Decisive(decided)) return "unknown";
  if (row.formula && (decided == "embedded") != (*row.formula <= row.k)) {
    return "FAIL";
  }
  return decided == "embedded" ? "embeds" : "impossible";
}

std::string JoinParams(const std::vector<int>& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += ';';
    out += std::to_string(p[i]);
  }
  return out;
}

int RunGrid(const GridArgs& args, std::ostream& out) {
  const bool construct = args.construct || args.both ||
                         (!args.oracle && !args.construct);
  const bool oracle = args.oracle || args.both;
  std::vector<GridRow> rows;
  for (int k : args.ks) {
    if (k < 1) throw Error(ErrorCode::kInvalidParameter, "k must be positive");
    int cap = k * (k + 1) / 2;
    if (args.max_edges >= 0) cap = std::min(cap, args.max_edges);
    for (const FamilySpec& spec : Instances(args.family, cap)) {
      GridRow row;
      row.params = Params(spec);
      row.k = k;
      row.edges = edge_count(spec);
      try {
        row.formula = edcn_formula(spec).lambda;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kNoFormula) throw;
      }
      if (construct) row.construct = RunConstruct(spec, k);
      if (oracle) row.oracle = RunOracle(realize(spec).graph, k, args.budget);
      row.status = Status(row);
      rows.push_back(std::move(row));
    }
  }
  std::sort(rows.begin(), rows.end(), [](const GridRow& a, const GridRow& b) {
    return std::tie(a.params, a.k) < std::tie(b.params, b.k);
  });

  int fail = 0, unknown = 0, embeds = 0, impossible = 0;
  for (const GridRow& row : rows) {
    fail += row.status == "FAIL";
    unknown += row.status == "unknown";
    embeds += row.status == "embeds";
    impossible += row.status == "impossible";
  }
  const json summary = {{"instances", rows.size()}, {"embeds", embeds},
                        {"impossible", impossible}, {"unknown", unknown},
                        {"fail", fail}};
  auto formula_text = [](const GridRow& row) {
    return row.formula ? std::to_string(*row.formula) : std::string("-");
  };

  if (args.json_out) {
    json doc = json::object();
    doc["family"] = args.family;
    if (!args.summary) {
      json list = json::array();
      for (const GridRow& row : rows) {
        list.push_back({{"params", row.params},
                        {"k", row.k},
                        {"edges", row.edges},
                        {"formula", formula_text(row)},
                        {"construct", row.construct},
                        {"oracle", row.oracle},
                        {"status", row.status}});
      }
      doc["rows"] = list;
    }
    doc["summary"] = summary;
    out << doc.dump(2) << "\n";
  } else if (args.summary) {
    out << "family,instances,embeds,impossible,unknown,fail\n"
        << args.family << "," << rows.size() << "," << embeds << ","
        << impossible << "," << unknown << "," << fail << "\n";
  } else {
    out << "family,params,k,edges,formula,construct,oracle,status\n";
    for (const GridRow& row : rows) {
      out << args.family << "," << JoinParams(row.params) << "," << row.k << ","
          << row.edges << "," << formula_text(row) << "," << row.construct
          << "," << row.oracle << "," << row.status << "\n";
    }
  }
  if (fail > 0) return kExitVerifyFailed;
  if (unknown > 0) return kExitCapability;
  return kExitOk;
}

// export --------------------------------------------------------------------

struct ExportArgs {
  std::string spec;
  std::string format = "dot";
  bool color = false;
};

int RunExport(const ExportArgs& args, std::ostream& out) {
  if (const std::optional<int> k = ParseKStar(args.spec)) {
    if (args.format == "dot") {
      out << KStarDot(*k);
    } else {
      out << GraphToJson(build_k_star(*k)).dump(2) << "\n";
    }
    return kExitOk;
  }
  const FamilySpec spec = ParseFamilySpec(args.spec);
  const LoopedGraph g = realize(spec).graph;
  std::optional<VertexColoring> coloring;
  if (args.color) coloring = edcn_with_certificate(spec).coloring;
  if (args.format == "dot") {
    out << ToDot(g, ToString(spec), coloring ? &*coloring : nullptr);
  } else {
    json doc = GraphToJson(g);
    if (coloring) doc["coloring"] = ColoringToJson(*coloring);
    out << doc.dump(2) << "\n";
  }
  return kExitOk;
}

}  // namespace

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
    case ErrorCode::kInvalidParameter:
    case ErrorCode::kUnsupportedInput:
    case ErrorCode::kNotEulerian:
      return kExitInput;
    case ErrorCode::kCapability:
    case ErrorCode::kNoFormula:
      return kExitCapability;
    case ErrorCode::kProvenImpossible:
    case ErrorCode::kTooManyEdges:
    case ErrorCode::kInternal:
      return kExitVerifyFailed;
  }
  return kExitVerifyFailed;
}

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Edge-distinguishing chromatic numbers of graph families"};
  app.require_subcommand(1);

  EdcnArgs edcn_args;
  CLI::App* edcn = app.add_subcommand("edcn", "Compute lambda with a certificate");
  edcn->add_option("spec", edcn_args.spec,
                   "Family spec, e.g. petal:1,3,3 or chorded:n=8,j=2")
      ->required();
  edcn->add_flag("--certificate", edcn_args.certificate,
                 "Print the JSON certificate");
  edcn->add_flag("--oracle-check", edcn_args.oracle_check,
                 "Confirm lambda with exhaustive search");
  edcn->add_option("--budget", edcn_args.budget, "Search node budget");

  std::string graph_path, labels_path;
  CLI::App* verify = app.add_subcommand(
      "verify", "Check a coloring or embedding against a graph");
  verify->add_option("graph", graph_path, "Graph JSON")->required();
  verify->add_option("coloring", labels_path, "Coloring or embedding JSON")
      ->required();

  GridArgs grid_args;
  CLI::App* grid = app.add_subcommand("grid", "Sweep a family over k");
  grid->add_option("family", grid_args.family,
                   "path, cycle, petal, chorded, spider3 or spider4")
      ->required();
  grid->add_option("--k", grid_args.ks, "Comma-separated k values")
      ->required()
      ->delimiter(',');
  auto* c = grid->add_flag("--construct", grid_args.construct,
                           "Run the constructions");
  auto* o = grid->add_flag("--oracle", grid_args.oracle, "Run the oracle");
  auto* b = grid->add_flag("--both", grid_args.both, "Run both engines");
  c->excludes(o)->excludes(b);
  o->excludes(b);
  grid->add_flag("--summary", grid_args.summary, "Print counts only");
  grid->add_flag("--json", grid_args.json_out, "JSON instead of CSV");
  grid->add_option("--max-edges", grid_args.max_edges,
                   "Only instances with at most this many edges");
  grid->add_option("--budget", grid_args.budget,
                   "Oracle node budget per instance");

  ExportArgs export_args;
  CLI::App* exp = app.add_subcommand("export", "Write a graph as DOT or JSON");
  exp->add_option("spec", export_args.spec, "Family spec or kstar:<k>")
      ->required();
  exp->add_option("--format", export_args.format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  exp->add_flag("--color", export_args.color,
                "Attach an optimal edge-distinguishing coloring");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*edcn) return RunEdcn(edcn_args, out, err);
    if (*verify) return RunVerify(graph_path, labels_path, out, err);
    if (*grid) return RunGrid(grid_args, out);
    if (*exp) return RunExport(export_args, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  }
  return kExitInput;
}

}  // namespace edcn
