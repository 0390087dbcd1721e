#include "cli.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rigidkit/connectivity.h"
#include "rigidkit/error.h"
#include "rigidkit/extractor.h"
#include "rigidkit/field.h"
#include "rigidkit/generators.h"
#include "rigidkit/global_rigidity.h"
#include "rigidkit/graph.h"
#include "rigidkit/linked_pairs.h"
#include "rigidkit/rigidity.h"
#include "rigidkit/rng.h"

namespace rigidkit::cli {
namespace {

using Json = nlohmann::ordered_json;

// Failure that maps straight onto an exit code.
struct CliFailure {
  int code;
  std::string message;
  Json report;  // optional partial report printed before exiting
};

struct InputOptions {
  std::string path;
  std::string family;
  std::vector<int> params;
};

struct CommonOptions {
  std::string seed = std::to_string(Rng::kDefaultSeed);
  bool no_timing = false;
};

std::uint64_t ParseSeed(const std::string& text) {
  try {
    std::size_t used = 0;
    const std::uint64_t seed = std::stoull(text, &used, 0);
    if (used != text.size()) throw std::invalid_argument(text);
    return seed;
  } catch (const std::exception&) {
    throw CliFailure{kExitArgs, "invalid seed '" + text + "'", {}};
  }
}

Graph LoadGraph(const InputOptions& input, std::istream& in) {
  if (!input.family.empty()) {
    try {
      return Generate({input.family, input.params});
    } catch (const std::invalid_argument& e) {
      throw CliFailure{kExitArgs, e.what(), {}};
    }
  }
  if (input.path.empty()) throw CliFailure{kExitArgs, "one of --in or --family is required", {}};
  std::string text;
  if (input.path == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream file(input.path, std::ios::binary);
    if (!file) throw CliFailure{kExitParse, "cannot read '" + input.path + "'", {}};
    std::ostringstream buffer;
    buffer << file.rdbuf();
    text = buffer.str();
  }
  try {
    return ParseEdgeList(text);
  } catch (const ParseError& e) {
    throw CliFailure{kExitParse, input.path + ": " + e.what(), {}};
  } catch (const std::invalid_argument& e) {
    throw CliFailure{kExitParse, input.path + ": " + e.what(), {}};
  }
}

Json EdgesJson(const EdgeList& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

Json EdgesJson(const Graph& g, const std::vector<int>& indices) {
  Json out = Json::array();
  for (int i : indices) out.push_back({g.edge(i).u, g.edge(i).v});
  return out;
}

Json DigestJson(const Graph& g) {
  Json out;
  out["n"] = g.num_vertices();
  out["m"] = g.num_edges();
  out["canonical_hash"] = CanonicalHash(g);
  return out;
}

Json CertificateJson(const GlobalRigidityCertificate& c) {
  Json out;
  out["globally_rigid"] = c.globally_rigid;
  out["path"] = c.path;
  out["rigid"] = c.rigid;
  if (c.path == "stress") {
    out["stress_seed"] = c.seed;
    out["stress_rank"] = c.stress_rank;
    out["target_rank"] = c.target_rank;
  }
  return out;
}

std::string Hex64(std::uint64_t value) {
  static const char* kDigits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, value >>= 4) s[i] = kDigits[value & 15];
  return s;
}

std::string Fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return Hex64(h);
}

// Envelope: the reproducible report, its hash, then the timing trailer.
void Emit(std::ostream& out, const std::string& command, const Json& report, double wall_ms,
          bool with_timing) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["p"] = kPrime;
  doc["command"] = command;
  doc["report"] = report;
  doc["report_hash"] = Fnv1a(report.dump());
  if (with_timing) doc["timing"] = {{"wall_ms", std::round(wall_ms * 1000.0) / 1000.0}};
  out << doc.dump(2) << '\n';
}

void CheckDim(int d, int max_d) {
  if (d < 1 || d > max_d) {
    throw CliFailure{kExitArgs, "--dim must be in [1, " + std::to_string(max_d) + "]", {}};
  }
}

// ---------------------------------------------------------------------------

struct AnalyzeArgs {
  InputOptions input;
  int dim = 2;
  std::string method = "auto";
  int grn = 0;
};

Json Analyze(const AnalyzeArgs& a, std::uint64_t seed, std::istream& in, std::ostream& err) {
  CheckDim(a.dim, 6);
  GlobalRigidityMethod method;
  try {
    method = ParseMethod(a.method);
  } catch (const std::invalid_argument& e) {
    throw CliFailure{kExitArgs, e.what(), {}};
  }
  if (a.grn < 0 || a.grn > 6) throw CliFailure{kExitArgs, "--grn must be in [0, 6]", {}};
  const Graph g = LoadGraph(a.input, in);
  const int n = g.num_vertices();
  const int m = g.num_edges();
  const int d = a.dim;

  Json report;
  report["input"] = DigestJson(g);
  report["dim"] = d;
  report["seed"] = seed;
  report["method"] = MethodName(method);

  Rng matroid_rng = Rng::Derive(seed, 0);
  const MatroidReport matroid = AnalyzeMatroid(g, d, matroid_rng);
  const bool rigid = matroid.rank == RigidRank(n, d);
  report["rank"] = matroid.rank;
  report["rigid_rank"] = RigidRank(n, d);
  report["rigid"] = rigid;
  Rng rr_rng = Rng::Derive(seed, 1);
  report["redundantly_rigid"] = rigid && IsRedundantlyRigid(g, d, rr_rng);

  Rng gr_rng = Rng::Derive(seed, 2);
  const GlobalRigidityCertificate cert = CheckGlobalRigidity(g, d, gr_rng, method);
  report["globally_rigid"] = cert.globally_rigid;
  report["certificate"] = CertificateJson(cert);
  Rng mgr_rng = Rng::Derive(seed, 3);
  const bool minimal = cert.globally_rigid && IsMinimallyGloballyRigid(g, d, mgr_rng, method);
  report["minimally_globally_rigid"] = minimal;
  report["min_degree"] = g.min_degree();
  report["vertex_connectivity"] = n >= 2 ? VertexConnectivity(g) : 0;

  Json mat;
  mat["independent"] = matroid.independent;
  mat["circuit"] = matroid.circuit;
  mat["connected"] = matroid.connected;
  mat["bridges"] = EdgesJson(g, matroid.bridges);
  Json comps = Json::array();
  for (const auto& c : matroid.components) comps.push_back(EdgesJson(g, c));
  mat["components"] = comps;
  report["matroid"] = mat;

  Json bounds;
  const long mgr_bound = SparsifyBound(n, d);
  bounds["minimally_globally_rigid"] = {
      {"formula", "(d+1)n - C(d+2,2)"}, {"value", mgr_bound}, {"exceeded", m > mgr_bound}};
  // Mader: minimally (d+1)-connected graphs with n >= 3d+1.
  const long mader = static_cast<long>(d + 1) * n - static_cast<long>(d + 1) * (d + 1);
  bounds["minimally_connected"] = {{"formula", "(d+1)n - (d+1)^2"},
                                   {"applies", n >= 3 * d + 1},
                                   {"value", mader},
                                   {"exceeded", m > mader}};
  report["bounds"] = bounds;

  Json grn;
  grn["conditional_formula"] = "floor(sqrt(m / (6n)))";
  long t = 0;
  while (n > 0 && 6L * n * (t + 1) * (t + 1) <= m) ++t;
  grn["conditional_bound"] = t;
  if (a.grn > 0) {
    Rng grn_rng = Rng::Derive(seed, 4);
    const GrnEstimate est = EstimateGrn(g, a.grn, grn_rng);
    grn["search_max_dim"] = a.grn;
    grn["lower_bound"] = est.lower_bound;
    grn["method"] = est.method;
    grn["witness_vertices"] = est.vertices;
  }
  report["grn"] = grn;

  err << "analyze: n=" << n << " m=" << m << " d=" << d << " rank=" << matroid.rank << "/"
      << RigidRank(n, d) << " rigid=" << (rigid ? "yes" : "no")
      << " globally_rigid=" << (cert.globally_rigid ? "yes" : "no") << " (" << cert.path << ")"
      << " minimal=" << (minimal ? "yes" : "no") << " bound=" << mgr_bound << "\n";
  return report;
}

// ---------------------------------------------------------------------------

struct SparsifyArgs {
  InputOptions input;
  int dim = 2;
  std::string method = "auto";
};

Json Sparsify(const SparsifyArgs& a, std::uint64_t seed, std::istream& in, std::ostream& err) {
  CheckDim(a.dim, 6);
  GlobalRigidityMethod method;
  try {
    method = ParseMethod(a.method);
  } catch (const std::invalid_argument& e) {
    throw CliFailure{kExitArgs, e.what(), {}};
  }
  const Graph g = LoadGraph(a.input, in);
  const int d = a.dim;
  Json report;
  report["input"] = DigestJson(g);
  report["dim"] = d;
  report["seed"] = seed;
  report["method"] = MethodName(method);

  Rng rng(seed);
  SparsifyResult r;
  try {
    if (g.num_vertices() < d + 2) {
      throw CliFailure{kExitArgs, "sparsify needs at least d + 2 vertices", {}};
    }
    r = SparsifyGloballyRigid(g, d, rng, method);
  } catch (const NotGloballyRigid&) {
    Rng check(seed);
    report["globally_rigid"] = false;
    report["certificate"] = CertificateJson(CheckGlobalRigidity(g, d, check, method));
    throw CliFailure{kExitNotGloballyRigid, "input is not globally rigid in dimension " +
                                                std::to_string(d),
                     report};
  }
  const long bound = SparsifyBound(g.num_vertices(), d);
  report["globally_rigid"] = true;
  Json sub;
  sub["n"] = r.graph.num_vertices();
  sub["m"] = r.graph.num_edges();
  sub["canonical_hash"] = CanonicalHash(r.graph);
  sub["edges"] = EdgesJson(r.graph.edges());
  report["subgraph"] = sub;
  report["edge_count"] = r.graph.num_edges();
  report["bound"] = bound;
  report["within_bound"] = r.graph.num_edges() <= bound;
  Json log;
  log["basis_size"] = r.basis_size;
  log["basis"] = EdgesJson(g, r.basis);
  log["generators_before"] = r.generators_before;
  log["generators_after"] = r.generators_after;
  log["extra"] = EdgesJson(g, r.extra);
  log["stage4_edges"] = r.stage4_edges;
  log["removed"] = EdgesJson(r.removed);
  log["randomized_faults"] = r.randomized_faults;
  log["attempt_seed"] = r.seed;
  report["log"] = log;

  err << "sparsify: " << g.num_edges() << " -> " << r.graph.num_edges() << " edges (bound "
      << bound << "), stage 4 kept " << r.stage4_edges << ", faults " << r.randomized_faults
      << "\n";
  return report;
}

// ---------------------------------------------------------------------------

struct ExtractArgs {
  InputOptions input;
  int k = 0;
  bool grs2d = false;
};

Json ExtractionJson(const ExtractionResult& r, const Graph& input) {
  Json out;
  Json sub;
  sub["n"] = r.graph.num_vertices();
  sub["m"] = r.graph.num_edges();
  sub["vertices"] = r.vertices;
  sub["edges"] = EdgesJson(r.graph.edges());
  out["subgraph"] = sub;

  Json trace;
  trace["requested_k"] = r.trace.requested_k;
  trace["k"] = r.trace.k;
  trace["promoted"] = r.trace.promoted;
  Json steps = Json::array();
  for (const ExtractionStep& s : r.trace.steps) {
    Json step;
    if (s.kind == ExtractionStep::Kind::kVertexDeletion) {
      step["kind"] = "delete-vertex";
      step["vertex"] = s.vertex;
      step["reason"] = s.reason;
    } else {
      step["kind"] = "split";
      step["cut_vertices"] = s.cut_vertices;
      step["cut_edges"] = EdgesJson(s.cut_edges);
      step["side"] = s.side;
      step["side_vertices"] = s.side_vertices;
    }
    steps.push_back(step);
  }
  trace["steps"] = steps;
  out["trace"] = trace;
  out["min_mixed_cut"] = r.min_mixed_cut;
  const ExtractionResult replay = ReplayTrace(input, r.trace);
  out["replay_matches"] = replay.graph == r.graph && replay.vertices == r.vertices;
  return out;
}

Json Extract(const ExtractArgs& a, std::uint64_t seed, std::istream& in, std::ostream& err) {
  if (a.grs2d == (a.k > 0)) throw CliFailure{kExitArgs, "exactly one of --k or --grs2d", {}};
  const Graph g = LoadGraph(a.input, in);
  const long n = g.num_vertices();
  const long m = g.num_edges();
  Json report;
  report["input"] = DigestJson(g);
  if (a.grs2d) {
    report["mode"] = "grs2d";
    report["seed"] = seed;
    if (n < 7) {
      throw CliFailure{kExitHypothesis, "|V| = " + std::to_string(n) + " < 7", report};
    }
    if (m < 5 * n - 14) {
      throw CliFailure{kExitHypothesis,
                       "|E| = " + std::to_string(m) + " < 5|V| - 14 = " +
                           std::to_string(5 * n - 14),
                       report};
    }
    Rng rng(seed);
    const std::optional<RigidSubgraphResult> r = GloballyRigidSubgraph2d(g, rng);
    if (!r) throw CliFailure{kExitHypothesis, "density hypothesis with k = 6 fails", report};
    Json body = ExtractionJson(r->extraction, g);
    for (auto it = body.begin(); it != body.end(); ++it) report[it.key()] = it.value();
    report["globally_rigid"] = r->globally_rigid;
    report["redundantly_globally_rigid"] = r->redundantly_globally_rigid;
    const bool verified = r->extraction.graph.num_vertices() >= 7 &&
                          r->extraction.min_mixed_cut >= 6 && r->globally_rigid &&
                          r->redundantly_globally_rigid && report["replay_matches"].get<bool>();
    report["verified"] = verified;
    err << "extract --grs2d: " << r->extraction.graph.num_vertices() << " vertices, "
        << r->extraction.graph.num_edges() << " edges, mixed cut "
        << r->extraction.min_mixed_cut << ", redundantly globally rigid: "
        << (r->redundantly_globally_rigid ? "yes" : "no") << "\n";
    return report;
  }
  report["mode"] = "k";
  report["k"] = a.k;
  ExtractionResult r;
  try {
    r = MixedKConnectedSubgraph(g, a.k);
  } catch (const HypothesisNotSatisfied& e) {
    throw CliFailure{kExitHypothesis, e.what(), report};
  }
  Json body = ExtractionJson(r, g);
  for (auto it = body.begin(); it != body.end(); ++it) report[it.key()] = it.value();
  report["verified"] = r.min_mixed_cut >= r.trace.k && report["replay_matches"].get<bool>();
  err << "extract --k " << a.k << ": " << r.graph.num_vertices() << " vertices, "
      << r.graph.num_edges() << " edges, mixed cut " << r.min_mixed_cut << ", "
      << r.trace.steps.size() << " steps\n";
  return report;
}

// ---------------------------------------------------------------------------

struct ExploreArgs {
  std::string conjecture;
  int dim = 1;
  int max_n = 0;
  int min_n = 1;
  std::vector<double> random;  // COUNT P
  bool connected = false;
  int threads = 0;
};

Json Explore(const ExploreArgs& a, std::uint64_t seed, std::ostream& err) {
  ExplorerOptions options;
  try {
    options.kind = ParseConjecture(a.conjecture);
  } catch (const std::invalid_argument& e) {
    throw CliFailure{kExitArgs, e.what(), {}};
  }
  CheckDim(a.dim, 2);
  if (a.max_n < 1 || a.max_n > 9) throw CliFailure{kExitArgs, "--max-n must be in [1, 9]", {}};
  if (a.threads < 0) throw CliFailure{kExitArgs, "--threads must be >= 0", {}};
  options.d = a.dim;
  options.seed = seed;
  options.threads = a.threads;
  CorpusSpec& corpus = options.corpus;
  corpus.connected_only = a.connected;
  if (!a.random.empty()) {
    const double count = a.random[0];
    const double p = a.random[1];
    if (count < 0 || count != std::floor(count) || count > 1e9 || !(p >= 0.0 && p <= 1.0)) {
      throw CliFailure{kExitArgs, "--random expects COUNT >= 0 and 0 <= P <= 1", {}};
    }
    corpus.kind = CorpusSpec::Kind::kRandom;
    corpus.count = static_cast<int>(count);
    corpus.n = a.max_n;
    corpus.edge_probability = p;
    corpus.seed = seed;
  } else {
    if (a.min_n < 1 || a.min_n > a.max_n) {
      throw CliFailure{kExitArgs, "--min-n must be in [1, max-n]", {}};
    }
    corpus.kind = CorpusSpec::Kind::kExhaustive;
    corpus.min_n = a.min_n;
    corpus.max_n = a.max_n;
  }
  ExplorerReport r;
  try {
    r = ExploreConjecture(options);
  } catch (const std::invalid_argument& e) {
    throw CliFailure{kExitArgs, e.what(), {}};
  }

  Json report;
  report["conjecture"] = ConjectureName(r.kind);
  report["dim"] = r.d;
  Json c;
  if (corpus.kind == CorpusSpec::Kind::kRandom) {
    c["kind"] = "random";
    c["count"] = corpus.count;
    c["n"] = corpus.n;
    c["edge_probability"] = corpus.edge_probability;
  } else {
    c["kind"] = "exhaustive";
    c["min_n"] = corpus.min_n;
    c["max_n"] = corpus.max_n;
    c["isomorph_rejection"] = corpus.isomorph_rejection;
  }
  c["connected_only"] = corpus.connected_only;
  report["corpus"] = c;
  report["seed"] = seed;
  report["graphs"] = r.graphs;
  report["instances"] = r.instances;
  report["confirmed"] = r.confirmed;
  report["unknown"] = r.unknown;
  Json cands = Json::array();
  for (const ConjectureCandidate& cand : r.candidates) {
    Json j;
    j["graph_index"] = cand.graph_index;
    j["n"] = cand.graph.num_vertices();
    j["edges"] = EdgesJson(cand.graph.edges());
    if (cand.has_item) j["item"] = {cand.item.u, cand.item.v};
    j["detail"] = cand.detail;
    cands.push_back(j);
  }
  report["candidates"] = cands;
  err << "explore " << ConjectureName(r.kind) << " d=" << r.d << ": " << r.graphs
      << " graphs, " << r.instances << " instances, " << r.confirmed << " confirmed, "
      << r.unknown << " unknown, " << r.candidates.size() << " candidates\n";
  return report;
}

// ---------------------------------------------------------------------------

void AddInputOptions(CLI::App* cmd, InputOptions& input) {
  auto* in = cmd->add_option("--in", input.path, "Edge-list file ('-' for stdin)");
  auto* fam = cmd->add_option("--family", input.family, "Generate the input instead");
  cmd->add_option("--params", input.params, "Generator parameters")->needs(fam);
  in->excludes(fam);
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"rigidkit: combinatorial rigidity toolkit", "rigidkit"};
  app.require_subcommand(1);
  CommonOptions common;
  app.add_option("--seed", common.seed, "Random seed (decimal or 0x-prefixed hex)");
  app.add_flag("--no-timing", common.no_timing, "Omit the wall-time trailer");
  app.fallthrough();

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Rigidity, global rigidity and matroid report");
  AddInputOptions(analyze_cmd, analyze.input);
  analyze_cmd->add_option("--dim", analyze.dim, "Dimension d (1..6)")->required();
  analyze_cmd->add_option("--method", analyze.method, "auto | stress | combinatorial");
  analyze_cmd->add_option("--grn", analyze.grn, "Also estimate grn, searching d = N..1");

  SparsifyArgs sparsify;
  auto* sparsify_cmd = app.add_subcommand("sparsify", "Minimally globally rigid spanning subgraph");
  AddInputOptions(sparsify_cmd, sparsify.input);
  sparsify_cmd->add_option("--dim", sparsify.dim, "Dimension d (1..6)")->required();
  sparsify_cmd->add_option("--method", sparsify.method, "auto | stress | combinatorial");

  ExtractArgs extract;
  auto* extract_cmd = app.add_subcommand("extract", "Mixed k-connected subgraph extraction");
  AddInputOptions(extract_cmd, extract.input);
  extract_cmd->add_option("--k", extract.k, "Target mixed connectivity");
  extract_cmd->add_flag("--grs2d", extract.grs2d,
                        "Redundantly globally rigid subgraph in the plane (k = 6)");

  ExploreArgs explore;
  auto* explore_cmd = app.add_subcommand("explore", "Search small graphs for counterexamples");
  explore_cmd->add_option("--conjecture", explore.conjecture, "linked-gl | redundant-mc | bridge")
      ->required();
  explore_cmd->add_option("--dim", explore.dim, "Dimension d (1..2)")->required();
  explore_cmd->add_option("--max-n", explore.max_n, "Largest vertex count (<= 9)")->required();
  explore_cmd->add_option("--min-n", explore.min_n, "Smallest vertex count (exhaustive mode)");
  explore_cmd->add_option("--random", explore.random, "COUNT P: sample G(max-n, P) instead")
      ->expected(2);
  explore_cmd->add_flag("--connected", explore.connected, "Connected graphs only");
  explore_cmd->add_option("--threads", explore.threads, "Worker threads (0 = all cores)");

  GeneratorSpec generate;
  auto* generate_cmd = app.add_subcommand("generate", "Print a named graph as an edge list");
  generate_cmd->add_option("--family", generate.family, "Family name")->required();
  generate_cmd->add_option("--params", generate.params, "Family parameters");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "rigidkit: " << e.what() << "\n";
    return kExitArgs;
  }

  const auto start = std::chrono::steady_clock::now();
  std::string command;
  try {
    if (generate_cmd->parsed()) {
      Graph g;
      try {
        g = Generate(generate);
      } catch (const std::invalid_argument& e) {
        throw CliFailure{kExitArgs, e.what(), {}};
      }
      out << SerializeEdgeList(g);
      err << "generate " << generate.family << ": n=" << g.num_vertices()
          << " m=" << g.num_edges() << "\n";
      return kExitOk;
    }
    const std::uint64_t seed = ParseSeed(common.seed);
    Json report;
    if (analyze_cmd->parsed()) {
      command = "analyze";
      report = Analyze(analyze, seed, in, err);
    } else if (sparsify_cmd->parsed()) {
      command = "sparsify";
      report = Sparsify(sparsify, seed, in, err);
    } else if (extract_cmd->parsed()) {
      command = "extract";
      report = Extract(extract, seed, in, err);
    } else {
      command = "explore";
      report = Explore(explore, seed, err);
    }
    const std::chrono::duration<double, std::milli> wall = std::chrono::steady_clock::now() - start;
    Emit(out, command, report, wall.count(), !common.no_timing);
    return kExitOk;
  } catch (const CliFailure& f) {
    if (!f.report.is_null()) {
      Json report = f.report;
      report["error"] = {{"exit_code", f.code}, {"message", f.message}};
      const std::chrono::duration<double, std::milli> wall =
          std::chrono::steady_clock::now() - start;
      Emit(out, command, report, wall.count(), !common.no_timing);
    }
    err << "rigidkit: " << f.message << "\n";
    return f.code;
  } catch (const HypothesisNotSatisfied& e) {
    err << "rigidkit: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const NotGloballyRigid& e) {
    err << "rigidkit: " << e.what() << "\n";
    return kExitNotGloballyRigid;
  } catch (const std::invalid_argument& e) {
    err << "rigidkit: " << e.what() << "\n";
    return kExitArgs;
  } catch (const std::exception& e) {
    err << "rigidkit: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace rigidkit::cli
