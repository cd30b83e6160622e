#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include "cli.hpp"
#include "lgc/encode.hpp"
#include "lgc/error.hpp"
#include "lgc/fiid.hpp"
#include "lgc/hyperfinite.hpp"
#include "lgc/io.hpp"
#include "lgc/quotient.hpp"
#include "lgc/regularize.hpp"
#include "lgc/rng.hpp"
#include "lgc/spectral.hpp"
#include "lgc/stats.hpp"
#include "lgc/testing.hpp"

namespace lgc::cli {
namespace {

using nlohmann::json;

constexpr std::uint64_t kProbeStream = 0x70726f62;
constexpr std::uint64_t kColoringStream = 0x636f6c72;
constexpr std::uint64_t kFiidTrialStream = 0x66696964;

CLI::App* Subcommand(CLI::App& app, const std::string& name, const std::string& description,
                     int& threads) {
  CLI::App* sub = app.add_subcommand(name, description);
  sub->option_defaults()->always_capture_default();
  sub->add_option("--threads", threads, "Worker cap")->check(CLI::Range(1, 256));
  sub->add_option("--out", "Report path (default stdout)")->group(kOutputsGroup);
  return sub;
}

CLI::Option* AddInput(CLI::App* sub, const std::string& name, std::string& target,
                      const std::string& description) {
  return sub->add_option(name, target, description)->group(kInputsGroup)->check(CLI::ExistingFile);
}

CLI::Option* AddOutput(CLI::App* sub, const std::string& name, std::string& target,
                       const std::string& description) {
  return sub->add_option(name, target, description)->group(kOutputsGroup);
}

void AddBudget(CLI::App* sub, SearchBudget& budget) {
  sub->add_option("--random-colorings", budget.random_colorings, "Random colorings tried")
      ->check(CLI::PositiveNumber);
  sub->add_option("--restarts", budget.restarts, "Annealing restarts")->check(CLI::PositiveNumber);
  sub->add_option("--steps", budget.steps, "Annealing steps per restart")
      ->check(CLI::PositiveNumber);
  sub->add_option("--seed", budget.seed, "Search seed");
}

json BudgetJson(const SearchBudget& b) {
  return {{"random_colorings", b.random_colorings},
          {"restarts", b.restarts},
          {"steps", b.steps},
          {"initial_temperature", b.initial_temperature},
          {"final_temperature", b.final_temperature},
          {"seed", b.seed}};
}

void PutRational(json& j, const std::string& key, const Rational& x) {
  j[key] = ToDouble(x);
  j[key + "_exact"] = ToString(x);
}

template <typename Fn>
void WriteFile(const std::string& path, Fn&& write) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  write(out);
}

VertexColoring RandomColoring(Vertex n, int palette, std::uint64_t seed) {
  Rng rng(DeriveSeed(seed, kColoringStream));
  VertexColoring c{palette, std::vector<int>(n)};
  for (auto& x : c.colors) x = 1 + static_cast<int>(rng.Below(palette));
  return c;
}

VertexColoring LoadColoring(const std::string& path, const BoundedGraph& graph) {
  VertexColoring c = ReadColoringFile(path);
  if (static_cast<Vertex>(c.colors.size()) != graph.num_vertices()) {
    throw Error(ErrorCode::kSizeMismatch, path + ": coloring length differs from vertex count");
  }
  return c;
}

json WitnessFiles(const DistributionSet& set, const std::string& dir, const std::string& stem) {
  json refs = json::array();
  if (dir.empty()) return refs;
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < set.witnesses.size(); ++i) {
    const std::string path =
        (std::filesystem::path(dir) / (stem + "_" + std::to_string(i) + ".col")).string();
    WriteFile(path, [&](std::ostream& out) { WriteColoring(out, set.witnesses[i]); });
    refs.push_back(path);
  }
  return refs;
}

Handler AddGen(CLI::App& app) {
  struct Params {
    int threads = 1;
    std::string type;
    Vertex n = 0;
    int d = 3;
    std::uint64_t seed = 1;
    int copies = 1;
    std::string write;
  };
  auto p = std::make_shared<Params>();
  CLI::App* sub = Subcommand(app, "gen", "Generate a graph", p->threads);
  sub->add_option("--type", p->type, "Family")
      ->required()
      ->check(CLI::IsMember({"cycle", "path", "complete", "random-regular"}));
  sub->add_option("--n", p->n, "Vertices")->required()->check(CLI::PositiveNumber);
  sub->add_option("--d", p->d, "Degree for random-regular")->check(CLI::Range(0, 64));
  sub->add_option("--seed", p->seed, "Seed for random-regular");
  sub->add_option("--copies", p->copies, "Disjoint copies")->check(CLI::Range(1, 1024));
  AddOutput(sub, "--write", p->write, "Graph file to write");
  return [p](Context& ctx) {
    BoundedGraph one;
    if (p->type == "cycle") {
      one = GenCycle(p->n);
    } else if (p->type == "path") {
      one = GenPath(p->n);
    } else if (p->type == "complete") {
      one = GenComplete(p->n);
    } else {
      one = GenRandomRegular(p->n, p->d, p->seed);
    }
    BoundedGraph g = one;
    for (int i = 1; i < p->copies; ++i) g = GenDisjointUnion(g, one);

    std::ostringstream text;
    WriteGraph(text, g);
    json result = {{"n", g.num_vertices()},
                   {"m", g.num_edges()},
                   {"max_degree", g.max_degree()},
                   {"components", g.NumComponents()},
                   {"regular", g.IsRegular(g.ObservedMaxDegree())}};
    if (p->write.empty()) {
      json edges = json::array();
      for (const Edge& e : g.Edges()) edges.push_back({e.first, e.second});
      result["edges"] = std::move(edges);
    } else {
      WriteFile(p->write, [&](std::ostream& out) { out << text.str(); });
      ctx.artifacts["graph"] = p->write;
      result["graph_fnv1a64"] = FileDigest(p->write);
    }
    return result;
  };
}

Handler AddStats(CLI::App& app) {
  struct Params {
    int threads = 1;
    std::string graph;
    std::string coloring;
    int r = 1;
    std::string mode = "exact";
    std::int64_t samples = 10000;
    std::uint64_t seed = 1;
    std::string tsv;
  };
  auto p = std::make_shared<Params>();
  CLI::App* sub = Subcommand(app, "stats", "Ball distribution of a (colored) graph", p->threads);
  AddInput(sub, "--graph", p->graph, "Graph file")->required();
  AddInput(sub, "--coloring", p->coloring, "Vertex coloring file");
  sub->add_option("--r", p->r, "Radius")->check(CLI::Range(0, 16));
  sub->add_option("--mode", p->mode, "exact or sampled")->check(CLI::IsMember({"exact", "sampled"}));
  sub->add_option("--samples", p->samples, "Samples in sampled mode")->check(CLI::PositiveNumber);
  sub->add_option("--seed", p->seed, "Sampling seed");
  AddOutput(sub, "--tsv", p->tsv, "Also write the distribution as TSV");
  return [p](Context& ctx) {
    const BoundedGraph g = ReadGraphFile(p->graph);
    std::optional<VertexColoring> coloring;
    if (!p->coloring.empty()) coloring = LoadColoring(p->coloring, g);
    const VertexColoring* c = coloring ? &*coloring : nullptr;
    const BallDistribution dist = p->mode == "exact"
                                      ? ComputeBallDistribution(g, p->r, c, p->threads)
                                      : SampleBallDistribution(g, p->r, c, p->samples, p->seed);
    if (!p->tsv.empty()) {
      WriteFile(p->tsv, [&](std::ostream& out) {
        out << "code\tcount\tprobability\n";
        for (const auto& [code, count] : dist.counts) {
          out << ToHex(code) << '\t' << count << '\t' << ToString(Rational(count, dist.total))
              << '\n';
        }
      });
      ctx.artifacts["tsv"] = p->tsv;
    }
    json result = ToJson(dist);
    result["distinct_balls"] = dist.counts.size();
    return result;
  };
}

Handler AddDist(CLI::App& app) {
  struct Params {
    int threads = 1;
    std::string g1;
    std::string g2;
    int r = 1;
    int k = 2;
    std::string mode = "auto";
    SearchBudget budget;
    std::string witness_dir;
  };
  auto p = std::make_shared<Params>();
  CLI::App* sub = Subcommand(app, "dist", "Local and local-global distance of two graphs", p->threads);
  AddInput(sub, "--g1", p->g1, "First graph")->required();
  AddInput(sub, "--g2", p->g2, "Second graph")->required();
  sub->add_option("--r", p->r, "Radius")->check(CLI::Range(0, 16));
  sub->add_option("--k", p->k, "Colors")->check(CLI::Range(1, 64));
  sub->add_option("--mode", p->mode, "auto or exact")->check(CLI::IsMember({"auto", "exact"}));
  AddBudget(sub, p->budget);
  AddOutput(sub, "--witness-dir", p->witness_dir, "Directory for witness colorings");
  return [p](Context& ctx) {
    const BoundedGraph a = ReadGraphFile(p->g1);
    const BoundedGraph b = ReadGraphFile(p->g2);
    if (p->mode == "exact" &&
        !(ExactQuotientFeasible(a, p->k) && ExactQuotientFeasible(b, p->k))) {
      throw Error(ErrorCode::kBudgetExceeded, "exact mode needs k^n <= 2^20 for both graphs");
    }
    const HausdorffEstimate h = EstimateHausdorff(a, b, p->r, p->k, p->budget);
    json result = {{"r", p->r}, {"k", p->k}, {"certified", h.certified}};
    PutRational(result, "local_tv",
                TvDistance(ComputeBallDistribution(a, p->r, nullptr, p->threads),
                           ComputeBallDistribution(b, p->r, nullptr, p->threads)));
    PutRational(result, "value", h.value);
    PutRational(result, "forward", h.forward);
    PutRational(result, "backward", h.backward);
    result["set_sizes"] = {h.first.size(), h.second.size()};
    if (!h.certified) result["budget"] = BudgetJson(p->budget);
    if (!p->witness_dir.empty()) {
      json refs = WitnessFiles(h.first, p->witness_dir, "g1");
      for (auto& ref : WitnessFiles(h.second, p->witness_dir, "g2")) refs.push_back(ref);
      ctx.artifacts["witnesses"] = std::move(refs);
    }
    return result;
  };
}

Handler AddQuotient(CLI::App& app) {
  struct Params {
    int threads = 1;
    std::string graph;
    int r = 1;
    int k = 2;
    std::string mode = "auto";
    SearchBudget budget;
    std::string witness_dir;
  };
  auto p = std::make_shared<Params>();
  CLI::App* sub = Subcommand(app, "quotient", "Quotient set of k-colorings", p->threads);
  AddInput(sub, "--graph", p->graph, "Graph file")->required();
  sub->add_option("--r", p->r, "Radius")->check(CLI::Range(0, 16));
  sub->add_option("--k", p->k, "Colors")->check(CLI::Range(1, 64));
  sub->add_option("--mode", p->mode, "auto, exact or search")
      ->check(CLI::IsMember({"auto", "exact", "search"}));
  AddBudget(sub, p->budget);
  AddOutput(sub, "--witness-dir", p->witness_dir, "Directory for witness colorings");
  return [p](Context& ctx) {
    const BoundedGraph g = ReadGraphFile(p->graph);
    const bool exact =
        p->mode == "exact" || (p->mode == "auto" && ExactQuotientFeasible(g, p->k));
    const DistributionSet set = exact ? QuotientSetExact(g, p->r, p->k)
                                      : QuotientSetSearch(g, p->r, p->k, p->budget);
    json result = ToJson(set);
    result["certified"] = set.exact;
    if (!exact) result["budget"] = BudgetJson(p->budget);
    if (!p->witness_dir.empty()) ctx.artifacts["witnesses"] = WitnessFiles(set, p->witness_dir, "q");
    return result;
  };
}

Handler AddRegularize(CLI::App& app) {
  struct Params {
    int threads = 1;
    std::string graph;
    int r = 1;
    int k = 2;
    double eps = 0.1;
    std::string probes = "exhaustive";
    std::int64_t probe_count = 64;
    std::uint64_t seed = 1;
    std::string q_out;
  };
  auto p = std::make_shared<Params>();
  CLI::App* sub = Subcommand(app, "regularize", "Regularizing coloring for a probe family", p->threads);
  AddInput(sub, "--graph", p->graph, "Graph file")->required();
  sub->add_option("--r", p->r, "Radius")->check(CLI::Range(0, 16));
  sub->add_option("--k", p->k, "Colors")->check(CLI::Range(1, 64));
  sub->add_option("--eps", p->eps, "Net radius")->check(CLI::Range(1e-12, 1.0));
  sub->add_option("--probes", p->probes, "exhaustive or random")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  sub->add_option("--probe-count", p->probe_count, "Random probes")
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 20));
  sub->add_option("--seed", p->seed, "Probe seed");
  AddOutput(sub, "--q-out", p->q_out, "Coloring file for q");
  return [p](Context& ctx) {
    const BoundedGraph g = ReadGraphFile(p->graph);
    const Vertex n = g.num_vertices();
    std::vector<VertexColoring> probes;
    if (p->probes == "exhaustive") {
      probes = AllColorings(n, p->k);
    } else {
      for (std::int64_t i = 0; i < p->probe_count; ++i) {
        probes.push_back(RandomColoring(n, p->k, DeriveSeed(p->seed, kProbeStream, i)));
      }
    }
    const RegularizationResult reg = Regularize(g, p->r, p->k, p->eps, probes);
    json table = json::array();
    bool all_covered = true;
    for (std::size_t i = 0; i < reg.table.size(); ++i) {
      const ProbeResponse& row = reg.table[i];
      all_covered = all_covered && row.covered;
      json entry = {{"probe", i},
                    {"representative", row.representative},
                    {"alpha", row.alpha},
                    {"covered", row.covered}};
      PutRational(entry, "tv", row.tv);
      table.push_back(std::move(entry));
    }
    if (!p->q_out.empty()) {
      WriteFile(p->q_out, [&](std::ostream& out) { WriteColoring(out, reg.q); });
      ctx.artifacts["q"] = p->q_out;
    }
    return json{{"r", reg.radius},
                {"k", reg.palette},
                {"eps", reg.epsilon},
                {"probes", probes.size()},
                {"t", reg.q.palette},
                {"power_palette", reg.power_palette},
                {"q", ToJson(reg.q)},
                {"representatives", reg.representatives},
                {"separated", ColorClassesSeparated(g, reg.q, reg.radius)},
                {"all_covered", all_covered},
                {"table", std::move(table)}};
  };
}

Handler AddEncode(CLI::App& app) {
  struct Params {
    int threads = 1;
    std::string graph;
    std::string edge_coloring;
    std::string sets;
    int k = 0;
    std::string sets_out;
  };
  auto p = std::make_shared<Params>();
  CLI::App* sub = Subcommand(app, "encode", "Edge coloring to vertex-set coloring and back", p->threads);
  AddInput(sub, "--graph", p->graph, "Graph file")->required();
  AddInput(sub, "--edge-coloring", p->edge_coloring, "Edge coloring to encode");
  AddInput(sub, "--sets", p->sets, "Set coloring JSON to decode");
  sub->add_option("--k", p->k, "Edge palette (0: largest color present)")->check(CLI::Range(0, 1 << 20));
  AddOutput(sub, "--sets-out", p->sets_out, "Set coloring JSON to write");
  return [p](Context& ctx) {
    const BoundedGraph g = ReadGraphFile(p->graph);
    if (p->edge_coloring.empty() == p->sets.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "give exactly one of --edge-coloring and --sets");
    }
    auto edges_json = [](const EdgeColoring& c) {
      json edges = json::array();
      for (const auto& [e, color] : c.colors) edges.push_back({e.first, e.second, color});
      return edges;
    };
    if (!p->sets.empty()) {
      if (p->k < 1) throw Error(ErrorCode::kInvalidArgument, "decoding needs --k");
      std::ifstream in(p->sets);
      json j;
      try {
        j = json::parse(in);
      } catch (const json::exception& e) {
        throw Error(ErrorCode::kParse, p->sets + ": " + e.what());
      }
      const EdgeColoring decoded = DecodeEdgeColoring(g, SetColoringFromJson(j), p->k);
      return json{{"direction", "decode"}, {"k", decoded.palette}, {"edges", edges_json(decoded)}};
    }
    std::ifstream in(p->edge_coloring);
    const EdgeColoring c = ReadEdgeColoring(in, p->k);
    c.Validate(g);
    const EdgeEncoding enc = EncodeEdgeColoring(g, c);
    const EdgeColoring back = DecodeEdgeColoring(g, enc.sets, c.palette);
    if (!p->sets_out.empty()) {
      WriteFile(p->sets_out, [&](std::ostream& out) { out << ToJson(enc.sets).dump(2) << '\n'; });
      ctx.artifacts["sets"] = p->sets_out;
    }
    return json{{"direction", "encode"},
                {"k", c.palette},
                {"refined_palette", enc.refined.palette},
                {"bound", EncodingPaletteBound(g.max_degree(), c.palette)},
                {"refined", edges_json(enc.refined)},
                {"sets", ToJson(enc.sets)},
                {"round_trip", back.colors == c.colors}};
  };
}

Handler AddFiid(CLI::App& app) {
  struct Params {
    int threads = 1;
    std::string measure = "density";
    std::string rule = "local-min-is";
    std::string graph;
    std::uint64_t seed = 1;
    int trials = 1;
    std::string coloring;
    std::string h;
    int k = 2;
    int r = 1;
    std::int64_t mc_samples = 100000;
    bool exact = false;
  };
  auto p = std::make_shared<Params>();
  CLI::App* sub = Subcommand(app, "fiid", "Factor of i.i.d. rules and quasirandomness", p->threads);
  sub->add_option("--measure", p->measure, "density or deficiency")
      ->check(CLI::IsMember({"density", "deficiency"}));
  sub->add_option("--rule", p->rule, "Local rule")->check(CLI::IsMember({"local-min-is"}));
  AddInput(sub, "--graph", p->graph, "Graph file")->required();
  sub->add_option("--seed", p->seed, "Weight seed");
  sub->add_option("--trials", p->trials, "Independent runs")->check(CLI::Range(1, 100000));
  AddInput(sub, "--coloring", p->coloring, "Coloring under test (default: uniform random)");
  AddInput(sub, "--base", p->h, "Base coloring h (default: constant)");
  sub->add_option("--k", p->k, "Palette of the random coloring under test")->check(CLI::Range(1, 64));
  sub->add_option("--r", p->r, "Radius")->check(CLI::Range(0, 16));
  sub->add_option("--mc-samples", p->mc_samples, "Monte Carlo overlays")->check(CLI::PositiveNumber);
  sub->add_flag("--exact", p->exact, "Enumerate overlays");
  return [p](Context&) {
    const BoundedGraph g = ReadGraphFile(p->graph);
    if (p->measure == "density") {
      const FiidRule rule = LocalMinIndependentSet();
      json runs = json::array();
      double sum = 0.0;
      for (int t = 0; t < p->trials; ++t) {
        const std::uint64_t seed = DeriveSeed(p->seed, kFiidTrialStream, t);
        const VertexColoring out = RunRule(g, rule, seed, p->threads);
        const auto selected = std::count(out.colors.begin(), out.colors.end(), 1);
        const double density = static_cast<double>(selected) / g.num_vertices();
        sum += density;
        runs.push_back({{"seed", seed},
                        {"selected", selected},
                        {"density", density},
                        {"independent", IsIndependent(g, out)}});
      }
      json result = {{"rule", rule.name}, {"trials", std::move(runs)}, {"mean_density", sum / p->trials}};
      const int d = g.ObservedMaxDegree();
      if (g.IsRegular(d)) result["expected_density"] = 1.0 / (d + 1);
      return result;
    }
    const VertexColoring c = p->coloring.empty() ? RandomColoring(g.num_vertices(), p->k, p->seed)
                                                 : LoadColoring(p->coloring, g);
    const VertexColoring h = p->h.empty() ? VertexColoring::Constant(g.num_vertices(), 1)
                                          : LoadColoring(p->h, g);
    const DeficiencyResult def =
        QuasirandomDeficiency(g, c, h, p->r, p->mc_samples, p->seed, p->exact);
    json result = {{"exact", def.exact}, {"samples", def.samples}, {"r", p->r}};
    PutRational(result, "deficiency", def.value);
    return result;
  };
}

Handler AddHyperfinite(CLI::App& app) {
  struct Params {
    int threads = 1;
    std::string graph;
    int q = 2;
    std::string mode = "auto";
    std::uint64_t seed = 1;
    int passes = 8;
    bool sequential = false;
    std::string eps;
    std::string check;
    std::string certificate_out;
    std::string coloring_out;
  };
  auto p = std::make_shared<Params>();
  CLI::App* sub = Subcommand(app, "hyperfinite", "Deletion sets leaving small components", p->threads);
  AddInput(sub, "--graph", p->graph, "Graph file")->required();
  sub->add_option("--q", p->q, "Component size bound")->check(CLI::Range(1, 1 << 20));
  sub->add_option("--mode", p->mode, "auto, exact or heuristic")
      ->check(CLI::IsMember({"auto", "exact", "heuristic"}));
  sub->add_option("--seed", p->seed, "Carving seed");
  sub->add_option("--passes", p->passes, "Carving passes")->check(CLI::Range(1, 1 << 16));
  sub->add_flag("--sequential", p->sequential, "Carve in index order instead of random order");
  sub->add_option("--eps", p->eps, "Check (q, eps)-hyperfiniteness, e.g. 1/4");
  AddInput(sub, "--check", p->check, "Verify this certificate instead of computing one");
  AddOutput(sub, "--certificate-out", p->certificate_out, "Certificate JSON to write");
  AddOutput(sub, "--coloring-out", p->coloring_out, "Deleted/kept coloring to write");
  return [p](Context& ctx) {
    const BoundedGraph g = ReadGraphFile(p->graph);
    PartitionCertificate cert;
    if (!p->check.empty()) {
      std::ifstream in(p->check);
      try {
        cert = CertificateFromJson(json::parse(in));
      } catch (const json::exception& e) {
        throw Error(ErrorCode::kParse, p->check + ": " + e.what());
      }
    } else if (p->mode == "exact" ||
               (p->mode == "auto" && g.num_vertices() <= kExactTauMaxVertices)) {
      cert = TauExact(g, p->q);
    } else {
      cert = TauHeuristic(g, p->q, CarvingOptions{p->seed, p->passes, p->sequential, p->threads});
    }
    json result = ToJson(cert);
    if (!p->eps.empty() || !p->check.empty()) {
      const Rational eps = p->eps.empty() ? cert.eps() : ParseRational(p->eps);
      result["check"] = {{"q", p->q},
                         {"eps", ToString(eps)},
                         {"holds", CheckHyperfinitePair(g, cert, p->q, eps)}};
    }
    if (!p->certificate_out.empty()) {
      WriteFile(p->certificate_out, [&](std::ostream& out) { out << ToJson(cert).dump(2) << '\n'; });
      ctx.artifacts["certificate"] = p->certificate_out;
    }
    if (!p->coloring_out.empty()) {
      WriteFile(p->coloring_out,
                [&](std::ostream& out) { WriteColoring(out, HyperfiniteColoring(cert)); });
      ctx.artifacts["coloring"] = p->coloring_out;
    }
    return result;
  };
}

Handler AddSpectral(CLI::App& app) {
  struct Params {
    int threads = 1;
    std::string graph;
    double tol = 1e-10;
    bool expansion = false;
    bool sandwich = false;
    std::string vector_out;
  };
  auto p = std::make_shared<Params>();
  CLI::App* sub = Subcommand(app, "spectral", "Laplacian spectral gap and expansion", p->threads);
  AddInput(sub, "--graph", p->graph, "Graph file")->required();
  sub->add_option("--tol", p->tol, "Eigenpair residual tolerance")->check(CLI::Range(1e-15, 1.0));
  sub->add_flag("--expansion", p->expansion, "Exact vertex expansion (n <= 20)");
  sub->add_flag("--sandwich", p->sandwich, "Check both expansion bounds (regular, n <= 20)");
  AddOutput(sub, "--vector-out", p->vector_out, "Eigenvector, one value per line");
  return [p](Context& ctx) {
    const BoundedGraph g = ReadGraphFile(p->graph);
    const SpectralReport s = SpectralGap(g, p->tol);
    json result = {{"gap", s.gap},
                   {"regular", s.regular},
                   {"degree", s.degree},
                   {"residual", s.residual},
                   {"method", s.method},
                   {"iterations", s.iterations},
                   {"connected", g.NumComponents() == 1}};
    if (s.regular) result["normalized_gap"] = s.normalized_gap;
    if (p->expansion) {
      const ExpansionResult e = VertexExpansionExact(g);
      json entry = {{"witness", e.witness}};
      PutRational(entry, "c", e.c);
      result["expansion"] = std::move(entry);
    }
    if (p->sandwich) {
      const SandwichReport w = CheckExpanderSandwich(g, p->tol);
      result["sandwich"] = {{"expansion", w.expansion},
                            {"lower_bound", w.lower_bound},
                            {"lower_holds", w.lower_holds},
                            {"normalized_gap", w.normalized_gap},
                            {"upper_holds", w.upper_holds},
                            {"raw_upper_holds", w.raw_upper_holds},
                            {"witness", w.witness}};
    }
    if (!p->vector_out.empty()) {
      WriteFile(p->vector_out, [&](std::ostream& out) {
        out.precision(17);
        for (double x : s.eigenvector) out << x << '\n';
      });
      ctx.artifacts["eigenvector"] = p->vector_out;
    }
    return result;
  };
}

Handler AddPtest(CLI::App& app) {
  struct Params {
    int threads = 1;
    std::string property = "disconnection";
    std::string graph;
    double beta = 0.25;
    int r = 2;
    std::int64_t t = 200;
    int trials = 20;
    std::uint64_t seed = 1;
    std::string witness_out;
  };
  auto p = std::make_shared<Params>();
  CLI::App* sub = Subcommand(app, "ptest", "Sampling and nondeterministic property tests", p->threads);
  sub->add_option("--property", p->property, "disconnection or triangle-free")
      ->check(CLI::IsMember({"disconnection", "triangle-free"}));
  AddInput(sub, "--graph", p->graph, "Graph file")->required();
  sub->add_option("--beta", p->beta, "Balance threshold in (0, 1/2]")->check(CLI::Range(1e-9, 0.5));
  sub->add_option("--r", p->r, "Sampled ball radius")->check(CLI::Range(0, 16));
  sub->add_option("--t", p->t, "Balls per trial")->check(CLI::PositiveNumber);
  sub->add_option("--trials", p->trials, "Tester runs")->check(CLI::Range(1, 1000000));
  sub->add_option("--seed", p->seed, "Sampling seed");
  AddOutput(sub, "--witness-out", p->witness_out, "Witness coloring to write");
  return [p](Context& ctx) {
    const BoundedGraph g = ReadGraphFile(p->graph);
    if (p->property == "triangle-free") {
      const double acceptance =
          RunTester(g, TriangleFreeTester(p->r, p->t), p->trials, p->seed, nullptr, p->threads);
      return json{{"property", p->property}, {"acceptance", acceptance}};
    }
    const DisconnectionVerdict verdict = NdTestDisconnection(g, p->beta);
    const std::vector<VertexColoring> candidates = DisconnectionCandidates(g, p->beta, p->seed);
    const NdRun run = RunNdTester(g, DisconnectionNdTester(p->beta, p->r, p->t), candidates,
                                  p->trials, p->seed, p->threads);
    if (verdict.yes && !p->witness_out.empty()) {
      WriteFile(p->witness_out, [&](std::ostream& out) { WriteColoring(out, verdict.witness); });
      ctx.artifacts["witness"] = p->witness_out;
    }
    json result = {{"property", p->property},
                   {"beta", p->beta},
                   {"yes", verdict.yes},
                   {"smaller_side", verdict.smaller_side},
                   {"component_sizes", verdict.component_sizes},
                   {"acceptance", run.best_frequency},
                   {"candidate_acceptance", run.frequencies},
                   {"best_candidate", run.best_witness}};
    if (verdict.yes) result["witness"] = ToJson(verdict.witness);
    return result;
  };
}

}  // namespace

std::map<std::string, Handler> RegisterCommands(CLI::App& app) {
  std::map<std::string, Handler> handlers;
  handlers["gen"] = AddGen(app);
  handlers["stats"] = AddStats(app);
  handlers["dist"] = AddDist(app);
  handlers["quotient"] = AddQuotient(app);
  handlers["regularize"] = AddRegularize(app);
  handlers["encode"] = AddEncode(app);
  handlers["fiid"] = AddFiid(app);
  handlers["hyperfinite"] = AddHyperfinite(app);
  handlers["spectral"] = AddSpectral(app);
  handlers["ptest"] = AddPtest(app);
  return handlers;
}

}  // namespace lgc::cli
