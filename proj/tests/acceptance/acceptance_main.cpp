// Acceptance suite: one PASS/FAIL line per criterion. Pass criterion ids as
// arguments to run a subset.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

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
#include "support/catalog.hpp"
#include "support/oracles.hpp"

namespace lgc {
namespace {

namespace fs = std::filesystem;
namespace ts = testing_support;
using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void Require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail = what;
      pass = false;
    }
  }
};

std::string Fmt(const char* format, auto... args) {
  char buffer[256];
  std::snprintf(buffer, sizeof buffer, format, args...);
  return buffer;
}

BoundedGraph ConnectedRandomRegular(Vertex n, int d, std::uint64_t seed) {
  for (;; ++seed) {
    BoundedGraph g = GenRandomRegular(n, d, seed);
    if (g.NumComponents() == 1) return g;
  }
}

// 1. Local-min independent set density on random cubic graphs.
Outcome FiidDensity() {
  Outcome out;
  const FiidRule rule = LocalMinIndependentSet();
  double sum = 0.0;
  double slowest = 0.0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const BoundedGraph g = GenRandomRegular(20000, 3, seed);
    const auto start = Clock::now();
    const VertexColoring c = RunRule(g, rule, seed);
    slowest = std::max(slowest, Seconds(start));
    out.Require(IsIndependent(g, c), "output not independent");
    sum += static_cast<double>(std::count(c.colors.begin(), c.colors.end(), 1)) / 20000;
  }
  const double mean = sum / 10;
  out.Require(std::abs(mean - 0.25) <= 0.005, "mean density off");
  out.Require(slowest < 5.0, "run slower than 5 s");
  out.detail = Fmt("mean density %.5f (target 0.25 +- 0.005), slowest run %.3f s", mean, slowest) +
               (out.detail.empty() ? "" : "; " + out.detail);
  return out;
}

// 2. C8 against C4 + C4: same local statistics, different quotient sets.
Outcome CycleVersusSquares() {
  Outcome out;
  const auto start = Clock::now();
  const BoundedGraph c8 = GenCycle(8);
  const BoundedGraph c4c4 = GenDisjointUnion(GenCycle(4), GenCycle(4));
  const Rational local = TvDistance(ComputeBallDistribution(c8, 1), ComputeBallDistribution(c4c4, 1));
  const HausdorffEstimate h = EstimateHausdorff(c8, c4c4, 1, 2, SearchBudget{});
  ts::BruteForceClassifier classifier;
  const double oracle = ts::BruteForceHausdorff(ts::BruteForceQuotient(c8, 1, 2, classifier), 8,
                                                ts::BruteForceQuotient(c4c4, 1, 2, classifier), 8);
  const double elapsed = Seconds(start);
  out.Require(local == Rational(0), "uncolored distributions differ");
  out.Require(h.certified, "Hausdorff value not certified");
  out.Require(h.value > Rational(0), "Hausdorff distance is zero");
  out.Require(std::abs(ToDouble(h.value) - oracle) <= 1e-12, "brute force disagrees");
  out.Require(elapsed < 10.0, "slower than 10 s");
  out.detail = "local tv " + ToString(local) + ", Hausdorff " + ToString(h.value) +
               Fmt(" vs brute force %.15f, %.3f s", oracle, elapsed) +
               (out.detail.empty() ? "" : "; " + out.detail);
  return out;
}

// Exact directed Hausdorff distance between two exact quotient sets whose
// members share one total each. Dense integer histograms, early exit once a
// member cannot raise the maximum.
Rational DenseDirectedHausdorff(const DistributionSet& from, const DistributionSet& to) {
  std::map<BallCode, int> index;
  for (const auto* set : {&from, &to}) {
    for (const auto& m : set->members) {
      for (const auto& [code, count] : m.counts) index.try_emplace(code, static_cast<int>(index.size()));
    }
  }
  auto dense = [&](const DistributionSet& set) {
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& m : set.members) {
      std::vector<std::int64_t> row(index.size(), 0);
      for (const auto& [code, count] : m.counts) row[index.at(code)] = count;
      rows.push_back(std::move(row));
    }
    return rows;
  };
  const auto a = dense(from);
  const auto b = dense(to);
  const std::int64_t na = from.members.front().total;
  const std::int64_t nb = to.members.front().total;
  std::int64_t best = 0;  // max over a of min over b of sum |a nb - b na|
  for (const auto& x : a) {
    std::int64_t nearest = -1;
    for (const auto& y : b) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < x.size() && (nearest < 0 || s < nearest); ++i) {
        s += std::abs(x[i] * nb - y[i] * na);
      }
      if (nearest < 0 || s < nearest) nearest = s;
      if (nearest <= best) break;
    }
    best = std::max(best, nearest);
  }
  return Rational(best, 2 * na * nb);
}

// 3. Random cubic G against G + G.
Outcome CertifiedSeparation() {
  Outcome out;
  const BoundedGraph g = ConnectedRandomRegular(500, 3, 1);
  const BoundedGraph gg = GenDisjointUnion(g, g);
  for (int r : {1, 2}) {
    const HausdorffEstimate h = EstimateHausdorff(g, gg, r, 1, SearchBudget{});
    out.Require(h.certified && h.value == Rational(0),
                "local distance at r=" + std::to_string(r) + " is " + ToString(h.value));
  }
  const SpectralReport spectral = SpectralGap(g);
  const SeparationCertificate cert = CertifiedSeparationBound(g, spectral.gap);
  out.Require(cert.bound >= 0.01, "certified bound below 0.01");

  int checked = 0;
  double tightest = 1.0;
  for (int n = 4; n <= 10; n += 2) {
    for (const BoundedGraph& small : ts::ConnectedRegular(n, 3)) {
      const double bound = CertifiedSeparationBound(small, SpectralGap(small).gap).bound;
      const DistributionSet union_set = QuotientSetExact(GenDisjointUnion(small, small), 1, 2);
      const Rational exact = DenseDirectedHausdorff(union_set, QuotientSetExact(small, 1, 2));
      out.Require(bound <= ToDouble(exact), "bound exceeds exact distance on a cubic graph");
      tightest = std::min(tightest, ToDouble(exact) - bound);
      ++checked;
    }
  }
  out.detail = Fmt("gap %.6f, bound %.6f (>= 0.01); %d cubic graphs, min slack %.6f", spectral.gap,
                   cert.bound, checked, tightest) +
               (out.detail.empty() ? "" : "; " + out.detail);
  return out;
}

// 4. Regularization over every 2-coloring of every small subcubic graph.
Outcome RegularizationSweep() {
  Outcome out;
  const auto start = Clock::now();
  int graphs = 0;
  std::int64_t probes_checked = 0;
  for (int n = 1; n <= 8; ++n) {
    const std::vector<VertexColoring> probes = AllColorings(n, 2);
    for (const BoundedGraph& g : ts::GraphsUpTo(n, 3)) {
      const RegularizationResult reg = Regularize(g, 1, 2, 0.1, probes);
      out.Require(ColorClassesSeparated(g, reg.q, 1), "same-colored pair within distance 1");
      for (const VertexColoring& probe : probes) {
        const ProbeResponse response = Respond(g, reg, probe);
        const VertexColoring composed = Compose(reg, response.alpha);
        const Rational tv = TvDistance(ComputeBallDistribution(g, 1, &probe),
                                       ComputeBallDistribution(g, 1, &composed));
        out.Require(tv == response.tv && ToDouble(tv) <= 0.1, "respond() misses a probe");
        ++probes_checked;
      }
      ++graphs;
    }
  }
  const double elapsed = Seconds(start);
  out.Require(elapsed < 300.0, "slower than 5 min");
  out.detail = Fmt("%d graphs, %lld probes, %.1f s", graphs, static_cast<long long>(probes_checked),
                   elapsed) +
               (out.detail.empty() ? "" : "; " + out.detail);
  return out;
}

// 5. Edge-coloring encoding round trip.
Outcome EncodingRoundTrip() {
  Outcome out;
  const auto start = Clock::now();
  Rng rng(5);
  long long worst_ratio_num = 0;
  long long worst_ratio_den = 1;
  for (int i = 0; i < 200; ++i) {
    const Vertex n = 2 + static_cast<Vertex>(rng.Below(49));
    const int d = 1 + static_cast<int>(rng.Below(4));
    const int k = 1 + static_cast<int>(rng.Below(3));
    const BoundedGraph g = ts::RandomBoundedGraph(rng, n, d, static_cast<int>(rng.Below(3 * n)));
    EdgeColoring c{k, {}};
    for (const Edge& e : g.Edges()) c.colors[e] = 1 + static_cast<int>(rng.Below(k));
    const EdgeEncoding enc = EncodeEdgeColoring(g, c);
    out.Require(DecodeEdgeColoring(g, enc.sets, k).colors == c.colors, "decode(encode(c)) != c");
    for (const Edge& e : g.Edges()) {
      const auto& a = enc.sets.sets[e.first];
      const auto& b = enc.sets.sets[e.second];
      std::vector<int> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      out.Require(common.size() == 1, "endpoint sets do not meet in exactly one color");
    }
    const long long bound = EncodingPaletteBound(g.max_degree(), k);
    out.Require(enc.sets.palette <= bound, "palette above 30 d^3 k");
    if (enc.sets.palette * worst_ratio_den > worst_ratio_num * bound) {
      worst_ratio_num = enc.sets.palette;
      worst_ratio_den = bound;
    }
  }
  const double elapsed = Seconds(start);
  out.Require(elapsed < 30.0, "slower than 30 s");
  out.detail = Fmt("200 instances, largest palette/bound %lld/%lld, %.2f s", worst_ratio_num,
                   worst_ratio_den, elapsed) +
               (out.detail.empty() ? "" : "; " + out.detail);
  return out;
}

// True iff some connected set of q+1 kept (color 2) vertices lies in the ball.
bool HasBlueComponent(const RootedBall& ball, int q) {
  std::vector<char> seen(ball.size(), 0);
  for (int s = 0; s < ball.size(); ++s) {
    if (seen[s] || ball.colors[s] != 2) continue;
    int size = 0;
    std::vector<int> stack = {s};
    seen[s] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      ++size;
      for (int w : ball.adjacency[v]) {
        if (!seen[w] && ball.colors[w] == 2) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    if (size >= q + 1) return true;
  }
  return false;
}

// 6. tau_q on cycles.
Outcome CycleTau() {
  Outcome out;
  int instances = 0;
  for (int n = 3; n <= 16; ++n) {
    const BoundedGraph g = GenCycle(n);
    for (int q = 1; q <= 4; ++q) {
      // No deletion is needed once the whole cycle fits in a component.
      const std::size_t expected = n <= q ? 0 : (n + q) / (q + 1);
      const PartitionCertificate exact = TauExact(g, q);
      out.Require(exact.deleted.size() == expected,
                  Fmt("tau_%d(C_%d) = %zu, expected %zu", q, n, exact.deleted.size(), expected));
      const PartitionCertificate heuristic = TauHeuristic(g, q, CarvingOptions{});
      out.Require(heuristic.deleted.size() <= 2 * exact.deleted.size(),
                  Fmt("heuristic above twice tau on C_%d, q=%d", n, q));
      for (const auto* cert : {&exact, &heuristic}) {
        const VertexColoring blue = HyperfiniteColoring(*cert);
        const BallDistribution dist = ComputeBallDistribution(g, q, &blue);
        const Rational mass = dist.MassWhere([q](const RootedBall& b) { return HasBlueComponent(b, q); });
        out.Require(mass == Rational(0), Fmt("blue (q+1)-set on C_%d, q=%d", n, q));
      }
      ++instances;
    }
  }
  out.detail = Fmt("%d instances", instances) + (out.detail.empty() ? "" : "; " + out.detail);
  return out;
}

// 7. Spectral gap oracles and the expansion sandwich.
Outcome Spectral() {
  Outcome out;
  double worst = 0.0;
  for (Vertex n : {4, 8, 100, 4096}) {
    const double expected = 2.0 - 2.0 * std::cos(2.0 * std::numbers::pi / n);
    const double err = std::abs(SpectralGap(GenCycle(n)).gap - expected);
    worst = std::max(worst, err);
    out.Require(err <= 1e-8, Fmt("C_%d gap off by %.3g", n, err));
  }
  const SpectralReport k4 = SpectralGap(GenComplete(4));
  out.Require(k4.method == "dense" && k4.gap == 4.0, Fmt("K_4 gap %.17g", k4.gap));

  const double tol = 1e-10;
  int graphs = 0;
  for (int n = 2; n <= 10; ++n) {
    for (const BoundedGraph& g : ts::GraphsUpTo(n, 3)) {
      const bool small_gap = SpectralGap(g, tol).gap <= tol;
      out.Require(small_gap == (g.NumComponents() > 1), "gap test disagrees with connectivity");
      ++graphs;
    }
  }
  int cubic = 0;
  for (int n = 4; n <= 10; n += 2) {
    for (const BoundedGraph& g : ts::ConnectedRegular(n, 3)) {
      const SandwichReport s = CheckExpanderSandwich(g, tol);
      out.Require(s.lower_holds && s.upper_holds, "sandwich fails on a cubic graph");
      ++cubic;
    }
  }
  out.detail = Fmt("cycle error %.2g, K_4 gap %.17g, %d graphs for connectivity, %d cubic sandwiches",
                   worst, k4.gap, graphs, cubic) +
               (out.detail.empty() ? "" : "; " + out.detail);
  return out;
}

// 8. Canonical codes against brute-force rooted isomorphism.
Outcome Canonicalization() {
  Outcome out;
  Rng rng(8);
  std::int64_t pairs = 0;
  auto check_pool = [&](const std::vector<ts::PlainBall>& pool, int radius, int palette) {
    std::vector<BallCode> codes;
    for (const auto& b : pool) codes.push_back(CanonicalBall(b.adjacency, b.colors, b.root, radius, palette).code);
    for (std::size_t i = 0; i < pool.size(); ++i) {
      for (std::size_t j = i; j < pool.size(); ++j) {
        if (pool[i].adjacency.size() != pool[j].adjacency.size()) {
          out.Require(codes[i] != codes[j], "codes equal for balls of different size");
          continue;
        }
        out.Require((codes[i] == codes[j]) == ts::RootedIsomorphic(pool[i], pool[j]),
                    "code equality disagrees with isomorphism");
        ++pairs;
      }
    }
  };
  for (int palette : {1, 2}) {
    std::vector<ts::PlainBall> pool = ts::AllLabeledRadiusOneBalls(3, palette);
    const std::size_t labeled = pool.size();
    for (std::size_t i = 0; i < labeled; ++i) pool.push_back(ts::Relabel(pool[i], rng));
    check_pool(pool, 1, palette);
  }
  std::vector<ts::PlainBall> sample;
  for (int i = 0; i < 60; ++i) {
    const Vertex n = 4 + static_cast<Vertex>(rng.Below(12));
    const BoundedGraph g = ts::RandomBoundedGraph(rng, n, 3, static_cast<int>(2 * n));
    std::vector<int> colors(n);
    for (auto& x : colors) x = 1 + static_cast<int>(rng.Below(2));
    for (int j = 0; j < 4; ++j) {
      const Vertex v = static_cast<Vertex>(rng.Below(n));
      sample.push_back(ts::ExtractPlain(g, v, 2, &colors));
      sample.push_back(ts::Relabel(sample.back(), rng));
    }
  }
  check_pool(sample, 2, 2);
  out.detail = Fmt("%lld same-size pairs compared", static_cast<long long>(pairs)) +
               (out.detail.empty() ? "" : "; " + out.detail);
  return out;
}

// 9. Quasirandom deficiency.
Outcome Quasirandomness() {
  Outcome out;
  const BoundedGraph g = GenRandomRegular(10000, 3, 9);
  Rng rng(9);
  VertexColoring c{2, std::vector<int>(10000)};
  for (auto& x : c.colors) x = 1 + static_cast<int>(rng.Below(2));
  const DeficiencyResult random =
      QuasirandomDeficiency(g, c, VertexColoring::Constant(10000, 1), 1, 100000, 9);
  out.Require(ToDouble(random.value) <= 0.02, "random coloring deficiency above 0.02");
  const DeficiencyResult edge = QuasirandomDeficiency(GenPath(2), VertexColoring{2, {1, 1}},
                                                      VertexColoring::Constant(2, 1), 1, 1, 0, true);
  out.Require(edge.exact && edge.value == Rational(3, 4), "K_2 value is " + ToString(edge.value));
  out.detail = Fmt("random coloring %.5f (<= 0.02), K_2 exact ", ToDouble(random.value)) +
               ToString(edge.value) + (out.detail.empty() ? "" : "; " + out.detail);
  return out;
}

// 10. Nondeterministic disconnection testing.
Outcome NdTesting() {
  Outcome out;
  const double beta = 0.25;
  int compared = 0;
  for (int n = 1; n <= 8; ++n) {
    for (const BoundedGraph& g : ts::GraphsUpTo(n, 3)) {
      const bool yes = NdTestDisconnection(g, beta).yes;
      out.Require(yes == ts::BruteForceDisconnected(g, beta), "disagrees with brute force");
      if (g.NumComponents() == 1) {
        out.Require(!yes, "YES on a connected graph");
        if (2 * n <= 15) {
          const BoundedGraph gg = GenDisjointUnion(g, g);
          out.Require(NdTestDisconnection(gg, beta).yes, "NO on G + G");
          out.Require(ts::BruteForceDisconnected(gg, beta), "brute force NO on G + G");
        }
      }
      ++compared;
    }
  }
  Rng rng(10);
  for (int i = 0; i < 300; ++i) {
    const Vertex n = 9 + static_cast<Vertex>(rng.Below(7));
    const BoundedGraph g = ts::RandomBoundedGraph(rng, n, 4, static_cast<int>(rng.Below(2 * n)));
    out.Require(NdTestDisconnection(g, beta).yes == ts::BruteForceDisconnected(g, beta),
                "disagrees with brute force on a random graph");
    ++compared;
  }
  const BoundedGraph expander = ConnectedRandomRegular(500, 3, 1);
  const BoundedGraph both = GenDisjointUnion(expander, expander);
  const NdTester tester = DisconnectionNdTester(beta, 2, 200);
  const double yes_rate = RunNdTester(both, tester, DisconnectionCandidates(both, beta, 1), 30, 1).best_frequency;
  const double no_rate =
      RunNdTester(expander, tester, DisconnectionCandidates(expander, beta, 1), 30, 1).best_frequency;
  out.Require(yes_rate - no_rate >= 1.0 / 3, "acceptance gap below 1/3");
  out.detail = Fmt("%d graphs vs brute force; acceptance union %.3f, expander %.3f", compared,
                   yes_rate, no_rate) +
               (out.detail.empty() ? "" : "; " + out.detail);
  return out;
}

// 11. Every experiment above, run as a CLI report and replayed.
Outcome Replay() {
  Outcome out;
  const fs::path dir = fs::temp_directory_path() / "lgc_acceptance_replay";
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto path = [&](const std::string& name) { return (dir / name).string(); };
  auto run = [&](const std::vector<std::string>& args) {
    std::ostringstream sink;
    std::ostringstream err;
    const int code = cli::RunCommand(args, sink, err);
    out.Require(code == cli::kExitOk, args[0] + " failed: " + err.str());
  };
  run({"gen", "--type", "random-regular", "--n", "20000", "--d", "3", "--seed", "1", "--write", path("rr20000.txt")});
  run({"gen", "--type", "random-regular", "--n", "10000", "--d", "3", "--seed", "9", "--write", path("rr10000.txt")});
  run({"gen", "--type", "cycle", "--n", "8", "--write", path("c8.txt")});
  run({"gen", "--type", "cycle", "--n", "4", "--copies", "2", "--write", path("c4c4.txt")});
  run({"gen", "--type", "cycle", "--n", "16", "--write", path("c16.txt")});
  run({"gen", "--type", "cycle", "--n", "4096", "--write", path("c4096.txt")});
  run({"gen", "--type", "complete", "--n", "4", "--write", path("k4.txt")});
  run({"gen", "--type", "path", "--n", "8", "--write", path("p8.txt")});
  std::ofstream(path("expander.txt")) << [&] {
    std::ostringstream s;
    WriteGraph(s, ConnectedRandomRegular(500, 3, 1));
    return s.str();
  }();
  {
    const BoundedGraph e = ReadGraphFile(path("expander.txt"));
    std::ofstream(path("union.txt")) << [&] {
      std::ostringstream s;
      WriteGraph(s, GenDisjointUnion(e, e));
      return s.str();
    }();
    Rng rng(5);
    std::ofstream edges(path("edges.txt"));
    for (const Edge& x : ReadGraphFile(path("c16.txt")).Edges()) {
      edges << x.first << ' ' << x.second << ' ' << 1 + rng.Below(3) << '\n';
    }
  }

  const std::vector<std::vector<std::string>> experiments = {
      {"fiid", "--rule", "local-min-is", "--graph", path("rr20000.txt"), "--seed", "1", "--trials", "10"},
      {"dist", "--mode", "exact", "--g1", path("c8.txt"), "--g2", path("c4c4.txt"), "--r", "1", "--k", "2"},
      {"dist", "--g1", path("expander.txt"), "--g2", path("union.txt"), "--r", "2", "--k", "1"},
      {"spectral", "--graph", path("expander.txt")},
      {"regularize", "--graph", path("p8.txt"), "--r", "1", "--k", "2", "--eps", "0.1"},
      {"encode", "--graph", path("c16.txt"), "--edge-coloring", path("edges.txt"), "--k", "3"},
      {"hyperfinite", "--graph", path("c16.txt"), "--q", "3", "--mode", "exact"},
      {"hyperfinite", "--graph", path("c16.txt"), "--q", "3", "--mode", "heuristic"},
      {"spectral", "--graph", path("c4096.txt")},
      {"spectral", "--graph", path("k4.txt"), "--sandwich"},
      {"stats", "--graph", path("rr10000.txt"), "--r", "2", "--mode", "sampled", "--samples", "5000"},
      {"fiid", "--measure", "deficiency", "--graph", path("rr10000.txt"), "--r", "1", "--mc-samples",
       "100000", "--seed", "9"},
      {"ptest", "--property", "disconnection", "--graph", path("union.txt"), "--beta", "0.25", "--r",
       "2", "--t", "200", "--trials", "30"},
      {"ptest", "--property", "disconnection", "--graph", path("expander.txt"), "--beta", "0.25",
       "--r", "2", "--t", "200", "--trials", "30"},
  };
  int identical = 0;
  for (std::size_t i = 0; i < experiments.size(); ++i) {
    const std::string report = path("report" + std::to_string(i) + ".json");
    std::vector<std::string> args = experiments[i];
    args.insert(args.end(), {"--out", report});
    run(args);
    std::ostringstream verdict_text;
    std::ostringstream err;
    const int code = cli::RunCommand({"replay", "--report", report}, verdict_text, err);
    const auto verdict = nlohmann::json::parse(verdict_text.str());
    const bool same = code == cli::kExitOk && verdict["result"]["verdict"] == "identical";
    out.Require(same, "replay mismatch for " + experiments[i][0]);
    identical += same;
  }
  fs::remove_all(dir);
  out.detail = Fmt("%d/%zu reports replayed identically", identical, experiments.size()) +
               (out.detail.empty() ? "" : "; " + out.detail);
  return out;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace lgc

int main(int argc, char** argv) {
  using namespace lgc;
  const std::vector<Criterion> criteria = {
      {1, "fiid-density", FiidDensity},
      {2, "local-vs-local-global", CycleVersusSquares},
      {3, "certified-separation", CertifiedSeparation},
      {4, "regularization-sweep", RegularizationSweep},
      {5, "encoding-round-trip", EncodingRoundTrip},
      {6, "hyperfiniteness-oracle", CycleTau},
      {7, "spectral", Spectral},
      {8, "canonicalization", Canonicalization},
      {9, "quasirandomness", Quasirandomness},
      {10, "nd-testing", NdTesting},
      {11, "determinism-replay", Replay},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::stoi(argv[i]));

  int failures = 0;
  for (const Criterion& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = Outcome{false, std::string("exception: ") + e.what()};
    }
    failures += !outcome.pass;
    std::printf("%s %2d %-24s %8.2fs  %s\n", outcome.pass ? "PASS" : "FAIL", c.id, c.name,
                Seconds(start), outcome.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
