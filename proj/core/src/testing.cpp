#include "lgc/testing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lgc/error.hpp"
#include "lgc/parallel.hpp"
#include "lgc/rng.hpp"
#include "lgc/spectral.hpp"

namespace lgc {
namespace {

constexpr std::uint64_t kTrialStream = 0x7472696c;
constexpr std::uint64_t kCutStream = 0x63757473;

void CheckBeta(double beta) {
  if (!(beta > 0.0 && beta <= 0.5)) {
    throw Error(ErrorCode::kInvalidArgument, "beta must lie in (0, 1/2]");
  }
}

bool HasBichromaticEdge(const RootedBall& ball) {
  for (int v = 0; v < ball.size(); ++v) {
    for (int w : ball.adjacency[v]) {
      if (ball.colors[v] != ball.colors[w]) return true;
    }
  }
  return false;
}

bool HasTriangle(const RootedBall& ball) {
  for (int u = 0; u < ball.size(); ++u) {
    for (int v : ball.adjacency[u]) {
      if (v <= u) continue;
      for (int w : ball.adjacency[v]) {
        if (w <= v) continue;
        const auto& nu = ball.adjacency[u];
        if (std::find(nu.begin(), nu.end(), w) != nu.end()) return true;
      }
    }
  }
  return false;
}

VertexColoring FirstHalf(std::span<const Vertex> order) {
  const std::size_t n = order.size();
  VertexColoring out{2, std::vector<int>(n, 2)};
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) out.colors[order[i]] = 1;
  return out;
}

}  // namespace

std::vector<RootedBall> SampleBalls(const BoundedGraph& graph, int radius, std::int64_t samples,
                                    std::uint64_t seed, const VertexColoring* coloring) {
  if (samples < 1) throw Error(ErrorCode::kInvalidArgument, "sample count must be >= 1");
  const Vertex n = graph.num_vertices();
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "graph has no vertices");
  if (coloring != nullptr && static_cast<Vertex>(coloring->colors.size()) != n) {
    throw Error(ErrorCode::kSizeMismatch, "coloring length differs from vertex count");
  }
  Rng rng(seed);
  BallExtractor extractor(graph);
  std::vector<RootedBall> out;
  out.reserve(samples);
  for (std::int64_t i = 0; i < samples; ++i) {
    out.push_back(extractor.Extract(static_cast<Vertex>(rng.Below(n)), radius, coloring));
  }
  return out;
}

double RunTester(const BoundedGraph& graph, const Tester& tester, int trials, std::uint64_t seed,
                 const VertexColoring* coloring, int threads) {
  if (trials < 1) throw Error(ErrorCode::kInvalidArgument, "trials must be >= 1");
  if (!tester.decide) throw Error(ErrorCode::kInvalidArgument, "tester has no decision rule");
  std::vector<char> answers(trials, 0);
  ParallelChunks(trials, threads, [&](int, std::int64_t begin, std::int64_t end) {
    std::vector<BallCode> codes;
    for (std::int64_t t = begin; t < end; ++t) {
      const auto balls = SampleBalls(graph, tester.radius, tester.samples,
                                     DeriveSeed(seed, kTrialStream, t), coloring);
      codes.clear();
      for (const auto& b : balls) codes.push_back(b.code);
      std::sort(codes.begin(), codes.end());
      answers[t] = tester.decide(codes) ? 1 : 0;
    }
  });
  return static_cast<double>(std::count(answers.begin(), answers.end(), 1)) / trials;
}

NdRun RunNdTester(const BoundedGraph& graph, const NdTester& tester,
                  const std::vector<VertexColoring>& witnesses, int trials, std::uint64_t seed,
                  int threads) {
  if (witnesses.empty()) throw Error(ErrorCode::kInvalidArgument, "no witness candidates");
  NdRun run;
  for (const auto& w : witnesses) {
    if (w.palette != tester.palette) {
      throw Error(ErrorCode::kInvalidArgument, "witness palette differs from the tester's");
    }
    const double f = RunTester(graph, tester.inner, trials, seed, &w, threads);
    if (run.frequencies.empty() || f > run.best_frequency) {
      run.best_frequency = f;
      run.best_witness = run.frequencies.size();
    }
    run.frequencies.push_back(f);
  }
  return run;
}

Tester AlwaysYesTester(int radius, std::int64_t samples) {
  return Tester{"always-yes", radius, samples, [](const std::vector<BallCode>&) { return true; }};
}

Tester TriangleFreeTester(int radius, std::int64_t samples) {
  return Tester{"triangle-free", radius, samples, [](const std::vector<BallCode>& codes) {
                  for (const auto& c : codes) {
                    if (HasTriangle(DecodeBall(c))) return false;
                  }
                  return true;
                }};
}

NdTester DisconnectionNdTester(double beta, int radius, std::int64_t samples) {
  CheckBeta(beta);
  Tester inner{"disconnection", radius, samples, [beta](const std::vector<BallCode>& codes) {
                 std::int64_t first = 0;
                 for (const auto& c : codes) {
                   const RootedBall ball = DecodeBall(c);
                   if (HasBichromaticEdge(ball)) return false;
                   if (ball.colors[0] == 1) ++first;
                 }
                 const double fraction = static_cast<double>(first) / codes.size();
                 return fraction >= beta / 2 && fraction <= 1 - beta / 2;
               }};
  return NdTester{2, std::move(inner)};
}

bool IsDisconnectionWitness(const BoundedGraph& graph, const VertexColoring& coloring, double beta) {
  const Vertex n = graph.num_vertices();
  if (static_cast<Vertex>(coloring.colors.size()) != n || coloring.palette != 2) return false;
  for (const Edge& e : graph.Edges()) {
    if (coloring.colors[e.first] != coloring.colors[e.second]) return false;
  }
  const auto ones = std::count(coloring.colors.begin(), coloring.colors.end(), 1);
  const auto twos = std::count(coloring.colors.begin(), coloring.colors.end(), 2);
  if (ones + twos != n) return false;
  const double need = beta * n;
  return static_cast<double>(std::min(ones, twos)) >= need - 1e-9;
}

DisconnectionVerdict NdTestDisconnection(const BoundedGraph& graph, double beta) {
  CheckBeta(beta);
  const Vertex n = graph.num_vertices();
  const std::vector<int> labels = graph.ComponentLabels();
  const int components = graph.NumComponents();
  std::vector<int> sizes(components, 0);
  for (Vertex v = 0; v < n; ++v) ++sizes[labels[v]];

  // from[s]: component that first reached sum s, -1 if unreachable.
  const Vertex half = n / 2;
  std::vector<int> from(half + 1, -1);
  from[0] = components;
  for (int c = 0; c < components; ++c) {
    for (Vertex s = half; s >= sizes[c]; --s) {
      if (from[s] < 0 && from[s - sizes[c]] >= 0) from[s] = c;
    }
  }
  Vertex best = half;
  while (from[best] < 0) --best;

  DisconnectionVerdict out;
  out.component_sizes = sizes;
  std::sort(out.component_sizes.begin(), out.component_sizes.end(), std::greater<>());
  out.smaller_side = best;
  out.witness = VertexColoring{2, std::vector<int>(n, 2)};
  std::vector<char> chosen(components, 0);
  for (Vertex s = best; s > 0; s -= sizes[from[s]]) chosen[from[s]] = 1;
  for (Vertex v = 0; v < n; ++v) {
    if (chosen[labels[v]]) out.witness.colors[v] = 1;
  }
  out.yes = IsDisconnectionWitness(graph, out.witness, beta);
  return out;
}

std::vector<VertexColoring> DisconnectionCandidates(const BoundedGraph& graph, double beta,
                                                    std::uint64_t seed) {
  const Vertex n = graph.num_vertices();
  std::vector<VertexColoring> out;
  const DisconnectionVerdict exact = NdTestDisconnection(graph, beta);
  if (exact.yes) out.push_back(exact.witness);

  std::vector<Vertex> order;
  std::vector<char> seen(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    std::size_t head = order.size();
    order.push_back(s);
    while (head < order.size()) {
      const Vertex v = order[head++];
      for (Vertex w : graph.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
      }
    }
  }
  out.push_back(FirstHalf(order));

  std::iota(order.begin(), order.end(), 0);
  Rng rng(DeriveSeed(seed, kCutStream));
  rng.Shuffle(std::span<Vertex>(order));
  out.push_back(FirstHalf(order));

  if (n >= 2) {
    const SpectralReport spectral = SpectralGap(graph, 1e-8);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
      return spectral.eigenvector[a] < spectral.eigenvector[b];
    });
    out.push_back(FirstHalf(order));
  }
  return out;
}

}  // namespace lgc
