#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lgc/balls.hpp"
#include "lgc/graph.hpp"

namespace lgc {

// t independent uniform-root r-balls, deterministic in seed.
std::vector<RootedBall> SampleBalls(const BoundedGraph& graph, int radius, std::int64_t samples,
                                    std::uint64_t seed, const VertexColoring* coloring = nullptr);

// An (r, t) sampling tester. `decide` receives the sampled codes sorted, so
// it can only see the multiset of canonical balls.
struct Tester {
  std::string name;
  int radius = 1;
  std::int64_t samples = 1;
  std::function<bool(const std::vector<BallCode>&)> decide;
};

// Fraction of YES answers over `trials` runs with derived seeds.
double RunTester(const BoundedGraph& graph, const Tester& tester, int trials, std::uint64_t seed,
                 const VertexColoring* coloring = nullptr, int threads = 1);

// A tester over k-colored balls; the graph is accepted if some witness
// coloring makes the inner tester accept.
struct NdTester {
  int palette = 2;
  Tester inner;
};

struct NdRun {
  double best_frequency = 0.0;
  std::size_t best_witness = 0;
  std::vector<double> frequencies;  // one per candidate
};

NdRun RunNdTester(const BoundedGraph& graph, const NdTester& tester,
                  const std::vector<VertexColoring>& witnesses, int trials, std::uint64_t seed,
                  int threads = 1);

Tester AlwaysYesTester(int radius, std::int64_t samples);
// YES iff no sampled ball contains a triangle.
Tester TriangleFreeTester(int radius, std::int64_t samples);
// Over 2-colored balls: YES iff no sampled ball has a bichromatic edge and
// the fraction of roots colored 1 lies in [beta/2, 1 - beta/2].
NdTester DisconnectionNdTester(double beta, int radius, std::int64_t samples);

struct DisconnectionVerdict {
  bool yes = false;
  VertexColoring witness;            // 1 on the chosen components, 2 elsewhere
  std::vector<int> component_sizes;  // refutation data
  Vertex smaller_side = 0;           // most balanced achievable class size
};

// Exact: a witness is a union of components with both sides >= beta * n,
// found by subset sum over component sizes and re-checked on the graph.
DisconnectionVerdict NdTestDisconnection(const BoundedGraph& graph, double beta);

// 2-colorings worth trying as witnesses: the exact disconnection witness if
// any, a balanced BFS cut, a balanced random cut and a Fiedler-vector cut.
std::vector<VertexColoring> DisconnectionCandidates(const BoundedGraph& graph, double beta,
                                                    std::uint64_t seed);

// No bichromatic edge and both classes of size >= beta * n.
bool IsDisconnectionWitness(const BoundedGraph& graph, const VertexColoring& coloring, double beta);

}  // namespace lgc
