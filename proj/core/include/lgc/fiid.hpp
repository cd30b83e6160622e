#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lgc/graph.hpp"
#include "lgc/rational.hpp"
#include "lgc/rng.hpp"
#include "lgc/stats.hpp"

namespace lgc {

// I.i.d. vertex weights as a pure function of (seed, vertex). Raw values are
// compared as integers; Weight maps them into [0, 1).
struct WeightAssignment {
  std::uint64_t seed = 0;

  std::uint64_t Raw(Vertex v) const {
    return DeriveSeed(seed, 0x77656967, static_cast<std::uint64_t>(v));
  }
  double Weight(Vertex v) const { return static_cast<double>(Raw(v) >> 11) * 0x1p-53; }
};

// r-ball around a root in BFS order (root first) with its weights.
struct WeightedBall {
  std::vector<std::vector<int>> adjacency;
  std::vector<int> distance;
  std::vector<std::uint64_t> weights;
};

// A local rule. `apply` must depend only on the isomorphism class of the
// weighted ball; the BFS order it receives is otherwise arbitrary.
struct FiidRule {
  std::string name;
  int radius = 1;
  int palette = 2;
  std::function<int(const WeightedBall&)> apply;
};

VertexColoring RunRule(const BoundedGraph& graph, const FiidRule& rule, std::uint64_t seed,
                       int threads = 1);

// Color 1 iff the root weight is strictly below every neighbor's.
FiidRule LocalMinIndependentSet();

bool IsIndependent(const BoundedGraph& graph, const VertexColoring& coloring, int selected = 1);

inline constexpr int kExactOverlayMaxVertices = 6;

struct DeficiencyResult {
  Rational value;
  bool exact = false;
  std::int64_t samples = 0;
  BallDistribution observed;   // P[c x h]
  BallDistribution reference;  // estimate of the overlay measure
};

// Product coloring (c - 1) * l + h with palette k * l.
VertexColoring ProductColoring(const VertexColoring& c, const VertexColoring& h);

// TV distance between P[c x h] and the measure obtained by overlaying
// independent uniform k-colors on h-colored r-balls at uniform roots.
// With `exact` every overlay of every ball is enumerated instead of sampled;
// that needs every ball to have at most kExactOverlayMaxVertices vertices.
DeficiencyResult QuasirandomDeficiency(const BoundedGraph& graph, const VertexColoring& c,
                                       const VertexColoring& h, int radius,
                                       std::int64_t mc_samples, std::uint64_t seed,
                                       bool exact = false);

}  // namespace lgc
