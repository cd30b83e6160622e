#pragma once

#include <span>
#include <vector>

#include "lgc/graph.hpp"
#include "lgc/rational.hpp"
#include "lgc/stats.hpp"

namespace lgc {

// Palette map [t] -> [k] together with the distance it achieves.
struct ProbeResponse {
  std::vector<int> alpha;  // alpha[class - 1] in 1..k
  int representative = -1;
  Rational tv;
  bool covered = false;
};

// A t-coloring q separating vertices within distance r, plus a palette map
// for every probe coloring. The guarantee is relative to the probe family:
// representatives form an eps-net over the probes' realized distributions.
struct RegularizationResult {
  int radius = 0;
  int palette = 1;
  double epsilon = 0.0;
  VertexColoring q;
  int power_palette = 0;  // colors used by the distance-r separating coloring
  std::vector<int> representatives;  // probe indices
  std::vector<BallDistribution> representative_distributions;
  std::vector<std::vector<int>> representative_alpha;
  std::vector<ProbeResponse> table;  // one per probe
};

// Greedy proper coloring of the r-th power graph, vertices by index, least
// color not used within distance r.
VertexColoring PowerGraphColoring(const BoundedGraph& graph, int radius);

// True iff no two distinct vertices within distance r share a color.
bool ColorClassesSeparated(const BoundedGraph& graph, const VertexColoring& coloring, int radius);

RegularizationResult Regularize(const BoundedGraph& graph, int radius, int palette, double epsilon,
                                std::span<const VertexColoring> probes);

// Nearest representative's palette map for an arbitrary k-coloring.
ProbeResponse Respond(const BoundedGraph& graph, const RegularizationResult& result,
                      const VertexColoring& coloring);

// alpha applied to q.
VertexColoring Compose(const RegularizationResult& result, std::span<const int> alpha);

// All palette^n colorings of a small graph, in odometer order.
std::vector<VertexColoring> AllColorings(Vertex n, int palette);

}  // namespace lgc
