#pragma once

// Brute-force reference computations. Nothing here calls the canonical
// labeling code, so the checks that use these stay independent of it.

#include <map>
#include <vector>

#include "lgc/graph.hpp"
#include "lgc/rng.hpp"

namespace lgc::testing_support {

struct PlainBall {
  std::vector<std::vector<int>> adjacency;
  std::vector<int> colors;
  int root = 0;
};

// Induced r-neighborhood of v, vertices in BFS order (root first).
PlainBall ExtractPlain(const BoundedGraph& g, Vertex v, int radius, const std::vector<int>* colors);

// Exhaustive search for a root- and color-preserving isomorphism.
bool RootedIsomorphic(const PlainBall& a, const PlainBall& b);

// Assigns isomorphism-class ids by pairwise comparison with representatives.
class BruteForceClassifier {
 public:
  int Classify(const PlainBall& ball);
  int size() const { return static_cast<int>(representatives_.size()); }

 private:
  std::vector<PlainBall> representatives_;
};

// Counts of class ids, one entry per vertex.
using ClassHistogram = std::map<int, int>;

// Distinct histograms over all k^n colorings.
std::vector<ClassHistogram> BruteForceQuotient(const BoundedGraph& g, int radius, int palette,
                                               BruteForceClassifier& classifier);

double HistogramTv(const ClassHistogram& a, int total_a, const ClassHistogram& b, int total_b);

double BruteForceHausdorff(const std::vector<ClassHistogram>& a, int total_a,
                           const std::vector<ClassHistogram>& b, int total_b);

// Same ball under a uniformly random vertex relabeling.
PlainBall Relabel(const PlainBall& b, Rng& rng);

// All labeled radius-1 balls with root 0, m <= max_degree neighbors, any
// edges among the neighbors and any coloring.
std::vector<PlainBall> AllLabeledRadiusOneBalls(int max_degree, int palette);

// Exhaustive over all 2-colorings.
bool BruteForceDisconnected(const BoundedGraph& g, double beta);

}  // namespace lgc::testing_support
