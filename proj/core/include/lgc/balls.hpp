#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lgc/graph.hpp"

namespace lgc {

// Canonical byte string identifying a rooted colored ball up to isomorphism.
//
// Layout (all single bytes unless noted):
//   radius, palette, vertex count n, root position (always 0),
//   n ball-internal degrees in canonical order,
//   ceil(n(n-1)/2 / 8) bytes of upper-triangle adjacency, MSB-first,
//   n colors in canonical order (1..palette).
using BallCode = std::string;

inline constexpr int kMaxBallVertices = 255;
inline constexpr int kMaxPalette = 255;

// A rooted colored graph of radius at most `radius`, stored in canonical
// vertex order with the root at position 0.
struct RootedBall {
  int radius = 0;
  int palette = 1;
  std::vector<std::vector<int>> adjacency;
  std::vector<int> colors;
  BallCode code;

  int size() const { return static_cast<int>(adjacency.size()); }
  friend bool operator==(const RootedBall& a, const RootedBall& b) { return a.code == b.code; }
};

// Uncanonicalized r-neighborhood in BFS order; members[0] is the root.
struct LocalBall {
  std::vector<Vertex> members;
  std::vector<std::vector<int>> adjacency;
  std::vector<int> distance;
};

// Canonicalizes an arbitrary rooted colored graph. Throws RadiusExceeded if a
// vertex is farther than `radius` from the root or unreachable.
RootedBall CanonicalBall(std::span<const std::vector<int>> adjacency, std::span<const int> colors,
                         int root, int radius, int palette);

// Reconstructs the ball a code describes. Decode(code).code == code.
RootedBall DecodeBall(const BallCode& code);

std::string ToHex(const BallCode& code);
BallCode FromHex(const std::string& hex);

// Reusable BFS scratch space for repeated extraction on one graph. Not
// thread-safe; use one per worker.
class BallExtractor {
 public:
  explicit BallExtractor(const BoundedGraph& graph);

  LocalBall Local(Vertex root, int radius);
  RootedBall Extract(Vertex root, int radius, const VertexColoring* coloring = nullptr);

 private:
  const BoundedGraph* graph_;
  std::vector<int> local_index_;
};

// Induced subgraph on the vertices within distance `radius` of v, colors
// restricted, canonicalized.
RootedBall ExtractBall(const BoundedGraph& graph, Vertex v, int radius,
                       const VertexColoring* coloring = nullptr);

// Every isomorphism class of k-colored rooted graphs with radius <= r, all
// degrees <= d and at most max_size vertices, sorted by code. Throws
// BudgetExceeded once more than `max_candidates` extensions would be tried.
inline constexpr std::int64_t kEnumerationBudget = 10'000'000;
std::vector<RootedBall> EnumerateBalls(int radius, int max_degree, int palette, int max_size,
                                       std::int64_t max_candidates = kEnumerationBudget);

// Upper bound 1 + d + d(d-1) + ... + d(d-1)^(r-1) on ball size.
std::int64_t MooreBound(int max_degree, int radius);

}  // namespace lgc
