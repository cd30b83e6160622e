#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "lgc/rational.hpp"

namespace lgc {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph with a declared degree bound. Immutable after
// construction; neighbor lists are sorted ascending.
class BoundedGraph {
 public:
  BoundedGraph() = default;

  // Validates and builds. Pairs are sorted and deduplicated; self-loops and
  // degrees above max_degree are rejected.
  static BoundedGraph Build(Vertex n, std::span<const Edge> edges, int max_degree);

  Vertex num_vertices() const { return static_cast<Vertex>(adjacency_.size()); }
  std::int64_t num_edges() const { return num_edges_; }
  int max_degree() const { return max_degree_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool HasEdge(Vertex u, Vertex v) const;

  // Largest degree actually present.
  int ObservedMaxDegree() const;
  bool IsRegular(int d) const;

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> Edges() const;

  // Component label per vertex, labels 0.. in order of smallest member.
  std::vector<int> ComponentLabels() const;
  int NumComponents() const;

  // Relabel: vertex v of this graph becomes perm[v].
  BoundedGraph Permuted(std::span<const Vertex> perm) const;

  friend bool operator==(const BoundedGraph&, const BoundedGraph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::int64_t num_edges_ = 0;
  int max_degree_ = 0;
};

// k-coloring with values in 1..k.
struct VertexColoring {
  int palette = 1;
  std::vector<int> colors;

  static VertexColoring Constant(Vertex n, int palette, int color = 1);
  // Throws InvalidArgument if any entry is outside 1..palette.
  void Validate() const;
  friend bool operator==(const VertexColoring&, const VertexColoring&) = default;
};

BoundedGraph GenCycle(Vertex n);
BoundedGraph GenPath(Vertex n);
BoundedGraph GenComplete(Vertex n);
BoundedGraph GenDisjointUnion(const BoundedGraph& first, const BoundedGraph& second);

// Configuration model with whole-attempt rejection of loops and multi-edges.
inline constexpr int kRandomRegularMaxAttempts = 10000;
BoundedGraph GenRandomRegular(Vertex n, int d, std::uint64_t seed,
                              int max_attempts = kRandomRegularMaxAttempts);

// |E(G1) xor E(G2)| / n on a shared vertex set.
Rational EditDistance(const BoundedGraph& first, const BoundedGraph& second);

}  // namespace lgc
