#pragma once

#include <map>
#include <vector>

#include "lgc/graph.hpp"

namespace lgc {

// Colors keyed by sorted (u, v) pairs with u < v.
struct EdgeColoring {
  int palette = 1;
  std::map<Edge, int> colors;

  int at(Vertex u, Vertex v) const;
  // Every edge of the graph exactly once, colors in 1..palette.
  void Validate(const BoundedGraph& graph) const;
};

// Per-vertex sorted sets of values in 1..palette.
struct VertexSetColoring {
  int palette = 1;
  std::vector<std::vector<int>> sets;
};

struct EdgeEncoding {
  EdgeColoring refined;  // c1
  VertexSetColoring sets;  // c2
};

// c1 = c + k*(j - 1) with j a greedy coloring that separates equal-c edges
// within line-graph distance 2; c2(v) collects c1 over the edges at v.
EdgeEncoding EncodeEdgeColoring(const BoundedGraph& graph, const EdgeColoring& coloring);

// Recovers c from c2 by intersecting endpoint sets and reducing mod k.
EdgeColoring DecodeEdgeColoring(const BoundedGraph& graph, const VertexSetColoring& sets,
                                int palette);

// 30 d^3 k.
long long EncodingPaletteBound(int max_degree, int palette);

}  // namespace lgc
