#include "lgc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lgc/error.hpp"
#include "lgc/rng.hpp"

namespace lgc {

BoundedGraph BoundedGraph::Build(Vertex n, std::span<const Edge> edges, int max_degree) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  if (max_degree < 0) throw Error(ErrorCode::kInvalidArgument, "negative degree bound");
  std::vector<Edge> sorted;
  sorted.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    }
    if (u == v) throw Error(ErrorCode::kSelfLoop, "vertex " + std::to_string(u));
    sorted.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  BoundedGraph g;
  g.max_degree_ = max_degree;
  g.num_edges_ = static_cast<std::int64_t>(sorted.size());
  g.adjacency_.resize(n);
  for (auto [u, v] : sorted) {
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& list = g.adjacency_[v];
    if (static_cast<int>(list.size()) > max_degree) {
      throw Error(ErrorCode::kDegreeExceeded,
                  "vertex " + std::to_string(v) + " has degree " + std::to_string(list.size()) +
                      " > " + std::to_string(max_degree));
    }
    std::sort(list.begin(), list.end());
  }
  return g;
}

bool BoundedGraph::HasEdge(Vertex u, Vertex v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

int BoundedGraph::ObservedMaxDegree() const {
  int best = 0;
  for (const auto& list : adjacency_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

bool BoundedGraph::IsRegular(int d) const {
  return std::all_of(adjacency_.begin(), adjacency_.end(),
                     [d](const auto& list) { return static_cast<int>(list.size()) == d; });
}

std::vector<Edge> BoundedGraph::Edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> BoundedGraph::ComponentLabels() const {
  const Vertex n = num_vertices();
  std::vector<int> label(n, -1);
  std::vector<Vertex> stack;
  int next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : adjacency_[u]) {
        if (label[w] < 0) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

int BoundedGraph::NumComponents() const {
  auto labels = ComponentLabels();
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

BoundedGraph BoundedGraph::Permuted(std::span<const Vertex> perm) const {
  if (static_cast<Vertex>(perm.size()) != num_vertices()) {
    throw Error(ErrorCode::kSizeMismatch, "permutation length");
  }
  std::vector<Edge> edges;
  edges.reserve(num_edges_);
  for (auto [u, v] : Edges()) edges.emplace_back(perm[u], perm[v]);
  return Build(num_vertices(), edges, max_degree_);
}

VertexColoring VertexColoring::Constant(Vertex n, int palette, int color) {
  return VertexColoring{palette, std::vector<int>(n, color)};
}

void VertexColoring::Validate() const {
  if (palette < 1) throw Error(ErrorCode::kInvalidArgument, "palette must be >= 1");
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (colors[i] < 1 || colors[i] > palette) {
      throw Error(ErrorCode::kInvalidArgument,
                  "color " + std::to_string(colors[i]) + " at vertex " + std::to_string(i) +
                      " outside 1.." + std::to_string(palette));
    }
  }
}

BoundedGraph GenCycle(Vertex n) {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return BoundedGraph::Build(n, edges, 2);
}

BoundedGraph GenPath(Vertex n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return BoundedGraph::Build(n, edges, n == 1 ? 0 : (n == 2 ? 1 : 2));
}

BoundedGraph GenComplete(Vertex n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return BoundedGraph::Build(n, edges, n - 1);
}

BoundedGraph GenDisjointUnion(const BoundedGraph& first, const BoundedGraph& second) {
  const Vertex offset = first.num_vertices();
  std::vector<Edge> edges = first.Edges();
  for (auto [u, v] : second.Edges()) edges.emplace_back(u + offset, v + offset);
  return BoundedGraph::Build(offset + second.num_vertices(), edges,
                             std::max(first.max_degree(), second.max_degree()));
}

BoundedGraph GenRandomRegular(Vertex n, int d, std::uint64_t seed, int max_attempts) {
  if (n < 1 || d < 0) throw Error(ErrorCode::kInvalidArgument, "need n >= 1, d >= 0");
  if ((static_cast<std::int64_t>(n) * d) % 2 != 0) {
    throw Error(ErrorCode::kInfeasible, "n*d is odd");
  }
  if (d >= n) throw Error(ErrorCode::kInfeasible, "d must be below n");

  const std::size_t stubs_count = static_cast<std::size_t>(n) * d;
  std::vector<Vertex> stubs(stubs_count);
  std::vector<Edge> edges;
  edges.reserve(stubs_count / 2);
  Rng rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    for (std::size_t i = 0; i < stubs_count; ++i) stubs[i] = static_cast<Vertex>(i / d);
    rng.Shuffle(std::span<Vertex>(stubs));
    edges.clear();
    bool simple = true;
    for (std::size_t i = 0; i < stubs_count; i += 2) {
      Vertex u = stubs[i];
      Vertex v = stubs[i + 1];
      if (u == v) {
        simple = false;
        break;
      }
      edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    if (!simple) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    return BoundedGraph::Build(n, edges, d);
  }
  throw Error(ErrorCode::kRetryExhausted,
              "no simple pairing in " + std::to_string(max_attempts) + " attempts");
}

Rational EditDistance(const BoundedGraph& first, const BoundedGraph& second) {
  if (first.num_vertices() != second.num_vertices()) {
    throw Error(ErrorCode::kSizeMismatch, "edit distance needs equal vertex counts");
  }
  if (first.num_vertices() == 0) return Rational(0);
  const auto a = first.Edges();
  const auto b = second.Edges();
  std::vector<Edge> diff;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(diff));
  return Rational(static_cast<std::int64_t>(diff.size()), first.num_vertices());
}

}  // namespace lgc
