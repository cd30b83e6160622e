#include "lgc/encode.hpp"

#include <algorithm>
#include <iterator>

#include "lgc/error.hpp"

namespace lgc {

int EdgeColoring::at(Vertex u, Vertex v) const {
  auto it = colors.find(u < v ? Edge{u, v} : Edge{v, u});
  if (it == colors.end()) throw Error(ErrorCode::kInvalidArgument, "edge has no color");
  return it->second;
}

void EdgeColoring::Validate(const BoundedGraph& graph) const {
  if (palette < 1) throw Error(ErrorCode::kInvalidArgument, "edge palette must be positive");
  if (colors.size() != static_cast<std::size_t>(graph.num_edges())) {
    throw Error(ErrorCode::kSizeMismatch, "edge coloring does not cover the edge set exactly");
  }
  for (const auto& [e, c] : colors) {
    if (e.first >= e.second || !graph.HasEdge(e.first, e.second)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "colored pair " + std::to_string(e.first) + " " + std::to_string(e.second) +
                      " is not an edge");
    }
    if (c < 1 || c > palette) throw Error(ErrorCode::kInvalidArgument, "edge color out of range");
  }
}

long long EncodingPaletteBound(int max_degree, int palette) {
  const long long d = max_degree;
  return 30 * d * d * d * palette;
}

EdgeEncoding EncodeEdgeColoring(const BoundedGraph& graph, const EdgeColoring& coloring) {
  coloring.Validate(graph);
  const int k = coloring.palette;
  const Vertex n = graph.num_vertices();
  std::vector<std::vector<std::pair<Vertex, int>>> incident_j(n);  // (other end, j)
  EdgeEncoding out;
  out.refined.palette = 0;
  const long long bound = EncodingPaletteBound(graph.max_degree(), k);
  std::vector<char> used;
  for (const auto& [e, c] : coloring.colors) {
    // Edges within line distance 2 of e touch N[a] or N[b].
    used.assign(2, 0);
    auto mark = [&](Vertex x) {
      for (const auto& [y, j] : incident_j[x]) {
        if (coloring.at(x, y) != c) continue;
        if (j >= static_cast<int>(used.size())) used.resize(j + 1, 0);
        used[j] = 1;
      }
    };
    for (Vertex end : {e.first, e.second}) {
      mark(end);
      for (Vertex w : graph.neighbors(end)) mark(w);
    }
    int j = 1;
    while (j < static_cast<int>(used.size()) && used[j]) ++j;
    const long long c1 = c + static_cast<long long>(k) * (j - 1);
    if (c1 > bound) {
      throw Error(ErrorCode::kPaletteOverflow,
                  "refined edge color " + std::to_string(c1) + " exceeds 30 d^3 k");
    }
    incident_j[e.first].emplace_back(e.second, j);
    incident_j[e.second].emplace_back(e.first, j);
    out.refined.colors.emplace(e, static_cast<int>(c1));
    out.refined.palette = std::max(out.refined.palette, static_cast<int>(c1));
  }
  out.refined.palette = std::max(out.refined.palette, 1);
  out.sets.palette = out.refined.palette;
  out.sets.sets.assign(n, {});
  for (const auto& [e, c1] : out.refined.colors) {
    out.sets.sets[e.first].push_back(c1);
    out.sets.sets[e.second].push_back(c1);
  }
  for (auto& s : out.sets.sets) std::sort(s.begin(), s.end());
  return out;
}

EdgeColoring DecodeEdgeColoring(const BoundedGraph& graph, const VertexSetColoring& sets,
                                int palette) {
  if (palette < 1) throw Error(ErrorCode::kInvalidArgument, "palette must be positive");
  if (static_cast<Vertex>(sets.sets.size()) != graph.num_vertices()) {
    throw Error(ErrorCode::kSizeMismatch, "set coloring length differs from vertex count");
  }
  for (Vertex v = 0; v < graph.num_vertices(); ++v) {
    std::vector<int> s = sets.sets[v];
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (static_cast<int>(s.size()) != graph.degree(v)) {
      throw Error(ErrorCode::kAmbiguousIntersection,
                  "vertex " + std::to_string(v) + " carries " + std::to_string(s.size()) +
                      " distinct values for degree " + std::to_string(graph.degree(v)));
    }
  }
  EdgeColoring out{palette, {}};
  std::vector<int> common;
  for (const Edge& e : graph.Edges()) {
    std::vector<int> a = sets.sets[e.first];
    std::vector<int> b = sets.sets[e.second];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    common.clear();
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (common.size() != 1) {
      throw Error(ErrorCode::kAmbiguousIntersection,
                  "endpoints of edge " + std::to_string(e.first) + " " + std::to_string(e.second) +
                      " share " + std::to_string(common.size()) + " values");
    }
    if (common[0] < 1) throw Error(ErrorCode::kInvalidArgument, "set values must be positive");
    out.colors.emplace(e, (common[0] - 1) % palette + 1);
  }
  return out;
}

}  // namespace lgc
