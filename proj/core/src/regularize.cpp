#include "lgc/regularize.hpp"

#include <map>

#include "lgc/balls.hpp"
#include "lgc/error.hpp"

namespace lgc {
namespace {

void CheckProbe(const BoundedGraph& graph, int palette, const VertexColoring& probe) {
  if (probe.palette != palette) {
    throw Error(ErrorCode::kInvalidArgument, "probe palette differs from k");
  }
  if (static_cast<Vertex>(probe.colors.size()) != graph.num_vertices()) {
    throw Error(ErrorCode::kSizeMismatch, "probe length differs from vertex count");
  }
  probe.Validate();
}

ProbeResponse Nearest(const BallDistribution& dist, const RegularizationResult& result) {
  ProbeResponse best;
  for (std::size_t i = 0; i < result.representative_distributions.size(); ++i) {
    Rational tv = TvDistance(dist, result.representative_distributions[i]);
    if (best.representative < 0 || tv < best.tv) {
      best.representative = static_cast<int>(i);
      best.tv = tv;
    }
  }
  best.alpha = result.representative_alpha[best.representative];
  best.covered = ToDouble(best.tv) <= result.epsilon;
  return best;
}

std::vector<std::vector<int>> RepresentativeAlphas(const RegularizationResult& result,
                                                   std::span<const VertexColoring> probes) {
  std::vector<std::vector<int>> alphas;
  for (int rep : result.representatives) {
    std::vector<int> alpha(result.q.palette, 1);
    const auto& colors = probes[rep].colors;
    for (std::size_t v = 0; v < colors.size(); ++v) alpha[result.q.colors[v] - 1] = colors[v];
    alphas.push_back(std::move(alpha));
  }
  return alphas;
}

}  // namespace

VertexColoring PowerGraphColoring(const BoundedGraph& graph, int radius) {
  const Vertex n = graph.num_vertices();
  VertexColoring out{1, std::vector<int>(n, 0)};
  BallExtractor extractor(graph);
  std::vector<char> used;
  for (Vertex v = 0; v < n; ++v) {
    const LocalBall ball = extractor.Local(v, radius);
    used.assign(ball.members.size() + 2, 0);
    for (Vertex w : ball.members) {
      const int c = out.colors[w];
      if (c > 0 && c < static_cast<int>(used.size())) used[c] = 1;
    }
    int c = 1;
    while (used[c]) ++c;
    out.colors[v] = c;
    out.palette = std::max(out.palette, c);
  }
  return out;
}

bool ColorClassesSeparated(const BoundedGraph& graph, const VertexColoring& coloring, int radius) {
  if (static_cast<Vertex>(coloring.colors.size()) != graph.num_vertices()) {
    throw Error(ErrorCode::kSizeMismatch, "coloring length differs from vertex count");
  }
  BallExtractor extractor(graph);
  for (Vertex v = 0; v < graph.num_vertices(); ++v) {
    for (Vertex w : extractor.Local(v, radius).members) {
      if (w != v && coloring.colors[w] == coloring.colors[v]) return false;
    }
  }
  return true;
}

RegularizationResult Regularize(const BoundedGraph& graph, int radius, int palette, double epsilon,
                                std::span<const VertexColoring> probes) {
  if (!(epsilon > 0.0)) throw Error(ErrorCode::kInvalidArgument, "epsilon must be positive");
  if (probes.empty()) throw Error(ErrorCode::kInvalidArgument, "probe family is empty");
  for (const auto& p : probes) CheckProbe(graph, palette, p);

  RegularizationResult result;
  result.radius = radius;
  result.palette = palette;
  result.epsilon = epsilon;

  LocalStatistics engine(graph, radius, palette);
  std::vector<BallDistribution> dists;
  dists.reserve(probes.size());
  for (const auto& p : probes) dists.push_back(engine.Distribution(p.colors));

  for (std::size_t i = 0; i < probes.size(); ++i) {
    bool near = false;
    for (const auto& rep : result.representative_distributions) {
      if (ToDouble(TvDistance(dists[i], rep)) <= epsilon) {
        near = true;
        break;
      }
    }
    if (!near) {
      result.representatives.push_back(static_cast<int>(i));
      result.representative_distributions.push_back(dists[i]);
    }
  }

  const VertexColoring power = PowerGraphColoring(graph, radius);
  result.power_palette = power.palette;
  const Vertex n = graph.num_vertices();
  std::map<std::vector<int>, int> class_ids;
  result.q.colors.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    std::vector<int> key;
    key.reserve(result.representatives.size() + 1);
    for (int rep : result.representatives) key.push_back(probes[rep].colors[v]);
    key.push_back(power.colors[v]);
    auto [it, inserted] = class_ids.try_emplace(std::move(key), static_cast<int>(class_ids.size()) + 1);
    result.q.colors[v] = it->second;
  }
  result.q.palette = std::max<int>(1, static_cast<int>(class_ids.size()));

  result.representative_alpha = RepresentativeAlphas(result, probes);
  for (const auto& d : dists) result.table.push_back(Nearest(d, result));
  return result;
}

ProbeResponse Respond(const BoundedGraph& graph, const RegularizationResult& result,
                      const VertexColoring& coloring) {
  CheckProbe(graph, result.palette, coloring);
  if (result.representatives.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "regularization result has no representatives");
  }
  return Nearest(ComputeBallDistribution(graph, result.radius, &coloring), result);
}

VertexColoring Compose(const RegularizationResult& result, std::span<const int> alpha) {
  if (static_cast<int>(alpha.size()) != result.q.palette) {
    throw Error(ErrorCode::kSizeMismatch, "palette map length differs from t");
  }
  VertexColoring out{result.palette, std::vector<int>(result.q.colors.size())};
  for (std::size_t v = 0; v < out.colors.size(); ++v) out.colors[v] = alpha[result.q.colors[v] - 1];
  return out;
}

std::vector<VertexColoring> AllColorings(Vertex n, int palette) {
  std::int64_t total = 1;
  for (Vertex i = 0; i < n; ++i) {
    total *= palette;
    if (total > (std::int64_t{1} << 20)) {
      throw Error(ErrorCode::kBudgetExceeded, "more than 2^20 colorings");
    }
  }
  std::vector<VertexColoring> out;
  out.reserve(total);
  std::vector<int> colors(n, 1);
  while (true) {
    out.push_back(VertexColoring{palette, colors});
    Vertex i = 0;
    while (i < n && colors[i] == palette) colors[i++] = 1;
    if (i == n) break;
    ++colors[i];
  }
  return out;
}

}  // namespace lgc
