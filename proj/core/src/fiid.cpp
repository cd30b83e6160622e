#include "lgc/fiid.hpp"

#include "lgc/balls.hpp"
#include "lgc/error.hpp"
#include "lgc/parallel.hpp"

namespace lgc {
namespace {

void CheckColoring(const BoundedGraph& graph, const VertexColoring& c, const char* what) {
  if (static_cast<Vertex>(c.colors.size()) != graph.num_vertices()) {
    throw Error(ErrorCode::kSizeMismatch, std::string(what) + " length differs from vertex count");
  }
  c.Validate();
}

}  // namespace

VertexColoring RunRule(const BoundedGraph& graph, const FiidRule& rule, std::uint64_t seed,
                       int threads) {
  if (!rule.apply) throw Error(ErrorCode::kInvalidArgument, "rule has no function");
  const Vertex n = graph.num_vertices();
  const WeightAssignment weights{seed};
  VertexColoring out{rule.palette, std::vector<int>(n, 1)};
  ParallelChunks(n, threads, [&](int, std::int64_t begin, std::int64_t end) {
    BallExtractor extractor(graph);
    WeightedBall ball;
    for (std::int64_t v = begin; v < end; ++v) {
      LocalBall local = extractor.Local(static_cast<Vertex>(v), rule.radius);
      ball.adjacency = std::move(local.adjacency);
      ball.distance = std::move(local.distance);
      ball.weights.resize(local.members.size());
      for (std::size_t i = 0; i < local.members.size(); ++i) ball.weights[i] = weights.Raw(local.members[i]);
      const int color = rule.apply(ball);
      if (color < 1 || color > rule.palette) {
        throw Error(ErrorCode::kInvalidArgument, "rule " + rule.name + " returned color out of range");
      }
      out.colors[v] = color;
    }
  });
  return out;
}

FiidRule LocalMinIndependentSet() {
  return FiidRule{"local-min-is", 1, 2, [](const WeightedBall& ball) {
                    for (int w : ball.adjacency[0]) {
                      if (ball.weights[w] <= ball.weights[0]) return 2;
                    }
                    return 1;
                  }};
}

bool IsIndependent(const BoundedGraph& graph, const VertexColoring& coloring, int selected) {
  for (const Edge& e : graph.Edges()) {
    if (coloring.colors[e.first] == selected && coloring.colors[e.second] == selected) return false;
  }
  return true;
}

VertexColoring ProductColoring(const VertexColoring& c, const VertexColoring& h) {
  if (c.colors.size() != h.colors.size()) {
    throw Error(ErrorCode::kSizeMismatch, "colorings have different lengths");
  }
  VertexColoring out{c.palette * h.palette, std::vector<int>(c.colors.size())};
  for (std::size_t v = 0; v < c.colors.size(); ++v) {
    out.colors[v] = (c.colors[v] - 1) * h.palette + h.colors[v];
  }
  return out;
}

DeficiencyResult QuasirandomDeficiency(const BoundedGraph& graph, const VertexColoring& c,
                                       const VertexColoring& h, int radius,
                                       std::int64_t mc_samples, std::uint64_t seed, bool exact) {
  CheckColoring(graph, c, "c");
  CheckColoring(graph, h, "h");
  if (!exact && mc_samples < 1) throw Error(ErrorCode::kInvalidArgument, "mc_samples must be >= 1");
  const Vertex n = graph.num_vertices();
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "graph has no vertices");
  const int k = c.palette;
  const int l = h.palette;
  const int palette = k * l;

  DeficiencyResult out;
  const VertexColoring product = ProductColoring(c, h);
  out.observed = ComputeBallDistribution(graph, radius, &product);
  out.exact = exact;

  BallDistribution& ref = out.reference;
  ref.radius = radius;
  ref.palette = palette;
  BallExtractor extractor(graph);
  std::vector<int> overlay;
  auto code_for = [&](const LocalBall& ball, std::span<const int> cs) {
    overlay.resize(ball.members.size());
    for (std::size_t i = 0; i < ball.members.size(); ++i) {
      overlay[i] = (cs[i] - 1) * l + h.colors[ball.members[i]];
    }
    return CanonicalBall(ball.adjacency, overlay, 0, radius, palette).code;
  };

  if (exact) {
    std::vector<LocalBall> balls;
    std::size_t largest = 0;
    for (Vertex v = 0; v < n; ++v) {
      balls.push_back(extractor.Local(v, radius));
      largest = std::max(largest, balls.back().members.size());
    }
    if (largest > static_cast<std::size_t>(kExactOverlayMaxVertices)) {
      throw Error(ErrorCode::kInvalidArgument, "exact overlay needs balls of at most 6 vertices");
    }
    std::int64_t full = 1;
    for (std::size_t i = 0; i < largest; ++i) full *= k;
    for (const auto& ball : balls) {
      const std::size_t s = ball.members.size();
      std::int64_t weight = full;
      for (std::size_t i = 0; i < s; ++i) weight /= k;
      std::vector<int> cs(s, 1);
      while (true) {
        ref.counts[code_for(ball, cs)] += weight;
        std::size_t i = 0;
        while (i < s && cs[i] == k) cs[i++] = 1;
        if (i == s) break;
        ++cs[i];
      }
    }
    ref.total = full * n;
  } else {
    Rng rng(seed);
    std::vector<int> cs;
    for (std::int64_t s = 0; s < mc_samples; ++s) {
      const Vertex v = static_cast<Vertex>(rng.Below(n));
      const LocalBall ball = extractor.Local(v, radius);
      cs.resize(ball.members.size());
      for (auto& x : cs) x = 1 + static_cast<int>(rng.Below(k));
      ++ref.counts[code_for(ball, cs)];
    }
    ref.total = mc_samples;
    ref.mode = DistributionMode::kSampled;
    ref.samples = mc_samples;
    ref.seed = seed;
    out.samples = mc_samples;
  }
  out.value = TvDistance(out.observed, ref);
  return out;
}

}  // namespace lgc
