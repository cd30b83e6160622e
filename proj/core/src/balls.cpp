#include "lgc/balls.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "lgc/canon.hpp"
#include "lgc/error.hpp"

namespace lgc {
namespace {

std::vector<int> Distances(std::span<const std::vector<int>> adjacency, int root) {
  std::vector<int> dist(adjacency.size(), -1);
  std::vector<int> queue{root};
  dist[root] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int w : adjacency[u]) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

RootedBall CanonicalBall(std::span<const std::vector<int>> adjacency, std::span<const int> colors,
                         int root, int radius, int palette) {
  const int n = static_cast<int>(adjacency.size());
  if (n < 1 || root < 0 || root >= n) {
    throw Error(ErrorCode::kInvalidArgument, "ball needs a root inside the vertex set");
  }
  if (n > kMaxBallVertices) {
    throw Error(ErrorCode::kBudgetExceeded, "ball has more than 255 vertices");
  }
  if (palette < 1 || palette > kMaxPalette || radius < 0 || radius > 255) {
    throw Error(ErrorCode::kInvalidArgument, "palette or radius out of range");
  }
  if (static_cast<int>(colors.size()) != n) {
    throw Error(ErrorCode::kSizeMismatch, "one color per ball vertex required");
  }
  const auto dist = Distances(adjacency, root);
  std::vector<std::uint64_t> labels(n);
  for (int v = 0; v < n; ++v) {
    if (dist[v] < 0 || dist[v] > radius) {
      throw Error(ErrorCode::kRadiusExceeded,
                  "vertex " + std::to_string(v) + " is not within distance " +
                      std::to_string(radius) + " of the root");
    }
    if (colors[v] < 1 || colors[v] > palette) {
      throw Error(ErrorCode::kInvalidArgument, "ball color outside palette");
    }
    labels[v] = (static_cast<std::uint64_t>(dist[v]) << 48) |
                (static_cast<std::uint64_t>(colors[v]) << 24) |
                static_cast<std::uint64_t>(adjacency[v].size());
  }
  auto form = canon::Canonicalize(adjacency, labels);

  RootedBall ball;
  ball.radius = radius;
  ball.palette = palette;
  ball.adjacency.resize(n);
  ball.colors.resize(n);
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[form.order[i]] = i;
  for (int i = 0; i < n; ++i) {
    const int v = form.order[i];
    ball.colors[i] = colors[v];
    for (int w : adjacency[v]) ball.adjacency[i].push_back(position[w]);
    std::sort(ball.adjacency[i].begin(), ball.adjacency[i].end());
  }

  BallCode& code = ball.code;
  code.reserve(4 + 2 * n + form.adjacency_bits.size());
  code.push_back(static_cast<char>(radius));
  code.push_back(static_cast<char>(palette));
  code.push_back(static_cast<char>(n));
  code.push_back(0);
  for (int i = 0; i < n; ++i) code.push_back(static_cast<char>(ball.adjacency[i].size()));
  for (auto byte : form.adjacency_bits) code.push_back(static_cast<char>(byte));
  for (int i = 0; i < n; ++i) code.push_back(static_cast<char>(ball.colors[i]));
  return ball;
}

RootedBall DecodeBall(const BallCode& code) {
  auto byte = [&](std::size_t i) {
    if (i >= code.size()) throw Error(ErrorCode::kParse, "truncated ball code");
    return static_cast<int>(static_cast<unsigned char>(code[i]));
  };
  const int radius = byte(0);
  const int palette = byte(1);
  const int n = byte(2);
  if (byte(3) != 0 || n < 1) throw Error(ErrorCode::kParse, "malformed ball code header");
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bits_offset = 4 + static_cast<std::size_t>(n);
  const std::size_t colors_offset = bits_offset + (pairs + 7) / 8;
  if (code.size() != colors_offset + n) throw Error(ErrorCode::kParse, "ball code length");

  std::vector<std::vector<int>> adjacency(n);
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      if (byte(bits_offset + k / 8) & (0x80 >> (k % 8))) {
        adjacency[i].push_back(j);
        adjacency[j].push_back(i);
      }
    }
  }
  std::vector<int> colors(n);
  for (int i = 0; i < n; ++i) colors[i] = byte(colors_offset + i);
  return CanonicalBall(adjacency, colors, 0, radius, palette);
}

std::string ToHex(const BallCode& code) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(code.size() * 2);
  for (unsigned char c : code) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 15]);
  }
  return out;
}

BallCode FromHex(const std::string& hex) {
  if (hex.size() % 2 != 0) throw Error(ErrorCode::kParse, "odd-length hex code");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw Error(ErrorCode::kParse, "bad hex digit");
  };
  BallCode out;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    out.push_back(static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  }
  return out;
}

BallExtractor::BallExtractor(const BoundedGraph& graph)
    : graph_(&graph), local_index_(graph.num_vertices(), -1) {}

LocalBall BallExtractor::Local(Vertex root, int radius) {
  LocalBall ball;
  ball.members.push_back(root);
  ball.distance.push_back(0);
  local_index_[root] = 0;
  for (std::size_t head = 0; head < ball.members.size(); ++head) {
    const Vertex u = ball.members[head];
    if (ball.distance[head] == radius) continue;
    for (Vertex w : graph_->neighbors(u)) {
      if (local_index_[w] < 0) {
        local_index_[w] = static_cast<int>(ball.members.size());
        ball.members.push_back(w);
        ball.distance.push_back(ball.distance[head] + 1);
      }
    }
  }
  ball.adjacency.resize(ball.members.size());
  for (std::size_t i = 0; i < ball.members.size(); ++i) {
    for (Vertex w : graph_->neighbors(ball.members[i])) {
      const int j = local_index_[w];
      if (j >= 0) ball.adjacency[i].push_back(j);
    }
  }
  for (Vertex v : ball.members) local_index_[v] = -1;
  return ball;
}

RootedBall BallExtractor::Extract(Vertex root, int radius, const VertexColoring* coloring) {
  LocalBall local = Local(root, radius);
  std::vector<int> colors(local.members.size(), 1);
  int palette = 1;
  if (coloring != nullptr) {
    palette = coloring->palette;
    for (std::size_t i = 0; i < local.members.size(); ++i) {
      colors[i] = coloring->colors[local.members[i]];
    }
  }
  return CanonicalBall(local.adjacency, colors, 0, radius, palette);
}

RootedBall ExtractBall(const BoundedGraph& graph, Vertex v, int radius,
                       const VertexColoring* coloring) {
  if (v < 0 || v >= graph.num_vertices()) throw Error(ErrorCode::kInvalidArgument, "root");
  if (coloring != nullptr &&
      static_cast<Vertex>(coloring->colors.size()) != graph.num_vertices()) {
    throw Error(ErrorCode::kSizeMismatch, "coloring length differs from vertex count");
  }
  BallExtractor extractor(graph);
  return extractor.Extract(v, radius, coloring);
}

std::int64_t MooreBound(int max_degree, int radius) {
  std::int64_t total = 1;
  std::int64_t layer = max_degree;
  for (int i = 0; i < radius; ++i) {
    total += layer;
    layer *= std::max(max_degree - 1, 0);
  }
  return total;
}

std::vector<RootedBall> EnumerateBalls(int radius, int max_degree, int palette, int max_size,
                                       std::int64_t max_candidates) {
  if (radius < 0 || max_degree < 0 || palette < 1 || max_size < 1) {
    throw Error(ErrorCode::kInvalidArgument, "enumeration parameters");
  }
  std::int64_t candidates = 0;
  std::set<BallCode> seen;
  std::vector<RootedBall> level;
  for (int c = 1; c <= palette; ++c) {
    std::vector<std::vector<int>> adjacency(1);
    std::vector<int> colors{c};
    level.push_back(CanonicalBall(adjacency, colors, 0, radius, palette));
    seen.insert(level.back().code);
  }
  std::vector<RootedBall> all = level;

  for (int size = 1; size < max_size && radius > 0; ++size) {
    std::vector<RootedBall> next;
    for (const RootedBall& ball : level) {
      const auto dist = Distances(ball.adjacency, 0);
      std::vector<int> eligible;
      for (int v = 0; v < size; ++v) {
        if (static_cast<int>(ball.adjacency[v].size()) < max_degree) eligible.push_back(v);
      }
      const int m = static_cast<int>(eligible.size());
      if (m > 30) throw Error(ErrorCode::kBudgetExceeded, "too many attachment points");
      for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        if (std::popcount(mask) > max_degree) continue;
        int nearest = radius;
        for (int i = 0; i < m; ++i) {
          if (mask & (1u << i)) nearest = std::min(nearest, dist[eligible[i]]);
        }
        if (nearest > radius - 1) continue;
        auto adjacency = ball.adjacency;
        adjacency.emplace_back();
        for (int i = 0; i < m; ++i) {
          if (mask & (1u << i)) {
            adjacency[eligible[i]].push_back(size);
            adjacency[size].push_back(eligible[i]);
          }
        }
        auto colors = ball.colors;
        colors.push_back(0);
        for (int c = 1; c <= palette; ++c) {
          if (++candidates > max_candidates) {
            throw Error(ErrorCode::kBudgetExceeded, "ball enumeration candidate budget");
          }
          colors.back() = c;
          RootedBall extended = CanonicalBall(adjacency, colors, 0, radius, palette);
          if (seen.insert(extended.code).second) next.push_back(std::move(extended));
        }
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::sort(all.begin(), all.end(),
            [](const RootedBall& a, const RootedBall& b) { return a.code < b.code; });
  return all;
}

}  // namespace lgc
