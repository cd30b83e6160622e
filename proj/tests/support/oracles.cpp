#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

#include "lgc/testing.hpp"

namespace lgc::testing_support {

PlainBall ExtractPlain(const BoundedGraph& g, Vertex v, int radius, const std::vector<int>* colors) {
  std::map<Vertex, int> index;
  std::vector<Vertex> order{v};
  std::vector<int> dist{0};
  index[v] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    if (dist[head] == radius) continue;
    for (Vertex w : g.neighbors(order[head])) {
      if (!index.count(w)) {
        index[w] = static_cast<int>(order.size());
        order.push_back(w);
        dist.push_back(dist[head] + 1);
      }
    }
  }
  PlainBall ball;
  ball.adjacency.resize(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = 0; j < order.size(); ++j) {
      if (i != j && g.HasEdge(order[i], order[j])) ball.adjacency[i].push_back(static_cast<int>(j));
    }
    ball.colors.push_back(colors ? (*colors)[order[i]] : 1);
  }
  return ball;
}

bool RootedIsomorphic(const PlainBall& a, const PlainBall& b) {
  const int n = static_cast<int>(a.adjacency.size());
  if (n != static_cast<int>(b.adjacency.size())) return false;
  auto adjacent = [](const PlainBall& x, int u, int v) {
    const auto& row = x.adjacency[u];
    return std::find(row.begin(), row.end(), v) != row.end();
  };
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  // Map a's vertices in the order root, then the rest by index.
  std::vector<int> sequence{a.root};
  for (int v = 0; v < n; ++v) {
    if (v != a.root) sequence.push_back(v);
  }
  std::function<bool(int)> extend = [&](int depth) -> bool {
    if (depth == n) return true;
    const int u = sequence[depth];
    for (int target = 0; target < n; ++target) {
      if (used[target]) continue;
      if ((u == a.root) != (target == b.root)) continue;
      if (a.colors[u] != b.colors[target]) continue;
      if (a.adjacency[u].size() != b.adjacency[target].size()) continue;
      bool consistent = true;
      for (int prev = 0; prev < depth && consistent; ++prev) {
        const int w = sequence[prev];
        consistent = adjacent(a, u, w) == adjacent(b, target, map[w]);
      }
      if (!consistent) continue;
      map[u] = target;
      used[target] = 1;
      if (extend(depth + 1)) return true;
      used[target] = 0;
      map[u] = -1;
    }
    return false;
  };
  return extend(0);
}

int BruteForceClassifier::Classify(const PlainBall& ball) {
  for (std::size_t i = 0; i < representatives_.size(); ++i) {
    if (RootedIsomorphic(ball, representatives_[i])) return static_cast<int>(i);
  }
  representatives_.push_back(ball);
  return static_cast<int>(representatives_.size()) - 1;
}

std::vector<ClassHistogram> BruteForceQuotient(const BoundedGraph& g, int radius, int palette,
                                               BruteForceClassifier& classifier) {
  const int n = g.num_vertices();
  std::vector<int> colors(n, 1);
  std::set<ClassHistogram> distinct;
  while (true) {
    ClassHistogram hist;
    for (Vertex v = 0; v < n; ++v) ++hist[classifier.Classify(ExtractPlain(g, v, radius, &colors))];
    distinct.insert(hist);
    int i = 0;
    while (i < n && colors[i] == palette) colors[i++] = 1;
    if (i == n) break;
    ++colors[i];
  }
  return {distinct.begin(), distinct.end()};
}

double HistogramTv(const ClassHistogram& a, int total_a, const ClassHistogram& b, int total_b) {
  std::set<int> keys;
  for (auto& [k, v] : a) keys.insert(k);
  for (auto& [k, v] : b) keys.insert(k);
  double sum = 0.0;
  for (int k : keys) {
    double pa = a.count(k) ? static_cast<double>(a.at(k)) / total_a : 0.0;
    double pb = b.count(k) ? static_cast<double>(b.at(k)) / total_b : 0.0;
    sum += std::abs(pa - pb);
  }
  return sum / 2.0;
}

double BruteForceHausdorff(const std::vector<ClassHistogram>& a, int total_a,
                           const std::vector<ClassHistogram>& b, int total_b) {
  auto directed = [](const std::vector<ClassHistogram>& x, int tx,
                     const std::vector<ClassHistogram>& y, int ty) {
    double worst = 0.0;
    for (const auto& p : x) {
      double best = 1.0;
      for (const auto& q : y) best = std::min(best, HistogramTv(p, tx, q, ty));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, total_a, b, total_b), directed(b, total_b, a, total_a));
}

PlainBall Relabel(const PlainBall& b, Rng& rng) {
  const int n = static_cast<int>(b.adjacency.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  rng.Shuffle(std::span<int>(perm));
  PlainBall out;
  out.adjacency.resize(n);
  out.colors.resize(n);
  out.root = perm[b.root];
  for (int v = 0; v < n; ++v) {
    out.colors[perm[v]] = b.colors[v];
    for (int w : b.adjacency[v]) out.adjacency[perm[v]].push_back(perm[w]);
  }
  return out;
}

// All labeled radius-1 balls with root 0, m <= max_degree neighbors, any
// edges among the neighbors and any coloring.
std::vector<PlainBall> AllLabeledRadiusOneBalls(int max_degree, int palette) {
  std::vector<PlainBall> out;
  for (int m = 0; m <= max_degree; ++m) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 1; i <= m; ++i) {
      for (int j = i + 1; j <= m; ++j) slots.emplace_back(i, j);
    }
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
      PlainBall base;
      base.adjacency.resize(m + 1);
      for (int i = 1; i <= m; ++i) {
        base.adjacency[0].push_back(i);
        base.adjacency[i].push_back(0);
      }
      bool ok = true;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if (mask & (1u << s)) {
          base.adjacency[slots[s].first].push_back(slots[s].second);
          base.adjacency[slots[s].second].push_back(slots[s].first);
        }
      }
      for (const auto& row : base.adjacency) ok &= static_cast<int>(row.size()) <= max_degree;
      if (!ok) continue;
      int total = 1;
      for (int i = 0; i <= m; ++i) total *= palette;
      for (int code = 0; code < total; ++code) {
        PlainBall b = base;
        b.colors.resize(m + 1);
        int x = code;
        for (int i = 0; i <= m; ++i, x /= palette) b.colors[i] = x % palette + 1;
        out.push_back(b);
      }
    }
  }
  return out;
}

// Exhaustive over all 2-colorings.
bool BruteForceDisconnected(const BoundedGraph& g, double beta) {
  const Vertex n = g.num_vertices();
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    VertexColoring c{2, std::vector<int>(n, 2)};
    for (Vertex v = 0; v < n; ++v) {
      if (mask >> v & 1) c.colors[v] = 1;
    }
    if (IsDisconnectionWitness(g, c, beta)) return true;
  }
  return false;
}

}  // namespace lgc::testing_support
