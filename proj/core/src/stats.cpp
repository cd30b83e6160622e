#include "lgc/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "lgc/error.hpp"
#include "lgc/parallel.hpp"
#include "lgc/rng.hpp"

namespace lgc {
namespace {

void CheckSameSpace(const BallDistribution& a, const BallDistribution& b) {
  if (a.radius != b.radius || a.palette != b.palette) {
    throw Error(ErrorCode::kSpaceMismatch,
                "distributions over U^{" + std::to_string(a.radius) + "," +
                    std::to_string(a.palette) + "} and U^{" + std::to_string(b.radius) + "," +
                    std::to_string(b.palette) + "}");
  }
}

void CheckColoring(const BoundedGraph& graph, const VertexColoring* coloring) {
  if (coloring == nullptr) return;
  if (static_cast<Vertex>(coloring->colors.size()) != graph.num_vertices()) {
    throw Error(ErrorCode::kSizeMismatch, "coloring length differs from vertex count");
  }
  coloring->Validate();
}

Rational ReduceFraction(__int128 num, __int128 den) {
  __int128 a = num < 0 ? -num : num;
  __int128 b = den;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();
  if (num > kMax || den > kMax) {
    throw Error(ErrorCode::kBudgetExceeded, "exact distance exceeds 64-bit rational range");
  }
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace

Rational BallDistribution::Probability(const BallCode& code) const {
  auto it = counts.find(code);
  if (it == counts.end() || total == 0) return Rational(0);
  return Rational(it->second, total);
}

void BallDistribution::Merge(const BallDistribution& other) {
  CheckSameSpace(*this, other);
  for (const auto& [code, count] : other.counts) counts[code] += count;
  total += other.total;
}

BallDistribution BallDistribution::Reduced() const {
  std::int64_t g = total;
  for (const auto& [code, count] : counts) g = std::gcd(g, count);
  BallDistribution out = *this;
  if (g > 1) {
    for (auto& [code, count] : out.counts) count /= g;
    out.total /= g;
  }
  return out;
}

bool BallDistribution::SameMeasure(const BallDistribution& other) const {
  if (radius != other.radius || palette != other.palette) return false;
  if (counts.size() != other.counts.size()) return false;
  auto it = other.counts.begin();
  for (const auto& [code, count] : counts) {
    if (it->first != code) return false;
    if (static_cast<__int128>(count) * other.total != static_cast<__int128>(it->second) * total) {
      return false;
    }
    ++it;
  }
  return true;
}

bool DistributionSet::Insert(BallDistribution dist, VertexColoring witness) {
  if (dist.radius != radius || dist.palette != palette) {
    throw Error(ErrorCode::kSpaceMismatch, "distribution does not belong to this set's space");
  }
  for (const auto& m : members) {
    if (m.SameMeasure(dist)) return false;
  }
  members.push_back(std::move(dist));
  witnesses.push_back(std::move(witness));
  return true;
}

BallDistribution ComputeBallDistribution(const BoundedGraph& graph, int radius,
                                         const VertexColoring* coloring, int threads) {
  CheckColoring(graph, coloring);
  const Vertex n = graph.num_vertices();
  const int palette = coloring ? coloring->palette : 1;
  std::vector<BallDistribution> partial(std::max(1, threads));
  ParallelChunks(n, threads, [&](int chunk, std::int64_t begin, std::int64_t end) {
    BallExtractor extractor(graph);
    BallDistribution& out = partial[chunk];
    out.radius = radius;
    out.palette = palette;
    for (std::int64_t v = begin; v < end; ++v) {
      ++out.counts[extractor.Extract(static_cast<Vertex>(v), radius, coloring).code];
      ++out.total;
    }
  });
  BallDistribution result;
  result.radius = radius;
  result.palette = palette;
  for (auto& p : partial) {
    if (p.total > 0) result.Merge(p);
  }
  return result;
}

BallDistribution SampleBallDistribution(const BoundedGraph& graph, int radius,
                                        const VertexColoring* coloring, std::int64_t samples,
                                        std::uint64_t seed) {
  CheckColoring(graph, coloring);
  if (samples < 1) throw Error(ErrorCode::kInvalidArgument, "sample count must be >= 1");
  if (graph.num_vertices() == 0) throw Error(ErrorCode::kInvalidArgument, "empty graph");
  BallDistribution out;
  out.radius = radius;
  out.palette = coloring ? coloring->palette : 1;
  out.mode = DistributionMode::kSampled;
  out.samples = samples;
  out.seed = seed;
  BallExtractor extractor(graph);
  Rng rng(seed);
  for (std::int64_t i = 0; i < samples; ++i) {
    const auto root = static_cast<Vertex>(rng.Below(graph.num_vertices()));
    ++out.counts[extractor.Extract(root, radius, coloring).code];
  }
  out.total = samples;
  return out;
}

Rational TvDistance(const BallDistribution& mu, const BallDistribution& nu) {
  CheckSameSpace(mu, nu);
  if (mu.total <= 0 || nu.total <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "distribution with no mass");
  }
  __int128 sum = 0;
  auto a = mu.counts.begin();
  auto b = nu.counts.begin();
  const __int128 t1 = mu.total;
  const __int128 t2 = nu.total;
  while (a != mu.counts.end() || b != nu.counts.end()) {
    if (b == nu.counts.end() || (a != mu.counts.end() && a->first < b->first)) {
      sum += a->second * t2;
      ++a;
    } else if (a == mu.counts.end() || b->first < a->first) {
      sum += b->second * t1;
      ++b;
    } else {
      __int128 diff = a->second * t2 - b->second * t1;
      sum += diff < 0 ? -diff : diff;
      ++a;
      ++b;
    }
  }
  return ReduceFraction(sum, 2 * t1 * t2);
}

Rational DirectedHausdorff(const DistributionSet& from, const DistributionSet& to) {
  if (from.members.empty() || to.members.empty()) {
    throw Error(ErrorCode::kEmptySet, "Hausdorff distance of an empty set");
  }
  Rational worst(0);
  for (const auto& a : from.members) {
    Rational best(1);
    for (const auto& b : to.members) {
      best = std::min(best, TvDistance(a, b));
      if (best.numerator() == 0) break;
    }
    worst = std::max(worst, best);
  }
  return worst;
}

Rational HausdorffDistance(const DistributionSet& a, const DistributionSet& b) {
  return std::max(DirectedHausdorff(a, b), DirectedHausdorff(b, a));
}

BallDistribution Marginalize(const BallDistribution& dist) {
  BallDistribution out = dist;
  out.palette = 1;
  out.counts.clear();
  for (const auto& [code, count] : dist.counts) {
    RootedBall ball = DecodeBall(code);
    std::vector<int> ones(ball.size(), 1);
    out.counts[CanonicalBall(ball.adjacency, ones, 0, ball.radius, 1).code] += count;
  }
  return out;
}

LocalStatistics::LocalStatistics(const BoundedGraph& graph, int radius, int palette)
    : graph_(&graph), radius_(radius), palette_(palette) {
  if (palette < 1 || palette > kMaxPalette) {
    throw Error(ErrorCode::kInvalidArgument, "palette out of range");
  }
  const Vertex n = graph.num_vertices();
  BallExtractor extractor(graph);
  balls_.reserve(n);
  shape_of_.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    balls_.push_back(extractor.Local(v, radius));
    const auto& ball = balls_.back();
    std::string key;
    for (const auto& row : ball.adjacency) {
      key.push_back(static_cast<char>(row.size()));
      for (int w : row) key.append(reinterpret_cast<const char*>(&w), sizeof(w));
    }
    auto [it, inserted] = shape_ids_.emplace(key, static_cast<int>(shape_size_.size()));
    if (inserted) {
      const int size = static_cast<int>(ball.members.size());
      shape_size_.push_back(size);
      double patterns = std::pow(static_cast<double>(palette), size);
      shape_memo_.emplace_back();
      if (patterns <= 65536.0) shape_memo_.back().assign(static_cast<std::size_t>(patterns), -1);
      sparse_memo_.emplace_back();
    }
    shape_of_[v] = it->second;
  }
}

int LocalStatistics::Intern(BallCode code) {
  auto [it, inserted] = code_ids_.emplace(code, static_cast<int>(codes_.size()));
  if (inserted) codes_.push_back(std::move(code));
  return it->second;
}

int LocalStatistics::CodeId(Vertex v, std::span<const int> colors) {
  const LocalBall& ball = balls_[v];
  const int shape = shape_of_[v];
  const int size = static_cast<int>(ball.members.size());
  const bool indexable = size * std::log2(static_cast<double>(palette_)) < 62.0;
  std::uint64_t pattern = 0;
  if (indexable) {
    for (int i = size - 1; i >= 0; --i) {
      pattern = pattern * palette_ + static_cast<std::uint64_t>(colors[ball.members[i]] - 1);
    }
    auto& dense = shape_memo_[shape];
    if (!dense.empty() && dense[pattern] >= 0) return dense[pattern];
    if (dense.empty()) {
      auto it = sparse_memo_[shape].find(pattern);
      if (it != sparse_memo_[shape].end()) return it->second;
    }
  }
  std::vector<int> local(size);
  for (int i = 0; i < size; ++i) local[i] = colors[ball.members[i]];
  const int id = Intern(CanonicalBall(ball.adjacency, local, 0, radius_, palette_).code);
  if (indexable) {
    auto& dense = shape_memo_[shape];
    if (!dense.empty()) {
      dense[pattern] = id;
    } else {
      sparse_memo_[shape].emplace(pattern, id);
    }
  }
  return id;
}

std::vector<std::pair<int, std::int64_t>> LocalStatistics::Histogram(std::span<const int> colors) {
  std::vector<int> ids(graph_->num_vertices());
  for (Vertex v = 0; v < graph_->num_vertices(); ++v) ids[v] = CodeId(v, colors);
  std::sort(ids.begin(), ids.end());
  std::vector<std::pair<int, std::int64_t>> hist;
  for (int id : ids) {
    if (hist.empty() || hist.back().first != id) {
      hist.emplace_back(id, 1);
    } else {
      ++hist.back().second;
    }
  }
  return hist;
}

BallDistribution LocalStatistics::FromHistogram(
    std::span<const std::pair<int, std::int64_t>> histogram) const {
  BallDistribution out;
  out.radius = radius_;
  out.palette = palette_;
  for (auto [id, count] : histogram) {
    out.counts[codes_[id]] += count;
    out.total += count;
  }
  return out;
}

BallDistribution LocalStatistics::Distribution(std::span<const int> colors) {
  return FromHistogram(Histogram(colors));
}

}  // namespace lgc
