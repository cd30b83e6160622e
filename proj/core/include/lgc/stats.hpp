#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "lgc/balls.hpp"
#include "lgc/graph.hpp"
#include "lgc/rational.hpp"

namespace lgc {

enum class DistributionMode { kExact, kSampled };

// Probability distribution over canonical balls, kept as integer counts over
// a common total so that every probability is an exact rational. Sampled
// distributions carry their sample count and seed as provenance.
struct BallDistribution {
  int radius = 0;
  int palette = 1;
  std::map<BallCode, std::int64_t> counts;
  std::int64_t total = 0;
  DistributionMode mode = DistributionMode::kExact;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;

  Rational Probability(const BallCode& code) const;

  // Adds another partial histogram over the same space. Associative and
  // commutative.
  void Merge(const BallDistribution& other);

  // Same counts divided by their common gcd with the total; two
  // distributions describe the same measure iff their reduced forms are
  // identical.
  BallDistribution Reduced() const;
  bool SameMeasure(const BallDistribution& other) const;

  // Probability mass on balls whose decoded form satisfies pred.
  template <typename Pred>
  Rational MassWhere(Pred&& pred) const {
    std::int64_t hit = 0;
    for (const auto& [code, count] : counts) {
      if (pred(DecodeBall(code))) hit += count;
    }
    return Rational(hit, total);
  }
};

// A finite set of distributions over the same space, optionally with the
// coloring that realizes each member.
struct DistributionSet {
  int radius = 0;
  int palette = 1;
  bool exact = false;
  std::vector<BallDistribution> members;
  std::vector<VertexColoring> witnesses;

  // Adds `dist` unless an equal measure is present. Returns true if added.
  bool Insert(BallDistribution dist, VertexColoring witness = {});
  std::size_t size() const { return members.size(); }
};

// Exact P_{G,r}[c]: one ball per vertex, weight 1/n each.
BallDistribution ComputeBallDistribution(const BoundedGraph& graph, int radius,
                                         const VertexColoring* coloring = nullptr,
                                         int threads = 1);

// Empirical distribution of `samples` uniform-root extractions.
BallDistribution SampleBallDistribution(const BoundedGraph& graph, int radius,
                                        const VertexColoring* coloring, std::int64_t samples,
                                        std::uint64_t seed);

// Total variation distance, computed as half the L1 distance; on a finite
// space this equals the supremum over events.
Rational TvDistance(const BallDistribution& mu, const BallDistribution& nu);

// max over a in from of min over b in to of tv(a, b).
Rational DirectedHausdorff(const DistributionSet& from, const DistributionSet& to);
Rational HausdorffDistance(const DistributionSet& a, const DistributionSet& b);

// Forgets colors: re-keys every ball with palette 1.
BallDistribution Marginalize(const BallDistribution& dist);

// Cached colored-ball evaluation for many colorings of one graph. Balls are
// extracted once; canonical codes are memoized per (ball shape, color
// pattern) and interned as small integer ids.
class LocalStatistics {
 public:
  LocalStatistics(const BoundedGraph& graph, int radius, int palette);

  const BoundedGraph& graph() const { return *graph_; }
  int radius() const { return radius_; }
  int palette() const { return palette_; }

  // Id of the colored ball at v under `colors` (length n, values 1..palette).
  int CodeId(Vertex v, std::span<const int> colors);
  const BallCode& Code(int id) const { return codes_[id]; }
  // Id for an arbitrary code (for example one from another graph).
  int Intern(BallCode code);
  int NumCodes() const { return static_cast<int>(codes_.size()); }

  // Vertices whose ball contains v.
  std::span<const Vertex> Dependents(Vertex v) const { return balls_[v].members; }

  // Sorted (id, count) pairs for a full coloring.
  std::vector<std::pair<int, std::int64_t>> Histogram(std::span<const int> colors);
  BallDistribution Distribution(std::span<const int> colors);
  BallDistribution FromHistogram(std::span<const std::pair<int, std::int64_t>> histogram) const;

 private:
  const BoundedGraph* graph_;
  int radius_;
  int palette_;
  std::vector<LocalBall> balls_;
  std::vector<int> shape_of_;
  std::vector<std::vector<int>> shape_memo_;  // empty when the pattern space is too large
  std::vector<int> shape_size_;
  std::unordered_map<std::string, int> shape_ids_;
  std::vector<BallCode> codes_;
  std::unordered_map<BallCode, int> code_ids_;
  std::vector<std::unordered_map<std::uint64_t, int>> sparse_memo_;
};

}  // namespace lgc
