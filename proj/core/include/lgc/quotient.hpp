#pragma once

#include <cstdint>
#include <string>

#include "lgc/graph.hpp"
#include "lgc/rational.hpp"
#include "lgc/stats.hpp"

namespace lgc {

// Work limits for the search-based quotient approximation. Budgets are
// nested when they share `steps` and temperatures and differ only in
// `random_colorings` and `restarts`; the found set then only grows.
struct SearchBudget {
  std::int64_t random_colorings = 64;
  int restarts = 4;
  int steps = 2000;
  double initial_temperature = 0.05;
  double final_temperature = 0.0005;
  std::uint64_t seed = 1;

  void Validate() const;
};

// k^n above this is refused by the exact enumerator.
inline constexpr std::int64_t kExactColoringLimit = std::int64_t{1} << 20;

bool ExactQuotientFeasible(const BoundedGraph& graph, int palette);

// {P_{G,r}[c] : all k^n colorings}, one stored witness per distinct measure.
DistributionSet QuotientSetExact(const BoundedGraph& graph, int radius, int palette);

// Lower approximation from seeded structured colorings, annealing restarts
// that push away from the current set, and random colorings. Every member
// is realized by its stored witness.
DistributionSet QuotientSetSearch(const BoundedGraph& graph, int radius, int palette,
                                  const SearchBudget& budget);

// Coloring of `graph` whose distribution is close to `target`, found by
// annealing from a color-transport start.
VertexColoring BestResponse(const BoundedGraph& graph, const BallDistribution& target,
                            const SearchBudget& budget, std::uint64_t stream = 0);

struct HausdorffEstimate {
  Rational value;
  Rational forward;   // directed, from the first graph's set
  Rational backward;  // directed, from the second graph's set
  bool certified = false;
  DistributionSet first;
  DistributionSet second;
};

// Exact (certified) when both quotient sets are enumerable, otherwise the
// distance between search approximations enlarged by best responses.
HausdorffEstimate EstimateHausdorff(const BoundedGraph& first, const BoundedGraph& second,
                                    int radius, int palette, const SearchBudget& budget);

struct SeparationCertificate {
  double spectral_gap = 0.0;
  int degree = 0;
  double window_low = 0.4;
  double window_high = 0.6;
  double min_balance_product = 0.24;
  double bound = 0.0;
  std::string witness;
};

// Lower bound on the directed distance from the component-indicator
// distribution of G+G to Q_{G,1,2}. Responses whose class-1 root fraction
// leaves [0.4, 0.6] lose 0.1 on the root-color marginal; balanced responses
// cut at least gap*a(1-a)*n/2 edges, so at least a gap*a(1-a)/d fraction of
// 1-balls is bichromatic while the witness has none.
SeparationCertificate CertifiedSeparationBound(const BoundedGraph& graph, double spectral_gap);

// Colors the first `first_size` vertices 1 and the rest 2.
VertexColoring SplitColoring(Vertex first_size, Vertex total);

}  // namespace lgc
