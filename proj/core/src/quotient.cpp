#include "lgc/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "lgc/error.hpp"
#include "lgc/rng.hpp"

namespace lgc {
namespace {

using Histogram = std::vector<std::pair<int, std::int64_t>>;

constexpr std::uint64_t kAnnealStream = 0x616e6e65;
constexpr std::uint64_t kRandomStream = 0x72616e64;
constexpr std::uint64_t kResponseStream = 0x72657370;
constexpr int kBatch = 4;
constexpr int kMaxComponentSeeds = 16;

struct SparseTarget {
  Histogram entries;
  std::int64_t total = 1;
};

SparseTarget ToSparse(LocalStatistics& engine, const BallDistribution& dist) {
  SparseTarget target;
  target.total = dist.total;
  for (const auto& [code, count] : dist.counts) {
    target.entries.emplace_back(engine.Intern(code), count);
  }
  return target;
}

// Dense histogram of the current coloring, updated one recoloring at a time.
class ColoringState {
 public:
  ColoringState(LocalStatistics& engine, std::vector<int> colors)
      : engine_(&engine), colors_(std::move(colors)), ids_(colors_.size()) {
    for (Vertex v = 0; v < static_cast<Vertex>(colors_.size()); ++v) {
      ids_[v] = engine_->CodeId(v, colors_);
      Add(ids_[v], 1);
    }
  }

  void Recolor(Vertex v, int color) {
    colors_[v] = color;
    for (Vertex u : engine_->Dependents(v)) {
      Add(ids_[u], -1);
      ids_[u] = engine_->CodeId(u, colors_);
      Add(ids_[u], 1);
    }
  }

  int color(Vertex v) const { return colors_[v]; }
  const std::vector<int>& colors() const { return colors_; }

  double Tv(const SparseTarget& target) const {
    const double n = static_cast<double>(colors_.size());
    const double t = static_cast<double>(target.total);
    double l1 = 0.0;
    double covered = 0.0;
    for (const auto& [id, m] : target.entries) {
      const double h = id < static_cast<int>(counts_.size()) ? counts_[id] / n : 0.0;
      l1 += std::abs(h - m / t);
      covered += h;
    }
    return 0.5 * (l1 + std::max(0.0, 1.0 - covered));
  }

  double MinTv(const std::vector<SparseTarget>& targets) const {
    double best = 1.0;
    for (const auto& t : targets) best = std::min(best, Tv(t));
    return best;
  }

 private:
  void Add(int id, int delta) {
    if (id >= static_cast<int>(counts_.size())) counts_.resize(id + 1, 0);
    counts_[id] += delta;
  }

  LocalStatistics* engine_;
  std::vector<int> colors_;
  std::vector<int> ids_;
  std::vector<std::int64_t> counts_;
};

// Simulated annealing on single-vertex recolorings. `score` is maximized;
// returns the best coloring seen (first found on ties).
template <typename Score>
std::vector<int> Anneal(LocalStatistics& engine, std::vector<int> start, const SearchBudget& budget,
                        Rng& rng, Score&& score) {
  const int k = engine.palette();
  const Vertex n = static_cast<Vertex>(start.size());
  ColoringState state(engine, std::move(start));
  double current = score(state);
  double best = current;
  std::vector<int> best_colors = state.colors();
  if (k < 2 || n == 0) return best_colors;
  const double ratio = budget.final_temperature / budget.initial_temperature;
  for (int step = 0; step < budget.steps; ++step) {
    const double frac = budget.steps > 1 ? static_cast<double>(step) / (budget.steps - 1) : 1.0;
    const double temperature = budget.initial_temperature * std::pow(ratio, frac);
    const Vertex v = static_cast<Vertex>(rng.Below(n));
    const int old_color = state.color(v);
    int color = 1 + static_cast<int>(rng.Below(k - 1));
    if (color >= old_color) ++color;
    state.Recolor(v, color);
    const double next = score(state);
    const double delta = next - current;
    const double draw = rng.Uniform();
    if (delta >= 0.0 || draw < std::exp(delta / temperature)) {
      current = next;
      if (current > best) {
        best = current;
        best_colors = state.colors();
      }
    } else {
      state.Recolor(v, old_color);
    }
  }
  return best_colors;
}

// BFS order over all components, components taken by least vertex.
std::vector<Vertex> BfsOrder(const BoundedGraph& graph, std::vector<int>* layer = nullptr) {
  const Vertex n = graph.num_vertices();
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<int> depth(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (depth[s] >= 0) continue;
    depth[s] = 0;
    std::size_t head = order.size();
    order.push_back(s);
    while (head < order.size()) {
      const Vertex v = order[head++];
      for (Vertex w : graph.neighbors(v)) {
        if (depth[w] < 0) {
          depth[w] = depth[v] + 1;
          order.push_back(w);
        }
      }
    }
  }
  if (layer != nullptr) *layer = std::move(depth);
  return order;
}

// Colors BFS positions in contiguous blocks with the given cumulative
// fractions (last entry 1).
std::vector<int> BlockColoring(std::span<const Vertex> order, std::span<const double> cumulative) {
  const std::size_t n = order.size();
  std::vector<int> colors(n, 1);
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (c + 1 < cumulative.size() &&
           static_cast<double>(i) >= std::round(cumulative[c] * static_cast<double>(n))) {
      ++c;
    }
    colors[order[i]] = static_cast<int>(c) + 1;
  }
  return colors;
}

std::vector<std::vector<int>> StructuredSeeds(const BoundedGraph& graph, int palette) {
  const Vertex n = graph.num_vertices();
  std::vector<std::vector<int>> seeds;
  for (int c = 1; c <= palette; ++c) seeds.emplace_back(n, c);
  if (palette < 2 || n == 0) return seeds;

  const std::vector<Vertex> labels = graph.ComponentLabels();
  const int components = graph.NumComponents();
  if (components > 1) {
    std::vector<int> cycle(n);
    for (Vertex v = 0; v < n; ++v) cycle[v] = labels[v] % palette + 1;
    seeds.push_back(std::move(cycle));
    for (int comp = 0; comp < std::min(components, kMaxComponentSeeds); ++comp) {
      std::vector<int> single(n, 1);
      for (Vertex v = 0; v < n; ++v) {
        if (labels[v] == comp) single[v] = 2;
      }
      seeds.push_back(std::move(single));
    }
  }

  std::vector<int> depth;
  const std::vector<Vertex> order = BfsOrder(graph, &depth);
  std::vector<int> layers(n);
  for (Vertex v = 0; v < n; ++v) layers[v] = depth[v] % palette + 1;
  seeds.push_back(std::move(layers));

  std::vector<double> even;
  for (int c = 1; c <= palette; ++c) even.push_back(static_cast<double>(c) / palette);
  seeds.push_back(BlockColoring(order, even));
  if (palette == 2) {
    for (double f : {0.25, 0.75}) {
      const double cuts[] = {f, 1.0};
      seeds.push_back(BlockColoring(order, cuts));
    }
  }
  return seeds;
}

// Deterministic order on distributions: by total then by counts.
bool DistributionLess(const BallDistribution& a, const BallDistribution& b) {
  if (a.total != b.total) return a.total < b.total;
  return a.counts < b.counts;
}

void SortSet(DistributionSet& set) {
  std::vector<std::size_t> idx(set.members.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    return DistributionLess(set.members[x], set.members[y]);
  });
  DistributionSet sorted{set.radius, set.palette, set.exact, {}, {}};
  for (std::size_t i : idx) {
    sorted.members.push_back(std::move(set.members[i]));
    if (i < set.witnesses.size()) sorted.witnesses.push_back(std::move(set.witnesses[i]));
  }
  set = std::move(sorted);
}

VertexColoring Witness(int palette, std::vector<int> colors) {
  return VertexColoring{palette, std::move(colors)};
}

void CheckPalette(int palette) {
  if (palette < 1 || palette > kMaxPalette) {
    throw Error(ErrorCode::kInvalidArgument, "palette must be in 1.." + std::to_string(kMaxPalette));
  }
}

std::int64_t ColoringCount(Vertex n, int palette) {
  std::int64_t total = 1;
  for (Vertex i = 0; i < n; ++i) {
    if (total > kExactColoringLimit / palette) return kExactColoringLimit + 1;
    total *= palette;
  }
  return total;
}

}  // namespace

void SearchBudget::Validate() const {
  if (random_colorings < 1 || restarts < 1 || steps < 1) {
    throw Error(ErrorCode::kInvalidArgument, "search budget counts must be at least 1");
  }
  if (!(initial_temperature > 0.0) || !(final_temperature > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "annealing temperatures must be positive");
  }
}

bool ExactQuotientFeasible(const BoundedGraph& graph, int palette) {
  return ColoringCount(graph.num_vertices(), palette) <= kExactColoringLimit;
}

DistributionSet QuotientSetExact(const BoundedGraph& graph, int radius, int palette) {
  CheckPalette(palette);
  if (!ExactQuotientFeasible(graph, palette)) {
    throw Error(ErrorCode::kBudgetExceeded,
                "k^n exceeds the exact enumeration limit of 2^20 colorings");
  }
  const Vertex n = graph.num_vertices();
  LocalStatistics engine(graph, radius, palette);
  std::map<Histogram, std::vector<int>> seen;
  std::vector<int> colors(n, 1);
  while (true) {
    seen.try_emplace(engine.Histogram(colors), colors);
    Vertex i = 0;
    while (i < n && colors[i] == palette) colors[i++] = 1;
    if (i == n) break;
    ++colors[i];
  }
  DistributionSet set{radius, palette, true, {}, {}};
  for (auto& [hist, witness] : seen) {
    set.members.push_back(engine.FromHistogram(hist));
    set.witnesses.push_back(Witness(palette, std::move(witness)));
  }
  SortSet(set);
  return set;
}

DistributionSet QuotientSetSearch(const BoundedGraph& graph, int radius, int palette,
                                  const SearchBudget& budget) {
  CheckPalette(palette);
  budget.Validate();
  const Vertex n = graph.num_vertices();
  DistributionSet set{radius, palette, false, {}, {}};
  LocalStatistics engine(graph, radius, palette);
  auto add = [&](std::vector<int> colors) {
    BallDistribution dist = engine.Distribution(colors);
    set.Insert(std::move(dist), Witness(palette, std::move(colors)));
  };

  for (auto& seed : StructuredSeeds(graph, palette)) add(std::move(seed));

  if (palette >= 2 && n > 0) {
    for (int batch_start = 0; batch_start < budget.restarts; batch_start += kBatch) {
      const int batch_end = std::min(budget.restarts, batch_start + kBatch);
      std::vector<SparseTarget> snapshot;
      for (const auto& m : set.members) snapshot.push_back(ToSparse(engine, m));
      std::vector<std::vector<int>> found;
      for (int restart = batch_start; restart < batch_end; ++restart) {
        Rng rng(DeriveSeed(budget.seed, kAnnealStream, static_cast<std::uint64_t>(restart)));
        std::vector<int> start(n);
        for (auto& c : start) c = 1 + static_cast<int>(rng.Below(palette));
        found.push_back(Anneal(engine, std::move(start), budget, rng,
                               [&](const ColoringState& s) { return s.MinTv(snapshot); }));
      }
      std::vector<std::pair<BallDistribution, std::vector<int>>> results;
      for (auto& colors : found) results.emplace_back(engine.Distribution(colors), std::move(colors));
      std::stable_sort(results.begin(), results.end(), [](const auto& a, const auto& b) {
        return DistributionLess(a.first, b.first);
      });
      for (auto& [dist, colors] : results) set.Insert(std::move(dist), Witness(palette, std::move(colors)));
    }
  }

  for (std::int64_t i = 0; i < budget.random_colorings; ++i) {
    Rng rng(DeriveSeed(budget.seed, kRandomStream, static_cast<std::uint64_t>(i)));
    std::vector<int> colors(n);
    for (auto& c : colors) c = 1 + static_cast<int>(rng.Below(palette));
    add(std::move(colors));
  }
  SortSet(set);
  return set;
}

VertexColoring BestResponse(const BoundedGraph& graph, const BallDistribution& target,
                            const SearchBudget& budget, std::uint64_t stream) {
  CheckPalette(target.palette);
  budget.Validate();
  const int palette = target.palette;
  LocalStatistics engine(graph, target.radius, palette);
  const SparseTarget sparse = ToSparse(engine, target);

  std::vector<double> marginal(palette, 0.0);
  for (const auto& [code, count] : target.counts) {
    const RootedBall ball = DecodeBall(code);
    marginal[ball.colors[0] - 1] += static_cast<double>(count) / static_cast<double>(target.total);
  }
  std::vector<double> cumulative(palette);
  std::partial_sum(marginal.begin(), marginal.end(), cumulative.begin());
  cumulative.back() = 1.0;
  const std::vector<Vertex> order = BfsOrder(graph);
  std::vector<int> start = BlockColoring(order, cumulative);

  Rng rng(DeriveSeed(budget.seed, kResponseStream, stream));
  std::vector<int> best = Anneal(engine, std::move(start), budget, rng,
                                 [&](const ColoringState& s) { return -s.Tv(sparse); });
  return Witness(palette, std::move(best));
}

HausdorffEstimate EstimateHausdorff(const BoundedGraph& first, const BoundedGraph& second,
                                    int radius, int palette, const SearchBudget& budget) {
  HausdorffEstimate out;
  if (ExactQuotientFeasible(first, palette) && ExactQuotientFeasible(second, palette)) {
    out.first = QuotientSetExact(first, radius, palette);
    out.second = QuotientSetExact(second, radius, palette);
    out.certified = true;
  } else {
    out.first = ExactQuotientFeasible(first, palette)
                    ? QuotientSetExact(first, radius, palette)
                    : QuotientSetSearch(first, radius, palette, budget);
    out.second = ExactQuotientFeasible(second, palette)
                     ? QuotientSetExact(second, radius, palette)
                     : QuotientSetSearch(second, radius, palette, budget);
    const DistributionSet a0 = out.first;
    const DistributionSet b0 = out.second;
    if (!b0.exact) {
      for (std::size_t i = 0; i < a0.size(); ++i) {
        VertexColoring c = BestResponse(second, a0.members[i], budget, 2 * i);
        BallDistribution d = ComputeBallDistribution(second, radius, &c);
        out.second.Insert(std::move(d), std::move(c));
      }
    }
    if (!a0.exact) {
      for (std::size_t i = 0; i < b0.size(); ++i) {
        VertexColoring c = BestResponse(first, b0.members[i], budget, 2 * i + 1);
        BallDistribution d = ComputeBallDistribution(first, radius, &c);
        out.first.Insert(std::move(d), std::move(c));
      }
    }
    out.first.exact = a0.exact;
    out.second.exact = b0.exact;
    SortSet(out.first);
    SortSet(out.second);
  }
  out.forward = DirectedHausdorff(out.first, out.second);
  out.backward = DirectedHausdorff(out.second, out.first);
  out.value = std::max(out.forward, out.backward);
  return out;
}

SeparationCertificate CertifiedSeparationBound(const BoundedGraph& graph, double spectral_gap) {
  const int d = graph.ObservedMaxDegree();
  if (graph.num_vertices() == 0 || d == 0 || !graph.IsRegular(d)) {
    throw Error(ErrorCode::kNotRegular, "separation bound needs a d-regular graph with d >= 1");
  }
  if (graph.NumComponents() != 1) {
    throw Error(ErrorCode::kDisconnected, "separation bound needs a connected graph");
  }
  if (!(spectral_gap >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "spectral gap must be non-negative");
  }
  SeparationCertificate cert;
  cert.spectral_gap = spectral_gap;
  cert.degree = d;
  cert.bound = std::min(0.1, cert.min_balance_product * spectral_gap / d);
  std::ostringstream w;
  w << "component indicator of G+G: first " << graph.num_vertices() << " vertices color 1, next "
    << graph.num_vertices() << " color 2";
  cert.witness = w.str();
  return cert;
}

VertexColoring SplitColoring(Vertex first_size, Vertex total) {
  if (first_size < 0 || first_size > total) {
    throw Error(ErrorCode::kInvalidArgument, "split point outside 0..total");
  }
  std::vector<int> colors(total, 2);
  std::fill(colors.begin(), colors.begin() + first_size, 1);
  return VertexColoring{2, std::move(colors)};
}

}  // namespace lgc
