#include "lgc/hyperfinite.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>

#include "lgc/error.hpp"
#include "lgc/parallel.hpp"
#include "lgc/rng.hpp"

namespace lgc {
namespace {

constexpr std::uint64_t kCarveStream = 0x63617276;

class TauSearch {
 public:
  TauSearch(const BoundedGraph& graph, int q, std::int64_t max_nodes)
      : n_(graph.num_vertices()), q_(q), max_nodes_(max_nodes), adj_(n_, 0) {
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex w : graph.neighbors(v)) adj_[v] |= Bit(w);
    }
    const int d = graph.ObservedMaxDegree();
    split_ = q_ * std::max(d - 1, 0) + 1;
  }

  void Seed(std::uint32_t mask) {
    best_mask_ = mask;
    best_size_ = std::popcount(mask);
  }

  std::uint32_t Run() {
    Recurse(0, 0, 0);
    return best_mask_;
  }

 private:
  static std::uint32_t Bit(Vertex v) { return std::uint32_t{1} << v; }

  // Component containing `start` inside `alive`.
  std::uint32_t Component(std::uint32_t alive, Vertex start) const {
    std::uint32_t seen = Bit(start);
    std::uint32_t frontier = seen;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f != 0; f &= f - 1) next |= adj_[std::countr_zero(f)];
      next &= alive & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  void Recurse(std::uint32_t deleted, std::uint32_t kept, int size) {
    if (++nodes_ > max_nodes_) {
      throw Error(ErrorCode::kBudgetExceeded, "exact tau search exceeded its node budget");
    }
    const std::uint32_t all = n_ == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n_) - 1;
    std::uint32_t alive = all & ~deleted;
    std::uint32_t rest = alive;
    std::uint32_t target = 0;
    int target_size = 0;
    int bound = size;
    while (rest != 0) {
      const std::uint32_t comp = Component(alive, std::countr_zero(rest));
      rest &= ~comp;
      const int s = std::popcount(comp);
      if (s > q_) {
        bound += (s - q_ + split_ - 1) / split_;
        if (s > target_size) {
          target_size = s;
          target = comp;
        }
      }
    }
    if (target == 0) {
      if (size < best_size_) {
        best_size_ = size;
        best_mask_ = deleted;
      }
      return;
    }
    if (bound >= best_size_) return;

    // A connected (q+1)-subset of the target must lose a vertex; grow it
    // from kept vertices first so that fewer branches remain.
    const std::uint32_t kept_in = target & kept;
    const Vertex start = std::countr_zero(kept_in != 0 ? kept_in : target);
    std::deque<Vertex> queue = {start};
    std::uint32_t queued = Bit(start);
    std::vector<Vertex> picked;
    while (!queue.empty() && static_cast<int>(picked.size()) < q_ + 1) {
      const Vertex v = queue.front();
      queue.pop_front();
      picked.push_back(v);
      for (std::uint32_t f = adj_[v] & target & ~queued; f != 0; f &= f - 1) {
        const Vertex w = std::countr_zero(f);
        queued |= Bit(w);
        if (kept & Bit(w)) {
          queue.push_front(w);
        } else {
          queue.push_back(w);
        }
      }
    }
    std::uint32_t now_kept = kept;
    for (Vertex v : picked) {
      if (kept & Bit(v)) continue;
      Recurse(deleted | Bit(v), now_kept, size + 1);
      now_kept |= Bit(v);
      if (size + 1 >= best_size_) return;
    }
  }

  Vertex n_;
  int q_;
  int split_ = 1;
  std::int64_t max_nodes_;
  std::int64_t nodes_ = 0;
  std::vector<std::uint32_t> adj_;
  std::uint32_t best_mask_ = 0;
  int best_size_ = 0;
};

struct Dsu {
  explicit Dsu(Vertex n) : parent(n), size(n, 1) { std::iota(parent.begin(), parent.end(), 0); }
  Vertex Find(Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void Unite(Vertex a, Vertex b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }
  std::vector<Vertex> parent;
  std::vector<int> size;
};

std::vector<Vertex> CarvePass(const BoundedGraph& graph, int q, std::span<const Vertex> order) {
  const Vertex n = graph.num_vertices();
  enum : char { kFree, kTaken, kDeleted };
  std::vector<char> state(n, kFree);
  Dsu dsu(n);
  std::vector<Vertex> queue;
  std::vector<char> queued(n, 0);
  for (Vertex s : order) {
    if (state[s] != kFree) continue;
    if (q == 0) {
      state[s] = kDeleted;
      continue;
    }
    queue.assign(1, s);
    queued[s] = 1;
    std::vector<Vertex> taken;
    std::size_t head = 0;
    while (head < queue.size() && static_cast<int>(taken.size()) < q) {
      const Vertex v = queue[head++];
      state[v] = kTaken;
      if (!taken.empty()) dsu.Unite(taken[0], v);
      taken.push_back(v);
      for (Vertex w : graph.neighbors(v)) {
        if (state[w] == kFree && !queued[w]) {
          queued[w] = 1;
          queue.push_back(w);
        }
      }
    }
    for (std::size_t i = head; i < queue.size(); ++i) queued[queue[i]] = 0;
    for (Vertex v : taken) {
      for (Vertex w : graph.neighbors(v)) {
        if (state[w] == kFree) state[w] = kDeleted;
      }
    }
  }

  // Re-absorb deleted vertices whose neighboring pieces stay small together.
  bool changed = true;
  std::vector<Vertex> roots;
  while (changed) {
    changed = false;
    for (Vertex x = 0; x < n; ++x) {
      if (state[x] != kDeleted) continue;
      roots.clear();
      for (Vertex w : graph.neighbors(x)) {
        if (state[w] == kTaken) roots.push_back(dsu.Find(w));
      }
      std::sort(roots.begin(), roots.end());
      roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
      int total = 1;
      for (Vertex r : roots) total += dsu.size[r];
      if (total > q) continue;
      state[x] = kTaken;
      for (Vertex r : roots) dsu.Unite(x, r);
      changed = true;
    }
  }
  std::vector<Vertex> deleted;
  for (Vertex v = 0; v < n; ++v) {
    if (state[v] == kDeleted) deleted.push_back(v);
  }
  return deleted;
}

bool Better(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

Rational PartitionCertificate::eps() const {
  if (num_vertices == 0) return Rational(0);
  return Rational(static_cast<std::int64_t>(deleted.size()), num_vertices);
}

std::vector<int> ComponentSizesWithout(const BoundedGraph& graph, std::span<const Vertex> deleted) {
  const Vertex n = graph.num_vertices();
  std::vector<char> gone(n, 0);
  for (Vertex v : deleted) {
    if (v < 0 || v >= n) throw Error(ErrorCode::kInvalidArgument, "deleted vertex out of range");
    gone[v] = 1;
  }
  std::vector<int> sizes;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (gone[s] || seen[s]) continue;
    int count = 0;
    stack.assign(1, s);
    seen[s] = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      ++count;
      for (Vertex w : graph.neighbors(v)) {
        if (!gone[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    sizes.push_back(count);
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

PartitionCertificate MakeCertificate(const BoundedGraph& graph, int q, std::vector<Vertex> deleted,
                                     CertificateMode mode) {
  if (q < 0) throw Error(ErrorCode::kInvalidArgument, "q must be non-negative");
  std::sort(deleted.begin(), deleted.end());
  if (std::adjacent_find(deleted.begin(), deleted.end()) != deleted.end()) {
    throw Error(ErrorCode::kInvalidArgument, "deleted set has repeated vertices");
  }
  PartitionCertificate cert;
  cert.q = q;
  cert.num_vertices = graph.num_vertices();
  cert.component_sizes = ComponentSizesWithout(graph, deleted);
  cert.deleted = std::move(deleted);
  cert.mode = mode;
  if (!cert.component_sizes.empty() && cert.component_sizes.front() > q) {
    throw Error(ErrorCode::kInvalidArgument,
                "component of size " + std::to_string(cert.component_sizes.front()) +
                    " exceeds q = " + std::to_string(q));
  }
  return cert;
}

PartitionCertificate TauExact(const BoundedGraph& graph, int q, std::int64_t max_nodes) {
  if (q < 0) throw Error(ErrorCode::kInvalidArgument, "q must be non-negative");
  const Vertex n = graph.num_vertices();
  if (n > kExactTauMaxVertices) {
    throw Error(ErrorCode::kBudgetExceeded, "exact tau is limited to 24 vertices");
  }
  CarvingOptions options;
  options.passes = 16;
  const PartitionCertificate upper = TauHeuristic(graph, q, options);
  TauSearch search(graph, q, max_nodes);
  std::uint32_t seed_mask = 0;
  for (Vertex v : upper.deleted) seed_mask |= std::uint32_t{1} << v;
  search.Seed(seed_mask);
  const std::uint32_t mask = search.Run();
  std::vector<Vertex> deleted;
  for (Vertex v = 0; v < n; ++v) {
    if (mask & (std::uint32_t{1} << v)) deleted.push_back(v);
  }
  return MakeCertificate(graph, q, std::move(deleted), CertificateMode::kExact);
}

PartitionCertificate TauHeuristic(const BoundedGraph& graph, int q, const CarvingOptions& options) {
  if (q < 0) throw Error(ErrorCode::kInvalidArgument, "q must be non-negative");
  if (options.passes < 1) throw Error(ErrorCode::kInvalidArgument, "passes must be at least 1");
  const Vertex n = graph.num_vertices();
  const int passes = options.sequential ? 1 : options.passes;
  std::vector<std::vector<Vertex>> results(passes);
  ParallelChunks(passes, options.threads, [&](int, std::int64_t begin, std::int64_t end) {
    std::vector<Vertex> order(n);
    for (std::int64_t p = begin; p < end; ++p) {
      std::iota(order.begin(), order.end(), 0);
      if (!options.sequential) {
        Rng rng(DeriveSeed(options.seed, kCarveStream, static_cast<std::uint64_t>(p)));
        rng.Shuffle(std::span<Vertex>(order));
      }
      results[p] = CarvePass(graph, q, order);
    }
  });
  std::size_t best = 0;
  for (std::size_t i = 1; i < results.size(); ++i) {
    if (Better(results[i], results[best])) best = i;
  }
  return MakeCertificate(graph, q, std::move(results[best]), CertificateMode::kHeuristic);
}

bool CheckHyperfinitePair(const BoundedGraph& graph, const PartitionCertificate& certificate, int q,
                          const Rational& eps) {
  if (certificate.num_vertices != graph.num_vertices()) return false;
  for (Vertex v : certificate.deleted) {
    if (v < 0 || v >= graph.num_vertices()) return false;
  }
  std::vector<Vertex> unique = certificate.deleted;
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  const std::vector<int> sizes = ComponentSizesWithout(graph, unique);
  if (!sizes.empty() && sizes.front() > q) return false;
  const Vertex n = graph.num_vertices();
  if (n == 0) return true;
  return Rational(static_cast<std::int64_t>(unique.size()), n) <= eps;
}

VertexColoring HyperfiniteColoring(const PartitionCertificate& certificate) {
  VertexColoring out{2, std::vector<int>(certificate.num_vertices, 2)};
  for (Vertex v : certificate.deleted) out.colors.at(v) = 1;
  return out;
}

}  // namespace lgc
