#include "lgc/canon.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace lgc::canon {
namespace {

class Search {
 public:
  Search(std::span<const std::vector<int>> adjacency, std::span<const std::uint64_t> labels)
      : adjacency_(adjacency), n_(static_cast<int>(adjacency.size())) {
    matrix_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (int u = 0; u < n_; ++u) {
      for (int v : adjacency_[u]) matrix_[static_cast<std::size_t>(u) * n_ + v] = 1;
    }
    // Initial ranks: position of the first vertex of the cell after sorting
    // by label.
    std::vector<int> idx(n_);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return labels[a] < labels[b]; });
    initial_.assign(n_, 0);
    for (int i = 0; i < n_; ++i) {
      initial_[idx[i]] = (i > 0 && labels[idx[i]] == labels[idx[i - 1]])
                             ? initial_[idx[i - 1]]
                             : i;
    }
  }

  CanonicalForm Run() {
    std::vector<int> ranks = initial_;
    Refine(ranks);
    Explore(ranks);
    return CanonicalForm{std::move(best_order_), std::move(best_bits_)};
  }

 private:
  bool Adjacent(int u, int v) const { return matrix_[static_cast<std::size_t>(u) * n_ + v] != 0; }

  // Equitable refinement: split cells by the multiset of neighbor ranks.
  // Ranks are cell start positions, so cell order is preserved and splits
  // are ordered by signature, independent of vertex numbering.
  void Refine(std::vector<int>& ranks) const {
    std::vector<std::vector<int>> signature(n_);
    std::vector<int> idx(n_);
    int cells = CountCells(ranks);
    while (true) {
      for (int v = 0; v < n_; ++v) {
        auto& sig = signature[v];
        sig.clear();
        sig.push_back(ranks[v]);
        for (int w : adjacency_[v]) sig.push_back(ranks[w]);
        std::sort(sig.begin() + 1, sig.end());
      }
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(),
                [&](int a, int b) { return signature[a] < signature[b]; });
      for (int i = 0; i < n_; ++i) {
        ranks[idx[i]] = (i > 0 && signature[idx[i]] == signature[idx[i - 1]])
                            ? ranks[idx[i - 1]]
                            : i;
      }
      const int refined = CountCells(ranks);
      if (refined == cells) return;
      cells = refined;
    }
  }

  static int CountCells(const std::vector<int>& ranks) {
    std::vector<char> seen(ranks.size(), 0);
    int count = 0;
    for (int r : ranks) {
      if (!seen[r]) {
        seen[r] = 1;
        ++count;
      }
    }
    return count;
  }

  bool Twins(int v, int w) const {
    for (int x = 0; x < n_; ++x) {
      if (x == v || x == w) continue;
      if (Adjacent(v, x) != Adjacent(w, x)) return false;
    }
    return true;
  }

  void Explore(const std::vector<int>& ranks) {
    // Find the first non-singleton cell by rank.
    std::vector<int> size(n_, 0);
    for (int r : ranks) ++size[r];
    int target = -1;
    for (int r = 0; r < n_; ++r) {
      if (size[r] > 1) {
        target = r;
        break;
      }
    }
    if (target < 0) {
      Leaf(ranks);
      return;
    }
    std::vector<int> tried;
    for (int v = 0; v < n_; ++v) {
      if (ranks[v] != target) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](int w) { return Twins(v, w); })) continue;
      tried.push_back(v);
      std::vector<int> child = ranks;
      for (int w = 0; w < n_; ++w) {
        if (w != v && ranks[w] == target) child[w] = target + 1;
      }
      Refine(child);
      Explore(child);
    }
  }

  void Leaf(const std::vector<int>& ranks) {
    std::vector<int> order(n_);
    for (int v = 0; v < n_; ++v) order[ranks[v]] = v;
    auto bits = PackAdjacency(adjacency_, order);
    if (best_order_.empty() || bits < best_bits_) {
      best_bits_ = std::move(bits);
      best_order_ = std::move(order);
    }
  }

  std::span<const std::vector<int>> adjacency_;
  int n_;
  std::vector<std::uint8_t> matrix_;
  std::vector<int> initial_;
  std::vector<int> best_order_;
  std::vector<std::uint8_t> best_bits_;
};

}  // namespace

std::vector<std::uint8_t> PackAdjacency(std::span<const std::vector<int>> adjacency,
                                        std::span<const int> order) {
  const int n = static_cast<int>(order.size());
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[order[i]] = i;
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::vector<std::uint8_t> bits((pairs + 7) / 8, 0);
  for (int u = 0; u < n; ++u) {
    for (int v : adjacency[u]) {
      int i = position[u];
      int j = position[v];
      if (i >= j) continue;
      // Row-major index of (i, j) in the strict upper triangle.
      const std::size_t k = static_cast<std::size_t>(i) * (2 * n - i - 1) / 2 + (j - i - 1);
      bits[k / 8] |= static_cast<std::uint8_t>(0x80u >> (k % 8));
    }
  }
  return bits;
}

CanonicalForm Canonicalize(std::span<const std::vector<int>> adjacency,
                           std::span<const std::uint64_t> labels) {
  if (adjacency.empty()) return {};
  return Search(adjacency, labels).Run();
}

}  // namespace lgc::canon
