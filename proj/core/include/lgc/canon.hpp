#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace lgc::canon {

// Result of canonical labeling: order[i] is the input vertex placed at
// canonical position i, and adjacency_bits is the upper triangle of the
// relabeled adjacency matrix, row-major, packed MSB-first.
struct CanonicalForm {
  std::vector<int> order;
  std::vector<std::uint8_t> adjacency_bits;
};

// Canonical labeling of a small undirected graph whose vertices carry an
// invariant label. Vertices are first grouped into cells ordered by label,
// cells are refined by neighbor-cell multisets until stable, and remaining
// ties are broken by individualization with backtracking. The form returned
// is the lexicographically least adjacency encoding over all leaves, so two
// inputs get identical forms iff some label-preserving isomorphism maps one
// onto the other. Interchangeable twins are explored once.
CanonicalForm Canonicalize(std::span<const std::vector<int>> adjacency,
                           std::span<const std::uint64_t> labels);

// Packs the upper triangle of the adjacency matrix under `order`.
std::vector<std::uint8_t> PackAdjacency(std::span<const std::vector<int>> adjacency,
                                        std::span<const int> order);

}  // namespace lgc::canon
