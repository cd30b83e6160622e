#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lgc/graph.hpp"
#include "lgc/rational.hpp"

namespace lgc {

enum class CertificateMode { kExact, kHeuristic };

// Deleted set S such that every component of G - S has at most q vertices.
struct PartitionCertificate {
  int q = 0;
  Vertex num_vertices = 0;
  std::vector<Vertex> deleted;       // sorted
  std::vector<int> component_sizes;  // sorted, descending
  CertificateMode mode = CertificateMode::kHeuristic;

  Rational eps() const;
};

// Component sizes of G - deleted, descending.
std::vector<int> ComponentSizesWithout(const BoundedGraph& graph, std::span<const Vertex> deleted);

// Fills sizes from the graph; throws InvalidArgument if a component is too big.
PartitionCertificate MakeCertificate(const BoundedGraph& graph, int q, std::vector<Vertex> deleted,
                                     CertificateMode mode);

inline constexpr Vertex kExactTauMaxVertices = 24;

// Minimum deleted set by branch and bound. Throws BudgetExceeded above
// kExactTauMaxVertices vertices or after `max_nodes` search nodes.
PartitionCertificate TauExact(const BoundedGraph& graph, int q, std::int64_t max_nodes = 50'000'000);

struct CarvingOptions {
  std::uint64_t seed = 1;
  int passes = 8;
  bool sequential = false;  // one pass in vertex-index order
  int threads = 1;
};

// BFS ball carving from random starts, then re-absorption of deleted vertices.
PartitionCertificate TauHeuristic(const BoundedGraph& graph, int q, const CarvingOptions& options);

// Re-scans G: true iff every component of G - S has at most q vertices and
// |S| <= eps * n.
bool CheckHyperfinitePair(const BoundedGraph& graph, const PartitionCertificate& certificate, int q,
                          const Rational& eps);

// 1 on deleted vertices, 2 elsewhere.
VertexColoring HyperfiniteColoring(const PartitionCertificate& certificate);

}  // namespace lgc
