#pragma once

#include <span>
#include <string>
#include <vector>

#include "lgc/graph.hpp"
#include "lgc/rational.hpp"

namespace lgc {

// (Lf)(v) = deg(v) f(v) - sum over neighbors of f(w).
std::vector<double> LaplacianApply(const BoundedGraph& graph, std::span<const double> f,
                                   int threads = 1);

// Sum over edges of (f(u) - f(v))^2.
double LaplacianForm(const BoundedGraph& graph, std::span<const double> f);

inline constexpr Vertex kDenseSpectralLimit = 512;

struct SpectralReport {
  double gap = 0.0;              // second smallest Laplacian eigenvalue
  double normalized_gap = 0.0;   // gap / d, regular graphs only
  bool regular = false;
  int degree = 0;
  double residual = 0.0;         // ||L f - gap f|| for the reported unit vector
  std::string method;            // "dense", "lanczos" or "components"
  int iterations = 0;
  std::vector<double> eigenvector;  // unit, orthogonal to constants
};

// Dense symmetric solver up to kDenseSpectralLimit vertices, above that
// Lanczos on the pseudo-inverse (conjugate-gradient solves on the
// complement of the constants). Disconnected large graphs report 0 with a
// component-indicator vector.
SpectralReport SpectralGap(const BoundedGraph& graph, double tol = 1e-10);

struct ExpansionResult {
  Rational c;
  std::vector<Vertex> witness;  // S attaining the minimum
};

inline constexpr Vertex kExpansionMaxVertices = 20;

// min over 0 < |S| <= n/2 of |N_1(S)|/|S| - 1, N_1(S) containing S.
ExpansionResult VertexExpansionExact(const BoundedGraph& graph);

struct SandwichReport {
  int degree = 0;
  double expansion = 0.0;
  double gap = 0.0;
  double lower_bound = 0.0;      // c^2 / (2d)
  bool lower_holds = false;      // lower_bound <= gap
  double normalized_gap = 0.0;   // gap / d
  bool upper_holds = false;      // gap / d <= 2c
  bool raw_upper_holds = false;  // gap <= 2c, reported only
  std::vector<Vertex> witness;
};

SandwichReport CheckExpanderSandwich(const BoundedGraph& graph, double tol = 1e-10);

}  // namespace lgc
