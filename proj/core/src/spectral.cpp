#include "lgc/spectral.hpp"

#include <Eigen/Dense>
#include <Eigen/IterativeLinearSolvers>
#include <Eigen/Sparse>

#include <algorithm>
#include <bit>
#include <cmath>

#include "lgc/error.hpp"
#include "lgc/parallel.hpp"
#include "lgc/rng.hpp"

namespace lgc {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr int kLanczosSteps = 48;
constexpr int kMaxRestarts = 40;
constexpr double kSolveTolerance = 1e-14;

VectorXd Apply(const BoundedGraph& graph, const VectorXd& f) {
  VectorXd out(f.size());
  for (Vertex v = 0; v < graph.num_vertices(); ++v) {
    double s = graph.degree(v) * f[v];
    for (Vertex w : graph.neighbors(v)) s -= f[w];
    out[v] = s;
  }
  return out;
}

void Deflate(VectorXd& x) { x.array() -= x.mean(); }

double Residual(const BoundedGraph& graph, const VectorXd& y, double lambda) {
  return (Apply(graph, y) - lambda * y).norm();
}

// Applies the Laplacian pseudo-inverse to vectors orthogonal to constants:
// the system is grounded at vertex 0 (SPD for connected graphs) and solved
// by preconditioned conjugate gradients.
class PseudoInverse {
 public:
  explicit PseudoInverse(const BoundedGraph& graph) : n_(graph.num_vertices()) {
    std::vector<Eigen::Triplet<double>> entries;
    for (Vertex v = 1; v < n_; ++v) {
      entries.emplace_back(v - 1, v - 1, graph.degree(v));
      for (Vertex w : graph.neighbors(v)) {
        if (w != 0) entries.emplace_back(v - 1, w - 1, -1.0);
      }
    }
    grounded_.resize(n_ - 1, n_ - 1);
    grounded_.setFromTriplets(entries.begin(), entries.end());
    solver_.setTolerance(kSolveTolerance);
    solver_.setMaxIterations(std::max<int>(1000, 4 * n_));
    solver_.compute(grounded_);
    if (solver_.info() != Eigen::Success) {
      throw Error(ErrorCode::kConvergenceFailure, "preconditioner setup failed");
    }
  }

  VectorXd operator()(const VectorXd& b) {
    VectorXd x(n_);
    x[0] = 0.0;
    x.tail(n_ - 1) = solver_.solve(b.tail(n_ - 1));
    if (solver_.info() != Eigen::Success) {
      throw Error(ErrorCode::kConvergenceFailure, "conjugate gradients did not converge");
    }
    Deflate(x);
    return x;
  }

 private:
  Vertex n_;
  Eigen::SparseMatrix<double> grounded_;
  Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper,
                           Eigen::IncompleteCholesky<double>>
      solver_;
};

SpectralReport Dense(const BoundedGraph& graph) {
  const Vertex n = graph.num_vertices();
  MatrixXd lap = MatrixXd::Zero(n, n);
  for (Vertex v = 0; v < n; ++v) {
    lap(v, v) = graph.degree(v);
    for (Vertex w : graph.neighbors(v)) lap(v, w) = -1.0;
  }
  Eigen::SelfAdjointEigenSolver<MatrixXd> solver(lap);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kConvergenceFailure, "dense eigensolver failed");
  }
  SpectralReport report;
  report.method = "dense";
  report.gap = std::max(0.0, solver.eigenvalues()[1]);
  VectorXd y = solver.eigenvectors().col(1);
  report.residual = Residual(graph, y, solver.eigenvalues()[1]);
  report.eigenvector.assign(y.data(), y.data() + n);
  return report;
}

SpectralReport Components(const BoundedGraph& graph) {
  const Vertex n = graph.num_vertices();
  const std::vector<int> labels = graph.ComponentLabels();
  VectorXd y(n);
  for (Vertex v = 0; v < n; ++v) y[v] = labels[v] == 0 ? 1.0 : 0.0;
  Deflate(y);
  y.normalize();
  SpectralReport report;
  report.method = "components";
  report.gap = 0.0;
  report.residual = Residual(graph, y, 0.0);
  report.eigenvector.assign(y.data(), y.data() + n);
  return report;
}

SpectralReport Lanczos(const BoundedGraph& graph, double tol) {
  const Vertex n = graph.num_vertices();
  PseudoInverse inverse(graph);
  Rng rng(0x6c616e63);
  VectorXd start(n);
  for (Vertex v = 0; v < n; ++v) start[v] = rng.Uniform() - 0.5;
  Deflate(start);
  start.normalize();

  SpectralReport report;
  report.method = "lanczos";
  const int m = std::min<int>(kLanczosSteps, n - 1);
  for (int restart = 0; restart < kMaxRestarts; ++restart) {
    MatrixXd basis(n, m + 1);
    VectorXd alpha = VectorXd::Zero(m);
    VectorXd beta = VectorXd::Zero(m);
    basis.col(0) = start;
    int steps = 0;
    for (int j = 0; j < m; ++j) {
      VectorXd w = inverse(basis.col(j));
      alpha[j] = basis.col(j).dot(w);
      for (int pass = 0; pass < 2; ++pass) {
        w -= basis.leftCols(j + 1) * (basis.leftCols(j + 1).transpose() * w);
      }
      Deflate(w);
      steps = j + 1;
      ++report.iterations;
      beta[j] = w.norm();
      if (beta[j] < 1e-13 * std::abs(alpha[j])) break;
      basis.col(j + 1) = w / beta[j];
    }
    MatrixXd tri = MatrixXd::Zero(steps, steps);
    for (int j = 0; j < steps; ++j) {
      tri(j, j) = alpha[j];
      if (j + 1 < steps) tri(j, j + 1) = tri(j + 1, j) = beta[j];
    }
    Eigen::SelfAdjointEigenSolver<MatrixXd> small(tri);
    VectorXd y = basis.leftCols(steps) * small.eigenvectors().col(steps - 1);
    Deflate(y);
    y.normalize();
    const double lambda = y.dot(Apply(graph, y));
    report.gap = std::max(0.0, lambda);
    report.residual = Residual(graph, y, lambda);
    report.eigenvector.assign(y.data(), y.data() + n);
    if (report.residual <= tol) return report;
    start = y;
  }
  throw Error(ErrorCode::kConvergenceFailure,
              "Lanczos residual " + std::to_string(report.residual) + " above tolerance");
}

}  // namespace

std::vector<double> LaplacianApply(const BoundedGraph& graph, std::span<const double> f,
                                   int threads) {
  const Vertex n = graph.num_vertices();
  if (static_cast<Vertex>(f.size()) != n) {
    throw Error(ErrorCode::kSizeMismatch, "vector length differs from vertex count");
  }
  std::vector<double> out(n);
  ParallelChunks(n, threads, [&](int, std::int64_t begin, std::int64_t end) {
    for (std::int64_t v = begin; v < end; ++v) {
      double s = graph.degree(static_cast<Vertex>(v)) * f[v];
      for (Vertex w : graph.neighbors(static_cast<Vertex>(v))) s -= f[w];
      out[v] = s;
    }
  });
  return out;
}

double LaplacianForm(const BoundedGraph& graph, std::span<const double> f) {
  if (static_cast<Vertex>(f.size()) != graph.num_vertices()) {
    throw Error(ErrorCode::kSizeMismatch, "vector length differs from vertex count");
  }
  double s = 0.0;
  for (const Edge& e : graph.Edges()) {
    const double d = f[e.first] - f[e.second];
    s += d * d;
  }
  return s;
}

SpectralReport SpectralGap(const BoundedGraph& graph, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  const Vertex n = graph.num_vertices();
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "spectral gap needs at least 2 vertices");
  SpectralReport report;
  if (n <= kDenseSpectralLimit) {
    report = Dense(graph);
  } else if (graph.NumComponents() > 1) {
    report = Components(graph);
  } else {
    report = Lanczos(graph, tol);
  }
  if (report.residual > tol && report.method == "dense") {
    throw Error(ErrorCode::kConvergenceFailure,
                "dense residual " + std::to_string(report.residual) + " above tolerance");
  }
  report.degree = graph.ObservedMaxDegree();
  report.regular = report.degree > 0 && graph.IsRegular(report.degree);
  if (report.regular) report.normalized_gap = report.gap / report.degree;
  return report;
}

ExpansionResult VertexExpansionExact(const BoundedGraph& graph) {
  const Vertex n = graph.num_vertices();
  if (n > kExpansionMaxVertices) {
    throw Error(ErrorCode::kBudgetExceeded, "exact expansion is limited to 20 vertices");
  }
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "expansion needs at least 2 vertices");
  std::vector<std::uint32_t> closed(n);
  for (Vertex v = 0; v < n; ++v) {
    closed[v] = std::uint32_t{1} << v;
    for (Vertex w : graph.neighbors(v)) closed[v] |= std::uint32_t{1} << w;
  }
  const std::uint32_t limit = std::uint32_t{1} << n;
  std::vector<std::uint32_t> reach(limit, 0);
  std::int64_t best_num = 0;
  std::int64_t best_den = 0;
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    const std::uint32_t low = mask & (~mask + 1);
    reach[mask] = reach[mask ^ low] | closed[std::countr_zero(mask)];
    const int size = std::popcount(mask);
    if (2 * size > n) continue;
    const int grown = std::popcount(reach[mask]) - size;
    // grown / size < best_num / best_den
    if (best_den == 0 || static_cast<std::int64_t>(grown) * best_den < best_num * size) {
      best_num = grown;
      best_den = size;
      best_mask = mask;
    }
  }
  ExpansionResult out;
  out.c = Rational(best_num, best_den);
  for (Vertex v = 0; v < n; ++v) {
    if (best_mask >> v & 1) out.witness.push_back(v);
  }
  return out;
}

SandwichReport CheckExpanderSandwich(const BoundedGraph& graph, double tol) {
  const int d = graph.ObservedMaxDegree();
  if (d == 0 || !graph.IsRegular(d)) {
    throw Error(ErrorCode::kNotRegular, "sandwich check needs a d-regular graph with d >= 1");
  }
  const ExpansionResult expansion = VertexExpansionExact(graph);
  const SpectralReport spectral = SpectralGap(graph, tol);
  SandwichReport out;
  out.degree = d;
  out.expansion = ToDouble(expansion.c);
  out.witness = expansion.witness;
  out.gap = spectral.gap;
  out.lower_bound = out.expansion * out.expansion / (2.0 * d);
  out.lower_holds = out.lower_bound <= out.gap + tol;
  out.normalized_gap = out.gap / d;
  out.upper_holds = out.normalized_gap <= 2.0 * out.expansion + tol;
  out.raw_upper_holds = out.gap <= 2.0 * out.expansion + tol;
  return out;
}

}  // namespace lgc
