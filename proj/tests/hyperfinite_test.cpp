#include "lgc/hyperfinite.hpp"

#include <gtest/gtest.h>

#include <bit>

#include "lgc/balls.hpp"
#include "lgc/error.hpp"
#include "lgc/stats.hpp"
#include "support/catalog.hpp"

namespace lgc {
namespace {

// Smallest |S| by trying every subset.
int BruteTau(const BoundedGraph& g, int q) {
  const Vertex n = g.num_vertices();
  int best = n;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    const int size = std::popcount(mask);
    if (size >= best) continue;
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v) {
      if (mask >> v & 1) s.push_back(v);
    }
    auto sizes = ComponentSizesWithout(g, s);
    if (sizes.empty() || sizes.front() <= q) best = size;
  }
  return best;
}

TEST(TauExactTest, Examples) {
  EXPECT_EQ(TauExact(GenCycle(4), 1).deleted.size(), 2u);
  auto c6 = TauExact(GenCycle(6), 2);
  EXPECT_EQ(c6.deleted.size(), 2u);
  EXPECT_EQ(c6.component_sizes, (std::vector<int>{2, 2}));
  EXPECT_EQ(c6.mode, CertificateMode::kExact);
  for (int q = 5; q <= 8; ++q) EXPECT_TRUE(TauExact(GenCycle(5), q).deleted.empty());
}

TEST(TauExactTest, Cycles) {
  for (Vertex n = 3; n <= 16; ++n) {
    for (int q = 1; q <= 4; ++q) {
      const int expected = n <= q ? 0 : (n + q) / (q + 1);
      EXPECT_EQ(static_cast<int>(TauExact(GenCycle(n), q).deleted.size()), expected)
          << "n=" << n << " q=" << q;
    }
  }
}

TEST(TauExactTest, MatchesBruteForceOnCatalog) {
  for (int n = 1; n <= 9; ++n) {
    for (const auto& g : testing_support::GraphsUpTo(n, 3)) {
      for (int q = 0; q <= 3; ++q) {
        auto cert = TauExact(g, q);
        ASSERT_EQ(static_cast<int>(cert.deleted.size()), BruteTau(g, q));
        EXPECT_TRUE(CheckHyperfinitePair(g, cert, q, cert.eps()));
      }
    }
  }
}

TEST(TauExactTest, MonotoneInQ) {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    auto g = GenRandomRegular(20, 3, seed);
    std::size_t last = 21;
    for (int q = 0; q <= 6; ++q) {
      auto size = TauExact(g, q).deleted.size();
      EXPECT_LE(size, last);
      last = size;
    }
  }
}

TEST(TauExactTest, Guard) {
  try {
    TauExact(GenCycle(25), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
}

TEST(TauHeuristicTest, ValidAndWithinFactorTwoOnCycles) {
  for (Vertex n = 3; n <= 16; ++n) {
    for (int q = 1; q <= 4; ++q) {
      auto g = GenCycle(n);
      auto h = TauHeuristic(g, q, CarvingOptions{});
      auto e = TauExact(g, q);
      EXPECT_TRUE(CheckHyperfinitePair(g, h, q, h.eps()));
      EXPECT_LE(e.deleted.size(), h.deleted.size());
      EXPECT_LE(h.deleted.size(), 2 * e.deleted.size());
    }
  }
}

TEST(TauHeuristicTest, SequentialPathIsOptimal) {
  for (Vertex n = 1; n <= 30; ++n) {
    for (int q = 1; q <= 5; ++q) {
      CarvingOptions options;
      options.sequential = true;
      auto cert = TauHeuristic(GenPath(n), q, options);
      EXPECT_EQ(static_cast<int>(cert.deleted.size()), n / (q + 1)) << n << " " << q;
    }
  }
}

TEST(TauHeuristicTest, ThreadsDoNotChangeResult) {
  auto g = GenRandomRegular(500, 3, 6);
  CarvingOptions one;
  CarvingOptions many = one;
  many.threads = 4;
  EXPECT_EQ(TauHeuristic(g, 5, one).deleted, TauHeuristic(g, 5, many).deleted);
}

TEST(CheckPairTest, Verdicts) {
  auto g = GenCycle(12);
  auto cert = MakeCertificate(g, 2, {0, 3, 6, 9}, CertificateMode::kHeuristic);
  EXPECT_TRUE(CheckHyperfinitePair(g, cert, 2, Rational(1, 3)));
  EXPECT_FALSE(CheckHyperfinitePair(g, cert, 2, Rational(1, 4)));
  EXPECT_FALSE(CheckHyperfinitePair(g, cert, 1, Rational(1, 2)));
  auto whole = MakeCertificate(g, 12, {}, CertificateMode::kHeuristic);
  EXPECT_TRUE(CheckHyperfinitePair(g, whole, 12, Rational(0)));
}

TEST(CheckPairTest, CorruptionFlipsVerdict) {
  auto g = GenCycle(12);
  auto cert = MakeCertificate(g, 2, {0, 3, 6, 9}, CertificateMode::kHeuristic);
  auto edges = g.Edges();
  edges.emplace_back(2, 4);  // joins {1,2} and {4,5}
  auto corrupted = BoundedGraph::Build(12, edges, 3);
  EXPECT_FALSE(CheckHyperfinitePair(corrupted, cert, 2, Rational(1, 3)));
  EXPECT_THROW(MakeCertificate(corrupted, 2, {0, 3, 6, 9}, CertificateMode::kHeuristic), Error);
}

TEST(ColoringTest, RedMassAndForbiddenBalls) {
  auto g = GenCycle(6);
  auto cert = TauExact(g, 2);
  auto coloring = HyperfiniteColoring(cert);
  auto dist = ComputeBallDistribution(g, 2, &coloring);
  EXPECT_EQ(dist.MassWhere([](const RootedBall& b) { return b.colors[0] == 1; }), Rational(1, 3));

  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    auto h = GenRandomRegular(60, 3, seed);
    for (int q : {1, 2, 3}) {
      auto c = HyperfiniteColoring(TauHeuristic(h, q, CarvingOptions{}));
      auto d = ComputeBallDistribution(h, q, &c);
      auto forbidden = d.MassWhere([&](const RootedBall& b) {
        std::vector<int> blue;
        for (int i = 0; i < static_cast<int>(b.size()); ++i) {
          if (b.colors[i] == 2) blue.push_back(i);
        }
        std::vector<char> seen(b.size(), 0);
        for (int s : blue) {
          if (seen[s]) continue;
          int count = 0;
          std::vector<int> stack = {s};
          seen[s] = 1;
          while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++count;
            for (int w : b.adjacency[v]) {
              if (b.colors[w] == 2 && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
              }
            }
          }
          if (count > q) return true;
        }
        return false;
      });
      EXPECT_EQ(forbidden, Rational(0));
    }
  }
}

TEST(ColoringTest, EmptyDeletionAllBlue) {
  auto g = GenDisjointUnion(GenPath(2), GenPath(2));
  auto c = HyperfiniteColoring(MakeCertificate(g, 2, {}, CertificateMode::kHeuristic));
  EXPECT_EQ(c.colors, (std::vector<int>{2, 2, 2, 2}));
  EXPECT_THROW(MakeCertificate(g, 1, {}, CertificateMode::kHeuristic), Error);
}

}  // namespace
}  // namespace lgc
