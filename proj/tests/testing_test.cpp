#include "lgc/testing.hpp"

#include <gtest/gtest.h>

#include <numeric>

#include "lgc/error.hpp"
#include "lgc/rng.hpp"
#include "lgc/stats.hpp"
#include "support/catalog.hpp"
#include "support/oracles.hpp"

namespace lgc {
namespace {

TEST(SampleBallsTest, CycleBalls) {
  auto balls = SampleBalls(GenCycle(6), 1, 5, 3);
  ASSERT_EQ(balls.size(), 5u);
  for (const auto& b : balls) EXPECT_EQ(b.code, ExtractBall(GenPath(3), 1, 1).code);
}

TEST(SampleBallsTest, DeterministicAndConvergent) {
  auto g = GenRandomRegular(30, 3, 2);
  VertexColoring c{2, std::vector<int>(30, 1)};
  for (Vertex v = 0; v < 30; v += 4) c.colors[v] = 2;
  auto a = SampleBalls(g, 1, 50, 9, &c);
  auto b = SampleBalls(g, 1, 50, 9, &c);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].code, b[i].code);

  auto exact = ComputeBallDistribution(g, 1, &c);
  int good = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    BallDistribution empirical{1, 2, {}, 0};
    for (const auto& ball : SampleBalls(g, 1, 10000, seed, &c)) ++empirical.counts[ball.code];
    empirical.total = 10000;
    good += ToDouble(TvDistance(exact, empirical)) <= 0.05;
  }
  EXPECT_GE(good, 99);
}

TEST(RunTesterTest, TrivialTesters) {
  EXPECT_EQ(RunTester(GenCycle(7), AlwaysYesTester(1, 3), 20, 1), 1.0);
  EXPECT_EQ(RunTester(GenComplete(4), TriangleFreeTester(1, 1), 20, 1), 0.0);
  EXPECT_EQ(RunTester(GenCycle(7), TriangleFreeTester(1, 10), 20, 1), 1.0);
}

TEST(RunTesterTest, RelabelingAndThreads) {
  auto g = GenRandomRegular(60, 3, 5);
  std::vector<Vertex> perm(60);
  std::iota(perm.begin(), perm.end(), 0);
  Rng rng(2);
  rng.Shuffle(std::span<Vertex>(perm));
  auto tester = TriangleFreeTester(2, 5);
  EXPECT_EQ(RunTester(g, tester, 40, 3, nullptr, 1), RunTester(g, tester, 40, 3, nullptr, 4));
  // Relabeling changes which vertex each draw hits, but a graph with no
  // triangles answers YES either way.
  auto cycle = GenCycle(60);
  EXPECT_EQ(RunTester(cycle, tester, 10, 1), RunTester(cycle.Permuted(perm), tester, 10, 1));
}

TEST(DisconnectionTest, Examples) {
  auto g = GenRandomRegular(20, 3, 1);
  auto gg = GenDisjointUnion(g, g);
  auto yes = NdTestDisconnection(gg, 0.25);
  EXPECT_TRUE(yes.yes);
  EXPECT_TRUE(IsDisconnectionWitness(gg, yes.witness, 0.25));
  EXPECT_EQ(yes.smaller_side, 20);
  EXPECT_FALSE(NdTestDisconnection(g, 0.01).yes);

  auto parts = GenDisjointUnion(GenDisjointUnion(GenCycle(50), GenCycle(30)), GenCycle(20));
  auto v = NdTestDisconnection(parts, 0.45);
  EXPECT_TRUE(v.yes);
  EXPECT_EQ(v.smaller_side, 50);
  EXPECT_EQ(v.component_sizes, (std::vector<int>{50, 30, 20}));
  EXPECT_THROW(NdTestDisconnection(g, 0.0), Error);
  EXPECT_THROW(NdTestDisconnection(g, 0.6), Error);
}

TEST(DisconnectionTest, AgreesWithBruteForce) {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& g : testing_support::GraphsUpTo(n, 3)) {
      for (double beta : {0.1, 0.25, 0.5}) {
        EXPECT_EQ(NdTestDisconnection(g, beta).yes, testing_support::BruteForceDisconnected(g, beta));
      }
    }
  }
  Rng rng(8);
  for (int trial = 0; trial < 150; ++trial) {
    Vertex n = 2 + static_cast<Vertex>(rng.Below(14));
    auto g = testing_support::RandomBoundedGraph(rng, n, 4, static_cast<int>(rng.Below(2 * n)));
    for (double beta : {0.2, 0.4}) {
      EXPECT_EQ(NdTestDisconnection(g, beta).yes, testing_support::BruteForceDisconnected(g, beta));
    }
  }
}

TEST(DisconnectionTest, SamplingTesterSeparates) {
  auto g = GenRandomRegular(500, 3, 1);
  auto gg = GenDisjointUnion(g, g);
  auto tester = DisconnectionNdTester(0.25, 2, 200);
  auto union_run = RunNdTester(gg, tester, DisconnectionCandidates(gg, 0.25, 1), 30, 4);
  auto expander_run = RunNdTester(g, tester, DisconnectionCandidates(g, 0.25, 1), 30, 4);
  EXPECT_GE(union_run.best_frequency - expander_run.best_frequency, 1.0 / 3);
  EXPECT_EQ(union_run.best_frequency, 1.0);
}

}  // namespace
}  // namespace lgc
