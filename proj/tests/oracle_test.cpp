#include "boxicity/oracle.hpp"
#include "boxicity/rand_build.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace boxicity {
namespace {

using testing::make_graph;

TEST(IntervalOracleTest, Examples) {
  EXPECT_TRUE(is_interval_bruteforce(path_graph(4)));
  EXPECT_FALSE(is_interval_bruteforce(testing::c4()));
  EXPECT_TRUE(is_interval_bruteforce(complete_graph(4)));
  EXPECT_TRUE(is_interval_bruteforce(Graph(5)));
  // claw is interval, the subdivided claw is not
  EXPECT_TRUE(is_interval_bruteforce(make_graph(4, {{1, 2}, {1, 3}, {1, 4}})));
  EXPECT_FALSE(is_interval_bruteforce(make_graph(
      7, {{1, 2}, {2, 3}, {1, 4}, {4, 5}, {1, 6}, {6, 7}})));
}

TEST(IntervalOracleTest, EveryIntervalSupergraphIsRecognised) {
  Rng rng(15);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = testing::random_graph(rng, 1, 8);
    const auto ir = interval_supergraph(g, random_permutation(g.order(), rng));
    EXPECT_TRUE(is_interval_bruteforce(Graph(g.order(), interval_edges(ir))));
  }
}

TEST(IntervalOracleTest, CyclesLongerThanThreeAreNotInterval) {
  for (std::size_t n = 4; n <= 8; ++n) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
      edges.emplace_back(v, v + 1);
    }
    edges.emplace_back(1, static_cast<Vertex>(n));
    EXPECT_FALSE(is_interval_bruteforce(Graph(n, edges))) << n;
  }
}

TEST(BoxicityOracleTest, Examples) {
  EXPECT_EQ(boxicity_exact(complete_graph(4)), 0);
  EXPECT_EQ(boxicity_exact(testing::p3()), 1);
  EXPECT_EQ(boxicity_exact(roberts_graph(4)), 2);
  EXPECT_EQ(boxicity_exact(roberts_graph(6)), 3);
  EXPECT_EQ(boxicity_exact(make_graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5},
                                           {1, 5}})),
            2);
}

TEST(BoxicityOracleTest, SmallRobertsPathGraphs) {
  // the induced 4-cycle forces 2; the attached path costs nothing more
  EXPECT_EQ(boxicity_exact(roberts_path_graph(5, 4)), 2);
  EXPECT_EQ(boxicity_exact(roberts_path_graph(6, 4)), 2);
}

TEST(BoxicityOracleTest, OneExactlyForNonCompleteIntervalGraphs) {
  Rng rng(27);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = testing::random_graph(rng, 2, 6);
    if (g.is_complete() || g.non_edges().size() > 12) {
      continue;
    }
    EXPECT_EQ(boxicity_exact(g) == 1, is_interval_bruteforce(g));
  }
}

TEST(BoxicityOracleTest, Limits) {
  EXPECT_THROW(boxicity_exact(path_graph(9)), OracleLimitExceeded);
  EXPECT_THROW(boxicity_exact(Graph(6)), OracleLimitExceeded);  // 15 non-edges
  OracleLimits wide;
  wide.max_non_edges = 15;
  EXPECT_EQ(boxicity_exact(Graph(6), wide), 1);
  EXPECT_THROW(edge_prob_exact(Graph(8), 1, 2), OracleLimitExceeded);
  EXPECT_THROW(is_interval_bruteforce(Graph(9)), OracleLimitExceeded);
}

TEST(EdgeProbOracleTest, Examples) {
  EXPECT_EQ(edge_prob_exact(testing::p3(), 1, 3), Rational(1, 3));
  EXPECT_EQ(edge_prob_exact(Graph(4), 2, 3), Rational(0));
  const Graph k4e = make_graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
  EXPECT_EQ(edge_prob_exact(k4e, 3, 4), Rational(1, 2));
  EXPECT_THROW(edge_prob_exact(testing::p3(), 1, 2), std::invalid_argument);
}

TEST(CondProbOracleTest, Examples) {
  const Graph g = testing::p3();
  const Edge e{1, 3};
  EXPECT_EQ(cond_prob_exact(g, PartialPermutation(g), e), Rational(2, 3));
  const std::vector<Vertex> middle{2};
  EXPECT_EQ(cond_prob_exact(g, PartialPermutation(g, middle), e), Rational(0));
  const std::vector<Vertex> end{3};
  EXPECT_EQ(cond_prob_exact(g, PartialPermutation(g, end), e), Rational(1));
  // 3 is placed before its neighbour 2, so its interval is a point
  const std::vector<Vertex> all{1, 3, 2};
  EXPECT_EQ(cond_prob_exact(g, PartialPermutation(g, all), e), Rational(1));
  const std::vector<Vertex> centre_first{2, 3, 1};
  EXPECT_EQ(cond_prob_exact(g, PartialPermutation(g, centre_first), e),
            Rational(0));
}

TEST(CondProbOracleTest, EmptyPrefixAgreesWithEdgeProb) {
  Rng rng(33);
  for (int trial = 0; trial < 15; ++trial) {
    const Graph g = testing::random_graph(rng, 2, 6);
    for (const Edge& e : g.non_edges()) {
      EXPECT_EQ(cond_prob_exact(g, PartialPermutation(g), e),
                1 - edge_prob_exact(g, e.u, e.v));
    }
  }
}

TEST(CondProbOracleTest, BatchedFormMatchesSingleEdgeForm) {
  Rng rng(35);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = testing::random_graph(rng, 2, 6);
    const auto pi = random_permutation(g.order(), rng);
    PartialPermutation pp(g);
    for (std::size_t i = 1; i <= rng.below(g.order() + 1); ++i) {
      pp.place(g, pi.at(i));
    }
    const auto missing = g.non_edges();
    const auto all = cond_prob_exact_all(g, pp);
    ASSERT_EQ(all.size(), missing.size());
    for (std::size_t i = 0; i < missing.size(); ++i) {
      EXPECT_EQ(all[i], cond_prob_exact(g, pp, missing[i]));
    }
  }
}

TEST(BoxicityOracleTest, RandomizedBuildsAreNeverSmaller) {
  Rng rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = testing::random_graph(rng, 3, 7);
    if (g.non_edges().size() > 12) {
      continue;
    }
    RandBuildConfig cfg;
    cfg.seed = trial;
    cfg.max_attempts = 100;
    EXPECT_GE(static_cast<int>(build_randomized(g, cfg).rep.dimension()),
              boxicity_exact(g));
  }
}

}  // namespace
}  // namespace boxicity
