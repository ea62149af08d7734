#include "boxicity/generators.hpp"
#include "boxicity/rational.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

#include "test_support.hpp"

namespace boxicity {
namespace {

TEST(RobertsTest, K4MinusMatchingIsC4) {
  const Graph g = roberts_graph(4);
  EXPECT_EQ(g.edges(),
            (std::vector<Edge>{{1, 2}, {1, 4}, {2, 3}, {3, 4}}));
  EXPECT_FALSE(g.has_edge(1, 3));
  EXPECT_FALSE(g.has_edge(2, 4));
}

TEST(RobertsTest, OctahedronAndDegenerateCase) {
  const Graph g6 = roberts_graph(6);
  EXPECT_EQ(g6.size(), 12u);
  for (Vertex v = 1; v <= 6; ++v) {
    EXPECT_EQ(g6.degree(v), 4u);
  }
  const Graph g2 = roberts_graph(2);
  EXPECT_EQ(g2.order(), 2u);
  EXPECT_EQ(g2.size(), 0u);
}

TEST(RobertsTest, RegularWithExpectedEdgeCount) {
  for (std::size_t k = 2; k <= 12; k += 2) {
    const Graph g = roberts_graph(k);
    EXPECT_EQ(g.size(), k * (k - 2) / 2) << "k=" << k;
    for (Vertex v = 1; v <= k; ++v) {
      EXPECT_EQ(g.degree(v), k - 2);
    }
    const auto missing = g.non_edges();
    ASSERT_EQ(missing.size(), k / 2);
    for (const Edge& e : missing) {
      EXPECT_EQ(e.v, e.u + k / 2);
    }
  }
}

TEST(RobertsTest, RejectsOddOrSmallK) {
  EXPECT_THROW(roberts_graph(0), std::invalid_argument);
  EXPECT_THROW(roberts_graph(5), std::invalid_argument);
}

TEST(RobertsPathTest, SmallExample) {
  const Graph g = roberts_path_graph(6, 4);
  EXPECT_EQ(g.size(), 6u);
  EXPECT_TRUE(g.has_edge(4, 5));
  EXPECT_TRUE(g.has_edge(5, 6));
  EXPECT_TRUE(g.is_connected());
}

TEST(RobertsPathTest, AverageDegreeMatchesClosedForm) {
  const Graph g = roberts_path_graph(100, 20);
  EXPECT_EQ(Rational(2 * g.size(), 100), Rational(52, 10));

  for (std::size_t n1 = 2; n1 <= 12; n1 += 2) {
    for (std::size_t n = n1 + 1; n <= n1 + 9; ++n) {
      const Graph h = roberts_path_graph(n, n1);
      EXPECT_EQ(h.size(), n1 * (n1 - 2) / 2 + (n - n1 - 1) + 1);
      const Rational avg(2 * static_cast<long>(h.size()), static_cast<long>(n));
      const Rational formula(
          static_cast<long>(n1 * (n1 - 2) + 2 * (n - n1)), static_cast<long>(n));
      EXPECT_EQ(avg, formula) << "n=" << n << " n1=" << n1;
    }
  }
}

TEST(RobertsPathTest, PendantWhenPathIsEmpty) {
  const Graph g = roberts_path_graph(5, 4);
  EXPECT_EQ(g.degree(5), 1u);
  EXPECT_TRUE(g.has_edge(4, 5));
}

TEST(RobertsPathTest, RejectsBadParameters) {
  EXPECT_THROW(roberts_path_graph(4, 4), std::invalid_argument);
  EXPECT_THROW(roberts_path_graph(10, 3), std::invalid_argument);
}

TEST(GnmTest, ExtremesAreForced) {
  Rng rng(1);
  EXPECT_EQ(gnm_graph(5, 10, rng), complete_graph(5));
  EXPECT_EQ(gnm_graph(5, 0, rng).size(), 0u);
  EXPECT_THROW(gnm_graph(5, 11, rng), std::invalid_argument);
}

TEST(GnmTest, ExactEdgeCountAndDeterminism) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng a(seed);
    Rng b(seed);
    const Graph ga = gnm_graph(40, 100 + seed, a);
    EXPECT_EQ(ga.size(), 100 + seed);
    EXPECT_EQ(ga, gnm_graph(40, 100 + seed, b));
  }
}

TEST(GnmTest, UniformOverThreeEdgeGraphsOnFourVertices) {
  // C(6,3) = 20 labelled graphs, each with probability 1/20.
  constexpr int kSamples = 2000;
  std::map<std::vector<Edge>, int> counts;
  Rng rng(2024);
  for (int i = 0; i < kSamples; ++i) {
    ++counts[gnm_graph(4, 3, rng).edges()];
  }
  ASSERT_EQ(counts.size(), 20u);
  const double expected = kSamples / 20.0;
  const double sigma = std::sqrt(kSamples * (1.0 / 20) * (19.0 / 20));
  for (const auto& [edges, c] : counts) {
    EXPECT_LE(std::abs(c - expected), 5 * sigma);
  }
}

TEST(GnpTest, DeterministicForSeed) {
  GraphFamilySpec spec;
  spec.family = GraphFamily::gnp;
  spec.n = 30;
  spec.p = 0.2;
  spec.seed = 7;
  EXPECT_EQ(generate(spec), generate(spec));
}

TEST(GnpTest, ProbabilityExtremesAndRange) {
  Rng rng(3);
  EXPECT_EQ(gnp_graph(8, 0.0, rng).size(), 0u);
  EXPECT_EQ(gnp_graph(8, 1.0, rng), complete_graph(8));
  EXPECT_THROW(gnp_graph(8, 1.5, rng), std::invalid_argument);
  EXPECT_THROW(gnp_graph(8, -0.1, rng), std::invalid_argument);
}

TEST(GenerateTest, FamilyTagsRoundTrip) {
  for (const auto f : {GraphFamily::roberts, GraphFamily::roberts_path,
                       GraphFamily::gnm, GraphFamily::gnp, GraphFamily::path,
                       GraphFamily::complete, GraphFamily::empty}) {
    EXPECT_EQ(parse_family(to_string(f)), f);
  }
  EXPECT_FALSE(parse_family("petersen").has_value());
}

TEST(GenerateTest, AllFamiliesSatisfyGraphInvariants) {
  std::vector<GraphFamilySpec> specs;
  specs.push_back({GraphFamily::roberts, 8});
  specs.push_back({GraphFamily::roberts_path, 0, 15, 6});
  specs.push_back({GraphFamily::gnm, 0, 25, 0, 60, 0.0, 9});
  specs.push_back({GraphFamily::gnp, 0, 25, 0, 0, 0.3, 9});
  specs.push_back({GraphFamily::path, 0, 7});
  specs.push_back({GraphFamily::complete, 0, 7});
  specs.push_back({GraphFamily::empty, 0, 7});
  for (const auto& s : specs) {
    const Graph g = generate(s);
    std::size_t twice = 0;
    for (Vertex v = 1; v <= g.order(); ++v) {
      twice += g.degree(v);
      for (const Vertex w : g.neighbors(v)) {
        EXPECT_TRUE(g.has_edge(w, v));
        EXPECT_NE(w, v);
      }
    }
    EXPECT_EQ(twice, 2 * g.size()) << to_string(s.family);
  }
}

}  // namespace
}  // namespace boxicity
