// Acceptance suite. One PASS/FAIL line per criterion; exit status is the
// number of failures. Tolerances and time caps are fixed below.

#include "boxicity/cli.hpp"
#include "boxicity/derand.hpp"
#include "boxicity/oracle.hpp"
#include "boxicity/rand_build.hpp"
#include "boxicity/split_build.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "test_support.hpp"

namespace {

using namespace boxicity;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kSeed = 20240601;

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::vector<Graph> small_connected_suite() {
  return testing::connected_graphs_up_to(5);
}

// 1. Edge-presence law against full enumeration.
Verdict presence_law() {
  std::size_t graphs = 0;
  std::size_t pairs = 0;
  std::size_t bad = 0;
  for (const Graph& g : small_connected_suite()) {
    ++graphs;
    for (const Edge& e : g.non_edges()) {
      ++pairs;
      if (edge_prob_exact(g, e.u, e.v) !=
          edge_presence_probability(g, e.u, e.v)) {
        ++bad;
      }
    }
  }
  std::ostringstream os;
  os << graphs << " graphs, " << pairs << " non-edges, " << bad
     << " mismatches";
  return {bad == 0 && pairs > 0, os.str()};
}

// 2. Conditional probabilities against completion enumeration.
Verdict cond_prob_table() {
  std::vector<Graph> graphs = small_connected_suite();
  Rng rng(derive_seed(kSeed, {2}));
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 6 + rng.below(2);
    graphs.push_back(gnp_graph(n, 0.2 + 0.5 * rng.unit(), rng));
  }
  std::size_t checks = 0;
  std::size_t bad = 0;
  for (const Graph& g : graphs) {
    const auto missing = g.non_edges();
    for (int k = 0; k < 200; ++k) {
      const auto pi = random_permutation(g.order(), rng);
      const std::size_t len = rng.below(g.order() + 1);
      PartialPermutation pp(g);
      for (std::size_t i = 1; i <= len; ++i) {
        pp.place(g, pi.at(i));
      }
      if (missing.empty()) {
        continue;
      }
      const auto exact = cond_prob_exact_all(g, pp);
      for (std::size_t i = 0; i < missing.size(); ++i) {
        ++checks;
        bad += cond_prob(g, pp, missing[i]) == exact[i] ? 0 : 1;
      }
    }
  }
  std::ostringstream os;
  os << graphs.size() << " graphs x 200 prefixes, " << checks
     << " comparisons, " << bad << " mismatches";
  return {bad == 0 && checks > 0, os.str()};
}

// 3. Every greedy call meets its coverage guarantee with a monotone chain.
Verdict greedy_guarantee() {
  Rng rng(derive_seed(kSeed, {3}));
  std::size_t calls = 0;
  std::size_t violations = 0;
  int graphs = 0;
  while (graphs < 100) {
    const Graph g = testing::random_graph(rng, 2, 40);
    std::vector<Edge> remaining = g.non_edges();
    if (remaining.empty()) {
      continue;
    }
    ++graphs;
    const std::size_t d = g.max_degree() + 2;
    while (!remaining.empty()) {
      const GreedySupergraph r = derand_supergraph(g, remaining);
      ++calls;
      const std::size_t need = (2 * remaining.size() + d - 1) / d;
      bool ok = r.covered.size() >= need &&
                r.expectation_chain.size() == g.order() + 1;
      for (std::size_t i = 1; ok && i < r.expectation_chain.size(); ++i) {
        ok = r.expectation_chain[i] >= r.expectation_chain[i - 1];
      }
      violations += ok ? 0 : 1;
      if (r.covered.empty()) {
        break;
      }
      std::vector<Edge> rest;
      std::set_difference(remaining.begin(), remaining.end(),
                          r.covered.begin(), r.covered.end(),
                          std::back_inserter(rest));
      remaining = std::move(rest);
    }
  }
  std::ostringstream os;
  os << graphs << " graphs, " << calls << " greedy calls, " << violations
     << " violations";
  return {violations == 0, os.str()};
}

// 4. Derandomized dimension within ceil((delta+2) ln n), reproducible.
Verdict derand_dimension() {
  Rng rng(derive_seed(kSeed, {4}));
  std::size_t bad = 0;
  std::size_t max_dim = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 2 + rng.below(49);
    const std::size_t m = rng.below(n * (n - 1) / 2 + 1);
    const Graph g = gnm_graph(n, m, rng);
    const BoxRepresentation a = build_derandomized(g);
    const BoxRepresentation b = build_derandomized(g);
    const bool ok = verify(g, a).valid && serialize(a) == serialize(b) &&
                    a.dimension() <= degree_dimension_bound(n, g.max_degree());
    bad += ok ? 0 : 1;
    max_dim = std::max(max_dim, a.dimension());
  }
  std::ostringstream os;
  os << "100 G(n,m) with n <= 50, " << bad << " failures, max dimension "
     << max_dim;
  return {bad == 0, os.str()};
}

// 5. Single randomized attempts at t = ceil((delta+2) ln n) on G(30, 60).
Verdict rand_success_rate() {
  Rng rng(derive_seed(kSeed, {5}));
  const Graph g = gnm_graph(30, 60, rng);
  const std::size_t t = degree_dimension_bound(30, g.max_degree());
  std::size_t ok = 0;
  for (std::uint64_t a = 0; a < 200; ++a) {
    ok += rand_attempt(g, t, kSeed, a).misses == 0 ? 1 : 0;
  }
  std::ostringstream os;
  os << "t = " << t << ", " << ok << "/200 attempts succeeded (need 80)";
  return {ok >= 80, os.str()};
}

// 6. Roberts graphs meet the lower bound exactly.
Verdict roberts_tight() {
  const Graph r4 = roberts_graph(4);
  const Graph r6 = roberts_graph(6);
  const int b4 = boxicity_exact(r4);
  const int b6 = boxicity_exact(r6);
  const auto half = [](const Graph& g) {
    return static_cast<int>((g.max_degree() + 2) / 2);
  };
  std::ostringstream os;
  os << "box(R4) = " << b4 << ", box(R6) = " << b6;
  return {b4 == 2 && b6 == 3 && b4 >= half(r4) && b6 >= half(r6), os.str()};
}

// 7. Split construction within ceil(5 sqrt(m ln n)) on connected graphs.
Verdict split_bound() {
  Rng rng(derive_seed(kSeed, {7}));
  std::size_t bad = 0;
  std::size_t builds = 0;
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = 2 + rng.below(59);
    const Graph g = testing::random_connected_graph(rng, n, rng.below(4 * n));
    for (const auto method :
         {BuildMethod::randomized, BuildMethod::derandomized}) {
      RandBuildConfig cfg;
      cfg.seed = derive_seed(kSeed, {7, static_cast<std::uint64_t>(i)});
      const SplitBuildResult r = build_split(g, cfg, method);
      ++builds;
      const bool ok = g.is_connected() && g.size() >= n - 1 &&
                      verify(g, r.rep).valid &&
                      r.rep.dimension() <= split_dimension_bound(g.size(), n);
      bad += ok ? 0 : 1;
    }
  }
  std::ostringstream os;
  os << "30 connected graphs, " << builds << " builds, " << bad
     << " failures";
  return {bad == 0, os.str()};
}

// 8. G(100, 500) benchmark: degree concentration and the dimension bound.
Verdict degree_benchmark() {
  cli::BenchConfig cfg;
  cfg.n = 100;
  cfg.c = 10.0;
  cfg.samples = 100;
  cfg.seed = kSeed;
  cfg.method = cli::BenchMethod::derand;
  const auto rows = cli::run_bench(cfg);
  std::size_t below = 0;
  std::size_t valid = 0;
  std::size_t over = 0;
  for (const auto& r : rows) {
    below += r.delta_lt_6c ? 1 : 0;
    if (r.valid) {
      ++valid;
      over += static_cast<double>(r.dim) > cli::bench_case_one_bound(r.c, r.n)
                  ? 1
                  : 0;
    }
  }
  std::ostringstream os;
  os << below << "/100 with delta < 6c (need 95), " << valid << " valid, "
     << over << " above (6c+2) ln n";
  return {below >= 95 && over == 0, os.str()};
}

struct Criterion {
  const char* name;
  double cap_seconds;
  std::function<Verdict()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"1 edge-presence law (n <= 5, exhaustive)", 10, presence_law},
      {"2 conditional probability table", 60, cond_prob_table},
      {"3 greedy guarantee and monotone chain", 120, greedy_guarantee},
      {"4 derandomized dimension bound", 120, derand_dimension},
      {"5 randomized success rate", 30, rand_success_rate},
      {"6 Roberts graphs are tight", 60, roberts_tight},
      {"7 split dimension bound", 120, split_bound},
      {"8 degree concentration benchmark", 600, degree_benchmark},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = secs < c.cap_seconds;
    const bool pass = v.pass && in_time;
    failures += pass ? 0 : 1;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs / cap %.0fs", secs,
                  c.cap_seconds);
    std::cout << (pass ? "PASS " : "FAIL ") << c.name << ": " << v.detail
              << " [" << timing << (in_time ? "" : ", over time") << "]"
              << std::endl;
  }
  return failures;
}
