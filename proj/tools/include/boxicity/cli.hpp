#ifndef BOXICITY_CLI_HPP
#define BOXICITY_CLI_HPP

#include "boxicity/split_build.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace boxicity::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,  // also I/O and parse errors
  kInvalid = 2,
  kExhausted = 3,
  kOracleLimit = 4,
};

enum class BenchMethod { rand, derand, split };

struct BenchConfig {
  std::size_t n = 100;
  double c = 10.0;
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  BenchMethod method = BenchMethod::derand;
};

struct BenchRow {
  std::size_t n = 0;
  std::size_t m = 0;
  double c = 0.0;  // 2m/n
  std::uint64_t seed = 0;
  std::size_t sample = 0;
  std::size_t delta = 0;
  std::size_t dim = 0;
  std::size_t bound = 0;  // ceil((delta + 2) ln n)
  bool delta_lt_6c = false;
  bool valid = false;
};

/// ceil(c n / 2).
std::size_t bench_edge_count(std::size_t n, double c);

/// One G(n, m) graph per sample, each from the substream (seed, sample), then
/// build and verify. A builder that throws leaves valid = false in its row.
std::vector<BenchRow> run_bench(const BenchConfig& cfg);

/// "n,m,c,seed,sample,delta,dim,bound,delta_lt_6c,valid" plus one line per
/// row.
std::string bench_csv(const std::vector<BenchRow>& rows);

/// (6c + 2) ln n.
double bench_case_one_bound(double c, std::size_t n);

/// Shortest round-trip decimal form.
std::string format_double(double x);

/// Runs `boxctl` with argv[1..] in `args`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace boxicity::cli

#endif  // BOXICITY_CLI_HPP
