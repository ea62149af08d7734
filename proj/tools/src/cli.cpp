#include "boxicity/cli.hpp"

#include "boxicity/derand.hpp"
#include "boxicity/generators.hpp"
#include "boxicity/graph_io.hpp"
#include "boxicity/oracle.hpp"
#include "boxicity/rand_build.hpp"
#include "boxicity/rational.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace boxicity::cli {

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::size_t bench_edge_count(std::size_t n, double c) {
  return static_cast<std::size_t>(std::ceil(c * static_cast<double>(n) / 2.0));
}

double bench_case_one_bound(double c, std::size_t n) {
  return (6.0 * c + 2.0) * std::log(static_cast<double>(n));
}

std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
  if (cfg.n < 2) {
    throw std::invalid_argument("bench needs n >= 2");
  }
  if (!(cfg.c >= 0.0) || !std::isfinite(cfg.c)) {
    throw std::invalid_argument("bench needs a finite c >= 0");
  }
  const std::size_t m = bench_edge_count(cfg.n, cfg.c);
  if (m > cfg.n * (cfg.n - 1) / 2) {
    throw std::invalid_argument("c too large: m = " + std::to_string(m) +
                                " exceeds n(n-1)/2");
  }
  const double c_av = 2.0 * static_cast<double>(m) / static_cast<double>(cfg.n);

  std::vector<BenchRow> rows;
  rows.reserve(cfg.samples);
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    Rng rng(derive_seed(cfg.seed, {s}));
    const Graph g = gnm_graph(cfg.n, m, rng);
    BenchRow row;
    row.n = cfg.n;
    row.m = m;
    row.c = c_av;
    row.seed = cfg.seed;
    row.sample = s;
    row.delta = g.max_degree();
    row.bound = degree_dimension_bound(cfg.n, row.delta);
    row.delta_lt_6c = static_cast<double>(row.delta) < 6.0 * c_av;
    try {
      BoxRepresentation rep;
      switch (cfg.method) {
        case BenchMethod::rand: {
          RandBuildConfig rc;
          rc.seed = derive_seed(cfg.seed, {s, 1});
          rep = build_randomized(g, rc).rep;
          break;
        }
        case BenchMethod::derand:
          rep = build_derandomized(g);
          break;
        case BenchMethod::split: {
          RandBuildConfig rc;
          rc.seed = derive_seed(cfg.seed, {s, 1});
          rep = build_split(g, rc, BuildMethod::derandomized).rep;
          break;
        }
      }
      row.dim = rep.dimension();
      row.valid = verify(g, rep).valid;
    } catch (const std::exception&) {
      row.valid = false;
    }
    rows.push_back(row);
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "n,m,c,seed,sample,delta,dim,bound,delta_lt_6c,valid\n";
  for (const BenchRow& r : rows) {
    os << r.n << ',' << r.m << ',' << format_double(r.c) << ',' << r.seed
       << ',' << r.sample << ',' << r.delta << ',' << r.dim << ',' << r.bound
       << ',' << (r.delta_lt_6c ? "true" : "false") << ','
       << (r.valid ? "true" : "false") << '\n';
  }
  return os.str();
}

namespace {

Graph load_graph(const std::string& path, std::ostream& err) {
  GraphParseResult r = read_graph_file(path);
  for (const std::string& w : r.warnings) {
    err << path << ": warning: " << w << '\n';
  }
  return std::move(r.graph);
}

void print_graph_stats(const Graph& g, std::ostream& os) {
  const double d_av =
      g.order() == 0 ? 0.0
                     : 2.0 * static_cast<double>(g.size()) /
                           static_cast<double>(g.order());
  os << "n=" << g.order() << " m=" << g.size() << " delta=" << g.max_degree()
     << " d_av=" << format_double(d_av) << '\n';
}

struct GenArgs {
  std::string type;
  GraphFamilySpec spec;
  std::string out;
};

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  const auto family = parse_family(a.type);
  if (!family) {
    err << "error: unknown graph type '" << a.type << "'\n";
    return kUsage;
  }
  GraphFamilySpec spec = a.spec;
  spec.family = *family;
  const Graph g = generate(spec);
  std::vector<std::string> comments{"type " + a.type};
  if (spec.family == GraphFamily::gnm || spec.family == GraphFamily::gnp) {
    comments.push_back("seed " + std::to_string(spec.seed));
  }
  const std::string text = write_graph(g, comments);
  if (a.out.empty()) {
    out << text;
    print_graph_stats(g, err);
  } else {
    write_text_file(a.out, text);
    print_graph_stats(g, out);
  }
  return kOk;
}

struct BuildArgs {
  std::string method;
  std::string in;
  std::string out;
  std::uint64_t seed = 0;
  std::optional<std::size_t> t_override;
  std::optional<std::size_t> max_attempts;
};

int cmd_build(const BuildArgs& a, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(a.in, err);
  RandBuildConfig cfg;
  cfg.seed = a.seed;
  cfg.t_override = a.t_override;
  cfg.max_attempts = a.max_attempts;

  const std::size_t n = g.order();
  const std::size_t delta = g.max_degree();
  BoxRepresentation rep;
  std::size_t bound = 0;
  bool enforce_bound = false;
  try {
    if (a.method == "rand") {
      const RandBuildResult r = build_randomized(g, cfg);
      rep = r.rep;
      bound = degree_dimension_bound(n, delta);
      out << "attempts " << r.attempts << '\n';
      enforce_bound = !a.t_override.has_value();
    } else if (a.method == "derand") {
      DerandStats stats;
      rep = build_derandomized(g, &stats);
      bound = degree_dimension_bound(n, delta);
      enforce_bound = true;
      out << "covered";
      for (const std::size_t c : stats.covered_per_dimension) {
        out << ' ' << c;
      }
      out << '\n';
      const std::size_t h = g.non_edges().size();
      if (delta >= 2 && h >= 1) {
        out << "estimate " << format_double(sharper_dimension_estimate(delta, h))
            << " (delta^2/(2(delta-1)) ln h)\n";
      }
    } else {
      const SplitBuildResult r =
          build_split(g, cfg, BuildMethod::derandomized);
      rep = r.rep;
      bound = split_dimension_bound(g.size(), n);
      enforce_bound = r.connected;
      out << "high-degree " << r.high_degree.size() << '\n';
      out << "core-dimension " << r.core_dimension << '\n';
      if (!r.connected) {
        out << "note: graph is disconnected; bound not guaranteed\n";
      }
    }
  } catch (const AttemptsExhausted& e) {
    err << "error: " << e.what() << '\n';
    err << "misses per attempt:";
    for (const std::size_t m : e.misses()) {
      err << ' ' << m;
    }
    err << '\n';
    return kExhausted;
  }

  out << "dimension " << rep.dimension() << '\n';
  if (a.method == "split") {
    out << "bound " << bound << " (ceil(5 sqrt(m ln n)))\n";
  } else {
    out << "bound " << bound << " (ceil((delta+2) ln n))\n";
  }
  const VerifyReport report = verify(g, rep);
  if (!report.valid) {
    err << "error: representation failed verification\n";
    return kInvalid;
  }
  if (enforce_bound && rep.dimension() > bound) {
    err << "error: dimension " << rep.dimension() << " exceeds bound " << bound
        << '\n';
    return kInvalid;
  }
  if (!a.out.empty()) {
    write_text_file(a.out, serialize(rep));
  }
  return kOk;
}

int cmd_verify(const std::string& graph_path, const std::string& rep_path,
               std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(graph_path, err);
  const BoxRepresentation rep = deserialize(read_text_file(rep_path));
  if (rep.n != g.order()) {
    out << "invalid: representation has " << rep.n << " vertices, graph has "
        << g.order() << '\n';
    return kInvalid;
  }
  const VerifyReport r = verify(g, rep);
  out << (r.valid ? "valid" : "invalid") << " dimension " << r.dimension
      << '\n';
  for (const MissingEdge& me : r.missing_edges) {
    out << "missing " << me.edge.u << ' ' << me.edge.v << " dim " << me.dim
        << '\n';
  }
  for (const Edge& e : r.extra_edges) {
    out << "extra " << e.u << ' ' << e.v << '\n';
  }
  return r.valid ? kOk : kInvalid;
}

struct BenchArgs {
  BenchConfig cfg;
  std::string method = "derand";
  std::string csv;
};

int cmd_bench(BenchArgs a, std::ostream& out, std::ostream& err) {
  if (a.method == "rand") {
    a.cfg.method = BenchMethod::rand;
  } else if (a.method == "split") {
    a.cfg.method = BenchMethod::split;
  } else {
    a.cfg.method = BenchMethod::derand;
  }
  const std::vector<BenchRow> rows = run_bench(a.cfg);
  const std::string csv = bench_csv(rows);
  std::ostream& summary = a.csv.empty() ? err : out;
  if (a.csv.empty()) {
    out << csv;
  } else {
    write_text_file(a.csv, csv);
  }

  std::size_t below = 0;
  std::size_t valid = 0;
  std::size_t within = 0;
  for (const BenchRow& r : rows) {
    below += r.delta_lt_6c ? 1 : 0;
    if (r.valid) {
      ++valid;
      within += static_cast<double>(r.dim) <= bench_case_one_bound(r.c, r.n)
                    ? 1
                    : 0;
    }
  }
  const auto frac = [](std::size_t k, std::size_t total) {
    return total == 0 ? std::string("-")
                      : format_double(static_cast<double>(k) /
                                      static_cast<double>(total));
  };
  summary << "samples " << rows.size() << '\n';
  summary << "delta < 6c: " << below << '/' << rows.size() << " ("
          << frac(below, rows.size()) << ")\n";
  summary << "dim <= (6c+2) ln n: " << within << '/' << valid << " valid ("
          << frac(within, valid) << ")\n";
  if (!rows.empty() && valid == 0) {
    err << "error: every sample failed\n";
    return kInvalid;
  }
  return kOk;
}

struct OracleArgs {
  std::string in;
  Vertex u = 0;
  Vertex v = 0;
  std::vector<Vertex> prefix;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Build, verify and benchmark box representations of graphs",
               "boxctl"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph");
  gen_cmd->add_option("--type", gen.type,
                      "roberts|roberts-path|gnm|gnp|path|complete|empty")
      ->required();
  gen_cmd->add_option("--k", gen.spec.k, "Roberts graph order");
  gen_cmd->add_option("--n", gen.spec.n, "Vertex count");
  gen_cmd->add_option("--n1", gen.spec.n1, "Roberts part of roberts-path");
  gen_cmd->add_option("--m", gen.spec.m, "Edge count for gnm");
  gen_cmd->add_option("--p", gen.spec.p, "Edge probability for gnp");
  gen_cmd->add_option("--seed", gen.spec.seed, "Random seed");
  gen_cmd->add_option("--out", gen.out, "Output file (default: stdout)");

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "Build a box representation");
  build_cmd->add_option("--method", build.method)
      ->required()
      ->check(CLI::IsMember({"rand", "derand", "split"}));
  build_cmd->add_option("--in", build.in, "Graph file")->required();
  build_cmd->add_option("--out", build.out, "Representation file");
  build_cmd->add_option("--seed", build.seed);
  build_cmd->add_option("--t-override", build.t_override,
                        "Dimensions per randomized attempt");
  build_cmd->add_option("--max-attempts", build.max_attempts);

  std::string verify_graph;
  std::string verify_rep;
  auto* verify_cmd =
      app.add_subcommand("verify", "Check a representation against a graph");
  verify_cmd->add_option("--graph", verify_graph)->required();
  verify_cmd->add_option("--rep", verify_rep)->required();

  BenchArgs bench;
  auto* bench_cmd =
      app.add_subcommand("bench", "G(n,m) degree and dimension benchmark");
  bench_cmd->add_option("--n", bench.cfg.n);
  bench_cmd->add_option("--c", bench.cfg.c, "Average degree; m = ceil(cn/2)");
  bench_cmd->add_option("--samples", bench.cfg.samples);
  bench_cmd->add_option("--seed", bench.cfg.seed);
  bench_cmd->add_option("--method", bench.method)
      ->check(CLI::IsMember({"rand", "derand", "split"}));
  bench_cmd->add_option("--csv", bench.csv, "CSV file (default: stdout)");

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force answers");
  oracle_cmd->require_subcommand(1);
  auto* box_cmd = oracle_cmd->add_subcommand("box", "Exact boxicity");
  box_cmd->add_option("--in", oracle.in)->required();
  auto* edge_cmd = oracle_cmd->add_subcommand(
      "edgeprob", "Probability that a non-edge is added");
  edge_cmd->add_option("--in", oracle.in)->required();
  edge_cmd->add_option("--u", oracle.u)->required();
  edge_cmd->add_option("--v", oracle.v)->required();
  auto* cond_cmd = oracle_cmd->add_subcommand(
      "condprob", "Probability that a non-edge survives, given a prefix");
  cond_cmd->add_option("--in", oracle.in)->required();
  cond_cmd->add_option("--u", oracle.u)->required();
  cond_cmd->add_option("--v", oracle.v)->required();
  cond_cmd->add_option("--prefix", oracle.prefix, "Comma-separated vertices")
      ->delimiter(',');

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen_cmd->parsed()) {
      return cmd_gen(gen, out, err);
    }
    if (build_cmd->parsed()) {
      return cmd_build(build, out, err);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(verify_graph, verify_rep, out, err);
    }
    if (bench_cmd->parsed()) {
      return cmd_bench(bench, out, err);
    }
    const Graph g = load_graph(oracle.in, err);
    if (box_cmd->parsed()) {
      out << boxicity_exact(g) << '\n';
    } else if (edge_cmd->parsed()) {
      out << to_string(edge_prob_exact(g, oracle.u, oracle.v)) << '\n';
    } else {
      const PartialPermutation pp(g, oracle.prefix);
      out << to_string(cond_prob_exact(g, pp, Edge(oracle.u, oracle.v)))
          << '\n';
    }
    return kOk;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const OracleLimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kOracleLimit;
  } catch (const VerificationFailure& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const AttemptsExhausted& e) {
    err << "error: " << e.what() << '\n';
    return kExhausted;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace boxicity::cli
