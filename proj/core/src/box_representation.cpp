#include "boxicity/box_representation.hpp"

#include "boxicity/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace boxicity {

bool BoxRepresentation::adjacent(Vertex u, Vertex v) const {
  return std::all_of(dims.begin(), dims.end(),
                     [&](const IntervalRepresentation& d) {
                       return d.adjacent(u, v);
                     });
}

namespace {

VerifyReport verify_impl(const Graph& g, const BoxRepresentation& rep,
                         const std::vector<char>& skipped) {
  if (rep.n != g.order()) {
    throw std::invalid_argument(
        "representation has " + std::to_string(rep.n) +
        " vertices but the graph has " + std::to_string(g.order()));
  }
  for (const auto& d : rep.dims) {
    if (d.order() != rep.n) {
      throw std::invalid_argument("dimension with the wrong vertex count");
    }
  }
  VerifyReport report;
  report.dimension = rep.dimension();
  const auto skip = [&](const Edge& e) {
    return skipped[e.u] != 0 || skipped[e.v] != 0;
  };
  for (const Edge& e : g.edges()) {
    if (skip(e)) {
      continue;
    }
    for (std::size_t j = 0; j < rep.dims.size(); ++j) {
      if (!rep.dims[j].adjacent(e.u, e.v)) {
        report.missing_edges.push_back({e, j + 1});
      }
    }
  }
  for (const Edge& e : g.non_edges()) {
    if (!skip(e) && rep.adjacent(e.u, e.v)) {
      report.extra_edges.push_back(e);
    }
  }
  report.valid = report.missing_edges.empty() && report.extra_edges.empty();
  return report;
}

}  // namespace

VerifyReport verify(const Graph& g, const BoxRepresentation& rep) {
  return verify_impl(g, rep, std::vector<char>(g.order() + 1, 0));
}

VerifyReport verify_without(const Graph& g, const BoxRepresentation& rep,
                            std::span<const Vertex> skip) {
  std::vector<char> skipped(g.order() + 1, 0);
  for (const Vertex v : skip) {
    if (!g.contains(v)) {
      throw std::invalid_argument("verify_without: vertex out of range");
    }
    skipped[v] = 1;
  }
  return verify_impl(g, rep, skipped);
}

BoxRepresentation add_vertex_dimension(const BoxRepresentation& rep, Vertex v,
                                       std::span<const Vertex> nbrs) {
  if (v < 1 || v > rep.n + 1) {
    throw std::invalid_argument("add_vertex_dimension: vertex out of range");
  }
  const std::size_t n = std::max<std::size_t>(rep.n, v);
  std::vector<char> is_nbr(n + 1, 0);
  for (const Vertex w : nbrs) {
    if (w < 1 || w > n || w == v) {
      throw std::invalid_argument(
          "add_vertex_dimension: bad neighbour " + std::to_string(w));
    }
    is_nbr[w] = 1;
  }

  BoxRepresentation out;
  out.n = n;
  out.dims.reserve(rep.dims.size() + 1);
  for (const auto& d : rep.dims) {
    if (d.order() != rep.n) {
      throw std::invalid_argument(
          "add_vertex_dimension: dimension with the wrong vertex count");
    }
    std::vector<Interval> ivs(d.intervals().begin(), d.intervals().end());
    ivs.resize(n);
    // span of everything except v
    Interval cover{std::numeric_limits<std::int64_t>::max(),
                   std::numeric_limits<std::int64_t>::min()};
    for (Vertex w = 1; w <= n; ++w) {
      if (w != v) {
        cover.lo = std::min(cover.lo, ivs[w - 1].lo);
        cover.hi = std::max(cover.hi, ivs[w - 1].hi);
      }
    }
    if (n == 1) {
      cover = Interval{0, 0};
    }
    ivs[v - 1] = cover;
    out.dims.emplace_back(std::move(ivs));
  }

  std::vector<Interval> extra(n);
  for (Vertex w = 1; w <= n; ++w) {
    if (w == v) {
      extra[w - 1] = {0, 0};
    } else if (is_nbr[w]) {
      extra[w - 1] = {0, 1};
    } else {
      extra[w - 1] = {1, 2};
    }
  }
  out.dims.emplace_back(std::move(extra));
  return out;
}

BoxRepresentation add_vertex_dimension(const Graph& g,
                                       const BoxRepresentation& rep, Vertex v) {
  if (!g.contains(v)) {
    throw std::invalid_argument("add_vertex_dimension: vertex out of range");
  }
  if (rep.n == g.order()) {
    const Vertex skip[] = {v};
    if (!verify_without(g, rep, skip).valid) {
      throw std::invalid_argument(
          "add_vertex_dimension: input does not represent G - v");
    }
  } else if (rep.n + 1 == g.order() && v == g.order()) {
    BoxRepresentation padded = rep;
    padded.n = g.order();
    for (auto& d : padded.dims) {
      std::vector<Interval> ivs(d.intervals().begin(), d.intervals().end());
      ivs.push_back({0, 0});
      d = IntervalRepresentation(std::move(ivs));
    }
    const Vertex skip[] = {v};
    if (!verify_without(g, padded, skip).valid) {
      throw std::invalid_argument(
          "add_vertex_dimension: input does not represent G - v");
    }
  } else {
    throw std::invalid_argument(
        "add_vertex_dimension: representation size does not match graph");
  }
  return add_vertex_dimension(rep, v, g.neighbors(v));
}

IntervalRepresentation matching_interval_layout(const Graph& g) {
  if (g.max_degree() > 1) {
    throw std::invalid_argument(
        "matching_interval_layout: maximum degree exceeds 1");
  }
  std::vector<Vertex> order;
  order.reserve(g.order());
  std::vector<char> placed(g.order() + 1, 0);
  for (Vertex u = 1; u <= g.order(); ++u) {
    if (placed[u]) {
      continue;
    }
    placed[u] = 1;
    order.push_back(u);
    for (const Vertex w : g.neighbors(u)) {
      placed[w] = 1;
      order.push_back(w);
    }
  }
  return interval_supergraph(g, Permutation::from_order(std::move(order)));
}

std::string serialize(const BoxRepresentation& rep) {
  std::ostringstream out;
  out << "boxrep " << rep.n << ' ' << rep.dims.size() << '\n';
  for (std::size_t j = 0; j < rep.dims.size(); ++j) {
    out << "dim " << (j + 1) << '\n';
    const auto& d = rep.dims[j];
    for (Vertex v = 1; v <= rep.n; ++v) {
      out << v << ' ' << d[v].lo << ' ' << d[v].hi << '\n';
    }
  }
  return out.str();
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool next(std::string_view& line) {
    if (pos_ >= text_.size()) {
      return false;
    }
    std::size_t eol = text_.find('\n', pos_);
    if (eol == std::string_view::npos) {
      eol = text_.size();
    }
    line = text_.substr(pos_, eol - pos_);
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    pos_ = eol + 1;
    ++line_no_;
    return true;
  }

  std::size_t line_no() const { return line_no_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

template <typename T>
std::vector<T> parse_fields(std::string_view line, std::size_t count,
                            std::size_t line_no) {
  std::vector<T> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') {
      ++i;
    }
    if (i >= line.size()) {
      break;
    }
    const char* first = line.data() + i;
    const char* last = line.data() + line.size();
    T value{};
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || (ptr != last && *ptr != ' ')) {
      throw ParseError(line_no, "expected an integer");
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  if (out.size() != count) {
    throw ParseError(line_no, "expected " + std::to_string(count) +
                                  " fields, found " +
                                  std::to_string(out.size()));
  }
  return out;
}

std::string_view strip_keyword(std::string_view line, std::string_view kw,
                               std::size_t line_no) {
  if (line.substr(0, kw.size()) != kw || line.size() == kw.size() ||
      line[kw.size()] != ' ') {
    throw ParseError(line_no, "expected '" + std::string(kw) + " ...'");
  }
  return line.substr(kw.size() + 1);
}

}  // namespace

BoxRepresentation deserialize(std::string_view text) {
  LineReader reader(text);
  std::string_view line;
  if (!reader.next(line)) {
    throw ParseError(0, "empty box representation");
  }
  const auto header = parse_fields<std::uint64_t>(
      strip_keyword(line, "boxrep", reader.line_no()), 2, reader.line_no());
  BoxRepresentation rep;
  rep.n = header[0];
  const std::uint64_t t = header[1];
  if (rep.n > std::numeric_limits<Vertex>::max()) {
    throw ParseError(reader.line_no(), "vertex count too large");
  }

  for (std::uint64_t j = 1; j <= t; ++j) {
    if (!reader.next(line)) {
      throw ParseError(reader.line_no() + 1,
                       "truncated: missing 'dim " + std::to_string(j) + "'");
    }
    const auto idx = parse_fields<std::uint64_t>(
        strip_keyword(line, "dim", reader.line_no()), 1, reader.line_no());
    if (idx[0] != j) {
      throw ParseError(reader.line_no(),
                       "expected 'dim " + std::to_string(j) + "'");
    }
    std::vector<Interval> ivs;
    ivs.reserve(rep.n);
    for (std::uint64_t v = 1; v <= rep.n; ++v) {
      if (!reader.next(line)) {
        throw ParseError(reader.line_no() + 1,
                         "truncated: dimension " + std::to_string(j) +
                             " ends before vertex " + std::to_string(v));
      }
      const auto f =
          parse_fields<std::int64_t>(line, 3, reader.line_no());
      if (f[0] != static_cast<std::int64_t>(v)) {
        throw ParseError(reader.line_no(),
                         "expected vertex " + std::to_string(v));
      }
      if (f[1] > f[2]) {
        throw ParseError(reader.line_no(), "left end exceeds right end");
      }
      ivs.push_back({f[1], f[2]});
    }
    rep.dims.emplace_back(std::move(ivs));
  }
  while (reader.next(line)) {
    if (!line.empty()) {
      throw ParseError(reader.line_no(), "unexpected trailing content");
    }
  }
  return rep;
}

}  // namespace boxicity
