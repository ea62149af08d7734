#include "boxicity/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

namespace boxicity {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
      ++i;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') {
      ++i;
    }
    if (i > start) {
      out.push_back(line.substr(start, i - start));
    }
  }
  return out;
}

std::uint64_t parse_count(std::string_view tok, std::size_t line,
                          const char* what) {
  std::uint64_t value = 0;
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line, std::string("invalid ") + what + " '" +
                               std::string(tok) + "'");
  }
  return value;
}

}  // namespace

GraphParseResult parse_graph(std::string_view text) {
  GraphParseResult result;
  bool have_header = false;
  std::uint64_t n = 0;
  std::vector<Edge> edges;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) {
      eol = text.size();
    }
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }

    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0] == "c") {
      continue;
    }
    if (tokens[0] == "p") {
      if (have_header) {
        throw ParseError(line_no, "duplicate 'p' header");
      }
      if (tokens.size() != 4 || tokens[1] != "edge") {
        throw ParseError(line_no, "malformed header, expected 'p edge <n> <m>'");
      }
      n = parse_count(tokens[2], line_no, "vertex count");
      result.declared_edges = parse_count(tokens[3], line_no, "edge count");
      if (n > std::numeric_limits<Vertex>::max()) {
        throw ParseError(line_no, "vertex count too large");
      }
      have_header = true;
    } else if (tokens[0] == "e") {
      if (!have_header) {
        throw ParseError(line_no, "edge line before 'p edge' header");
      }
      if (tokens.size() != 3) {
        throw ParseError(line_no, "malformed edge line, expected 'e <u> <v>'");
      }
      const std::uint64_t u = parse_count(tokens[1], line_no, "vertex");
      const std::uint64_t v = parse_count(tokens[2], line_no, "vertex");
      for (const std::uint64_t x : {u, v}) {
        if (x < 1 || x > n) {
          throw ParseError(line_no, "vertex " + std::to_string(x) +
                                        " out of range 1.." +
                                        std::to_string(n));
        }
      }
      if (u == v) {
        throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
      }
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    } else {
      throw ParseError(line_no, "unrecognised line type '" +
                                    std::string(tokens[0]) + "'");
    }
  }
  if (!have_header) {
    throw ParseError(0, "missing 'p edge <n> <m>' header");
  }

  result.graph = Graph(n, edges, &result.duplicate_edges);
  if (result.duplicate_edges > 0) {
    result.warnings.push_back(std::to_string(result.duplicate_edges) +
                              " duplicate edge line(s) ignored");
  }
  if (result.declared_edges != result.graph.size()) {
    result.warnings.push_back(
        "header declares " + std::to_string(result.declared_edges) +
        " edges but " + std::to_string(result.graph.size()) +
        " distinct edges were read");
  }
  return result;
}

std::string write_graph(const Graph& g,
                        const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const auto& c : comments) {
    out << "c " << c << '\n';
  }
  out << "p edge " << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) {
    out << "e " << e.u << ' ' << e.v << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "' for reading");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) {
    throw std::runtime_error("write to '" + path + "' failed");
  }
}

GraphParseResult read_graph_file(const std::string& path) {
  return parse_graph(read_text_file(path));
}

}  // namespace boxicity
