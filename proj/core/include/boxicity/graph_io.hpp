#ifndef BOXICITY_GRAPH_IO_HPP
#define BOXICITY_GRAPH_IO_HPP

#include "boxicity/graph.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace boxicity {

/// Malformed input; `line()` is 1-based, 0 when the error is not tied to a
/// line (for example a missing header).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " +
                                           what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct GraphParseResult {
  Graph graph;
  std::size_t declared_edges = 0;
  std::size_t duplicate_edges = 0;
  std::vector<std::string> warnings;
};

/// Reads the line-oriented graph format:
///
///   c <comment>
///   p edge <n> <m>
///   e <u> <v>
///
/// Exactly one header, which must precede every edge line. LF and CRLF line
/// ends are accepted. Duplicate edge lines are merged and counted; a declared
/// edge count that differs from the parsed count is reported as a warning.
GraphParseResult parse_graph(std::string_view text);

/// Writes `g` in the same format with LF line ends and edges in
/// lexicographic order. Each entry of `comments` becomes a "c " line.
std::string write_graph(const Graph& g,
                        const std::vector<std::string>& comments = {});

GraphParseResult read_graph_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view contents);
std::string read_text_file(const std::string& path);

}  // namespace boxicity

#endif  // BOXICITY_GRAPH_IO_HPP
