#include "gd/io.hpp"

#include <fstream>
#include <sstream>

#include "gd/error.hpp"

namespace gd {

namespace {

[[noreturn]] void fail(int line, const std::string& why) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + why);
}

// Parses a non-negative decimal token, rejecting signs and trailing junk.
long parse_count(const std::string& tok, int line) {
  if (tok.empty() || tok.size() > 9 || tok.find_first_not_of("0123456789") != std::string::npos)
    fail(line, "expected a non-negative integer, got '" + tok + "'");
  return std::stol(tok);
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string text;
  int line_no = 0;
  bool have_header = false;
  long n = 0, m = 0, seen = 0;
  Graph g;
  while (std::getline(in, text)) {
    ++line_no;
    if (!text.empty() && text.back() == '\r') fail(line_no, "CR line endings are not accepted");
    std::istringstream ls(text);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    std::vector<std::string> rest;
    for (std::string tok; ls >> tok;) rest.push_back(tok);
    if (tag == "p") {
      if (have_header) fail(line_no, "second problem line");
      if (rest.size() != 3 || rest[0] != "edge") fail(line_no, "expected 'p edge <n> <m>'");
      n = parse_count(rest[1], line_no);
      m = parse_count(rest[2], line_no);
      g = Graph(static_cast<int>(n));
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) fail(line_no, "edge before the problem line");
      if (rest.size() != 2) fail(line_no, "expected 'e <u> <v>'");
      long u = parse_count(rest[0], line_no), v = parse_count(rest[1], line_no);
      if (u < 1 || u > n || v < 1 || v > n) fail(line_no, "vertex id out of range 1.." + std::to_string(n));
      if (u == v) fail(line_no, "self-loop at " + std::to_string(u));
      if (g.has_edge(static_cast<int>(u - 1), static_cast<int>(v - 1)))
        fail(line_no, "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
      if (++seen > m) fail(line_no, "more edges than declared");
      g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
    } else {
      fail(line_no, "unknown line type '" + tag + "'");
    }
  }
  if (!have_header) fail(line_no, "missing 'p edge <n> <m>' line");
  if (seen != m) fail(line_no, "declared " + std::to_string(m) + " edges, found " + std::to_string(seen));
  return g;
}

Graph parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << "p edge " << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

std::string format_graph(const Graph& g, const std::vector<std::string>& comments) {
  std::ostringstream out;
  write_graph(out, g, comments);
  return out.str();
}

}  // namespace gd
