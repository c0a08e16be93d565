#include "isospec/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "isospec/error.hpp"

namespace isospec {

namespace {

bool next_content_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

// Reads exactly two integers from a line, rejecting trailing garbage.
void parse_pair(const std::string& line, int line_no, long long& a, long long& b) {
  std::istringstream fields(line);
  std::string rest;
  if (!(fields >> a >> b) || (fields >> rest)) {
    throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected two integers, got '" + line + "'");
  }
}

}  // namespace

SimpleGraph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!next_content_line(in, line, line_no)) throw Error(ErrorKind::Parse, "missing 'n m' header line");
  long long n = 0;
  long long m = 0;
  parse_pair(line, line_no, n, m);
  if (n < 1 || m < 0) throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": bad header '" + line + "'");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line(in, line, line_no)) {
      throw Error(ErrorKind::Parse, "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    }
    long long u = 0;
    long long v = 0;
    parse_pair(line, line_no, u, v);
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorKind::VertexOutOfRange, "line " + std::to_string(line_no) + ": vertex outside 0.." +
                                                   std::to_string(n - 1));
    }
    edges.push_back(Edge{static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (next_content_line(in, line, line_no)) {
    throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": unexpected content after " +
                                      std::to_string(m) + " edges");
  }
  return SimpleGraph::build(static_cast<int>(n), edges);
}

SimpleGraph read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path.string() + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const SimpleGraph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_dot(std::ostream& out, const SimpleGraph& g, const std::string& name) {
  out << "graph";
  if (!name.empty()) out << " \"" << name << '"';
  out << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
}

}  // namespace isospec
