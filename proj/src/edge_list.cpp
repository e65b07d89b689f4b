#include "rlroute/edge_list.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "rlroute/error.hpp"

namespace rlroute {

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.node_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_edge_list(out, g);
}

namespace {

bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_content_line(in, line, line_no)) throw ParseError("empty edge list", 1);

  long long n = 0;
  long long m = 0;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> n >> m) || (header >> extra)) {
      throw ParseError("expected header \"n m\"", line_no);
    }
    if (n <= 0 || m < 0) throw ParseError("header values out of range", line_no);
  }

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  while (next_content_line(in, line, line_no)) {
    std::istringstream row(line);
    long long u = 0;
    long long v = 0;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra)) throw ParseError("expected \"u v\"", line_no);
    if (u < 0 || v >= n || u >= v) {
      throw ParseError("edge must satisfy 0 <= u < v < n", line_no);
    }
    edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
  }
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError("header declares " + std::to_string(m) + " edges but found " +
                         std::to_string(edges.size()),
                     line_no);
  }
  try {
    return Graph::from_edges(static_cast<std::size_t>(n), edges);
  } catch (const InvalidParameter& e) {
    throw ParseError(e.what(), 0);
  }
}

Graph read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string(), 0);
  return read_edge_list(in);
}

}  // namespace rlroute
