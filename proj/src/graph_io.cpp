#include "icn/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace icn {

void write_graph(const ContentionGraph& g, std::ostream& out) {
  out << g.n_vertices() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

void write_graph_file(const ContentionGraph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_graph(g, out);
}

ContentionGraph read_graph(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("graph file is empty");
  int n = 0;
  {
    std::istringstream head(line);
    if (!(head >> n)) throw std::runtime_error("bad vertex count line");
  }
  std::vector<Edge> edges;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream row(line);
    int u, v;
    if (!(row >> u >> v))
      throw std::runtime_error("bad edge at line " + std::to_string(lineno));
    if (u >= v)
      throw std::runtime_error("edge must satisfy u < v at line " +
                               std::to_string(lineno));
    edges.emplace_back(u, v);
  }
  return ContentionGraph(n, std::move(edges));
}

ContentionGraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph(in);
}

} // namespace icn
