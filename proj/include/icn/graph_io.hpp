#ifndef ICN_GRAPH_IO_HPP
#define ICN_GRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include "icn/contention_graph.hpp"

namespace icn {

// Text format, line oriented: first line the vertex count, then one edge
// per line as "u v" with 0-based indices and u < v, LF terminated.

void write_graph(const ContentionGraph& g, std::ostream& out);
void write_graph_file(const ContentionGraph& g, const std::string& path);

ContentionGraph read_graph(std::istream& in);
ContentionGraph read_graph_file(const std::string& path);

} // namespace icn

#endif
