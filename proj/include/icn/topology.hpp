#ifndef ICN_TOPOLOGY_HPP
#define ICN_TOPOLOGY_HPP

#include <array>
#include <vector>

#include "icn/contention_graph.hpp"

namespace icn {

/// Ring of n vertices where each vertex senses its l nearest neighbors on
/// both sides (degree 2l). Requires n >= 2 and 1 <= l < n/2; larger l would
/// wrap neighbor windows onto themselves.
ContentionGraph make_ring(int n, int l = 1);

/// Open-ended chain: edge (i,j) iff |i-j| <= l. Requires n >= 2, 1 <= l < n.
ContentionGraph make_linear(int n, int l = 1);

/// m x n wrap-around grid; every vertex has four neighbors. Requires
/// m, n >= 3 (smaller dimensions would duplicate the wrap edges).
ContentionGraph make_torus(int m, int n);

/// One repeating unit of a strip: a small contention graph that gets
/// instantiated per unit.
struct StripUnit {
  int n_vertices = 0;
  std::vector<Edge> edges;
};

/// Strip of n_units copies of `unit`. Each coupling pair (a,b) adds an edge
/// between vertex a of unit i and vertex b of unit i+1; closed strips wrap
/// the last unit back to the first. Vertex v of unit i maps to the global
/// index i*unit.n_vertices + v.
ContentionGraph make_strip(const StripUnit& unit,
                           const std::vector<Edge>& coupling, int n_units,
                           bool closed);

/// Two adjacent vertices per unit, coupled top-to-top and bottom-to-bottom:
/// the strip becomes a (circular) ladder.
StripUnit ladder_unit();
std::vector<Edge> ladder_coupling();

/// Transmitter positions on the plane plus a common carrier-sensing range.
struct NodeLayout {
  std::vector<std::array<double, 2>> positions;
  double cs_range = 1.0;
};

/// Unit-disk contention graph: edge iff euclidean distance is strictly less
/// than the carrier-sensing range.
ContentionGraph make_unit_disk(const NodeLayout& layout);

} // namespace icn

#endif
