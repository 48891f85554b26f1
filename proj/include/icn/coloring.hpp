#ifndef ICN_COLORING_HPP
#define ICN_COLORING_HPP

#include <vector>

#include "icn/contention_graph.hpp"

namespace icn {

/// Vertex coloring; -1 marks an uncolored vertex, which constrains nothing.
struct Coloring {
  std::vector<int> color_of;
};

/// Greedy coloring in descending-degree order, ties broken by vertex index.
/// Deterministic, always proper, colors every vertex.
Coloring greedy_coloring(const ContentionGraph& g);

/// Number of distinct colors used (uncolored vertices ignored).
int color_count(const Coloring& c);

/// True iff the coloring is proper on g and uses at most q colors.
bool verify_coloring(const ContentionGraph& g, const Coloring& c, int q);

/// Exact maximum clique via branch-and-bound with degree-order pruning.
/// Intended for graphs up to a few dozen vertices.
int max_clique_size(const ContentionGraph& g);

/// 6W-6 with W the maximum clique size when the graph came from a unit-disk
/// layout; otherwise the greedy color count.
int chromatic_upper_bound(const ContentionGraph& g);

} // namespace icn

#endif
