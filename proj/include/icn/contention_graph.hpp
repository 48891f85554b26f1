#ifndef ICN_CONTENTION_GRAPH_HPP
#define ICN_CONTENTION_GRAPH_HPP

#include <utility>
#include <vector>

namespace icn {

using Edge = std::pair<int, int>;

/// Contention graph: one vertex per link, an edge between links whose
/// transmitters carrier-sense each other. Immutable after construction;
/// safe to share across threads.
class ContentionGraph {
public:
  ContentionGraph() = default;

  /// Edges are normalized to (min,max) and deduplicated. Self-loops and
  /// out-of-range endpoints are rejected.
  ContentionGraph(int n_vertices, std::vector<Edge> edge_list,
                  bool unit_disk = false);

  int n_vertices() const { return n_; }
  int n_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;

  /// True when the graph came from a unit-disk layout; controls which
  /// chromatic upper bound the coloring tools report.
  bool unit_disk() const { return unit_disk_; }

private:
  int n_ = 0;
  std::vector<Edge> edges_;             // sorted, unique, first < second
  std::vector<std::vector<int>> adj_;
  bool unit_disk_ = false;
};

} // namespace icn

#endif
