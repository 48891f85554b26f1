#include "icn/contention_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace icn {

ContentionGraph::ContentionGraph(int n_vertices, std::vector<Edge> edge_list,
                                 bool unit_disk)
    : n_(n_vertices), unit_disk_(unit_disk) {
  if (n_vertices < 0)
    throw std::invalid_argument("negative vertex count");
  for (auto& [u, v] : edge_list) {
    if (u == v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw std::invalid_argument("edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edge_list.begin(), edge_list.end());
  edge_list.erase(std::unique(edge_list.begin(), edge_list.end()),
                  edge_list.end());
  edges_ = std::move(edge_list);
  adj_.assign(n_, {});
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool ContentionGraph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

} // namespace icn
