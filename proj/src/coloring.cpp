#include "icn/coloring.hpp"

#include <algorithm>
#include <numeric>

namespace icn {

Coloring greedy_coloring(const ContentionGraph& g) {
  const int n = g.n_vertices();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  Coloring c{std::vector<int>(n, -1)};
  std::vector<char> used;
  for (int v : order) {
    used.assign(n + 1, 0);
    for (int w : g.neighbors(v))
      if (c.color_of[w] >= 0) used[c.color_of[w]] = 1;
    int col = 0;
    while (used[col]) ++col;
    c.color_of[v] = col;
  }
  return c;
}

int color_count(const Coloring& c) {
  int m = 0;
  for (int col : c.color_of) m = std::max(m, col + 1);
  return m;
}

bool verify_coloring(const ContentionGraph& g, const Coloring& c, int q) {
  if (static_cast<int>(c.color_of.size()) != g.n_vertices()) return false;
  for (int col : c.color_of)
    if (col >= q) return false;
  for (const auto& [u, v] : g.edges())
    if (c.color_of[u] >= 0 && c.color_of[u] == c.color_of[v]) return false;
  return true;
}

namespace {

struct CliqueSearch {
  const ContentionGraph& g;
  std::vector<int> order;     // descending degree
  std::vector<int> rank;      // position in order
  int best = 0;

  explicit CliqueSearch(const ContentionGraph& graph) : g(graph) {
    const int n = g.n_vertices();
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
      return a < b;
    });
    rank.resize(n);
    for (int i = 0; i < n; ++i) rank[order[i]] = i;
  }

  void expand(std::vector<int>& cand, int size) {
    if (cand.empty()) {
      best = std::max(best, size);
      return;
    }
    while (!cand.empty()) {
      if (size + static_cast<int>(cand.size()) <= best) return;
      const int v = cand.back();
      cand.pop_back();
      std::vector<int> next;
      for (int w : cand)
        if (g.has_edge(v, w)) next.push_back(w);
      expand(next, size + 1);
    }
  }
};

} // namespace

int max_clique_size(const ContentionGraph& g) {
  if (g.n_vertices() == 0) return 0;
  CliqueSearch search(g);
  // candidates kept sorted so the highest-degree vertex is tried first
  std::vector<int> cand = search.order;
  std::reverse(cand.begin(), cand.end());
  search.best = 1;
  search.expand(cand, 0);
  return search.best;
}

int chromatic_upper_bound(const ContentionGraph& g) {
  if (g.unit_disk()) return 6 * max_clique_size(g) - 6;
  return color_count(greedy_coloring(g));
}

} // namespace icn
