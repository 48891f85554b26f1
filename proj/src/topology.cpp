#include "icn/topology.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace icn {

ContentionGraph make_ring(int n, int l) {
  if (n < 2) throw std::invalid_argument("ring needs n >= 2");
  if (l < 1 || 2 * l >= n)
    throw std::invalid_argument("ring requires 1 <= l < n/2, got l=" +
                                std::to_string(l) + " n=" + std::to_string(n));
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= l; ++j) edges.emplace_back(i, (i + j) % n);
  return ContentionGraph(n, std::move(edges));
}

ContentionGraph make_linear(int n, int l) {
  if (n < 2) throw std::invalid_argument("linear needs n >= 2");
  if (l < 1 || l >= n)
    throw std::invalid_argument("linear requires 1 <= l < n");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j <= i + l && j < n; ++j) edges.emplace_back(i, j);
  return ContentionGraph(n, std::move(edges));
}

ContentionGraph make_torus(int m, int n) {
  if (m < 3 || n < 3)
    throw std::invalid_argument("torus requires both dimensions >= 3");
  auto id = [n](int i, int j) { return i * n + j; };
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      edges.emplace_back(id(i, j), id((i + 1) % m, j));
      edges.emplace_back(id(i, j), id(i, (j + 1) % n));
    }
  return ContentionGraph(m * n, std::move(edges));
}

ContentionGraph make_strip(const StripUnit& unit,
                           const std::vector<Edge>& coupling, int n_units,
                           bool closed) {
  if (n_units < 2) throw std::invalid_argument("strip needs n_units >= 2");
  if (unit.n_vertices < 1) throw std::invalid_argument("empty strip unit");
  for (const auto& [a, b] : coupling)
    if (a < 0 || b < 0 || a >= unit.n_vertices || b >= unit.n_vertices)
      throw std::invalid_argument("coupling pair references invalid unit vertex");
  const int u = unit.n_vertices;
  std::vector<Edge> edges;
  for (int i = 0; i < n_units; ++i)
    for (const auto& [a, b] : unit.edges)
      edges.emplace_back(i * u + a, i * u + b);
  const int last = closed ? n_units : n_units - 1;
  for (int i = 0; i < last; ++i)
    for (const auto& [a, b] : coupling)
      edges.emplace_back(i * u + a, ((i + 1) % n_units) * u + b);
  return ContentionGraph(n_units * u, std::move(edges));
}

StripUnit ladder_unit() { return StripUnit{2, {{0, 1}}}; }

std::vector<Edge> ladder_coupling() { return {{0, 0}, {1, 1}}; }

ContentionGraph make_unit_disk(const NodeLayout& layout) {
  if (layout.cs_range <= 0)
    throw std::invalid_argument("carrier-sensing range must be positive");
  const int n = static_cast<int>(layout.positions.size());
  for (const auto& p : layout.positions)
    if (!std::isfinite(p[0]) || !std::isfinite(p[1]))
      throw std::invalid_argument("non-finite transmitter position");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double dx = layout.positions[i][0] - layout.positions[j][0];
      const double dy = layout.positions[i][1] - layout.positions[j][1];
      // strictly inside the sensing range; distance == range is no edge
      if (std::sqrt(dx * dx + dy * dy) < layout.cs_range)
        edges.emplace_back(i, j);
    }
  return ContentionGraph(n, std::move(edges), /*unit_disk=*/true);
}

} // namespace icn
