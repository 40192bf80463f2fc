#include <algorithm>

#include "glpart/error.hpp"
#include "glpart/flow_paths.hpp"
#include "glpart/graph.hpp"

namespace glpart {

// Pair schedule: fix a minimum-degree vertex v0, then minimise the local
// connectivity over (v0, w) for every non-neighbour w and over every
// non-adjacent pair of neighbours of v0. Each flow is capped at the best value
// seen so far, starting from min(degree of v0, cap).
int vertex_connectivity(const Graph& g, int cap) {
  const int n = g.num_vertices();
  if (n < 2) {
    throw Error("degenerate-graph", "need at least 2 vertices");
  }
  if (2 * static_cast<long long>(g.num_edges()) == static_cast<long long>(n) * (n - 1)) {
    return std::min(n - 1, cap);
  }
  VertexId v0 = 0;
  for (VertexId v = 1; v < n; ++v) {
    if (g.degree(v) < g.degree(v0)) {
      v0 = v;
    }
  }
  int best = std::min({n - 1, g.degree(v0), cap});
  auto probe = [&](VertexId a, VertexId b) {
    const auto fam = vertex_disjoint_paths(g, a, b, best);
    best = std::min(best, static_cast<int>(fam.paths.size()));
  };
  for (VertexId w = 0; w < n && best > 0; ++w) {
    if (w != v0 && !g.has_edge(v0, w)) {
      probe(v0, w);
    }
  }
  const auto nb = g.neighbors(v0);
  for (std::size_t i = 0; i < nb.size() && best > 0; ++i) {
    for (std::size_t j = i + 1; j < nb.size() && best > 0; ++j) {
      if (!g.has_edge(nb[i], nb[j])) {
        probe(nb[i], nb[j]);
      }
    }
  }
  return best;
}

} // namespace glpart
