#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "glpart/graph.hpp"

namespace glpart::testing {

inline Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> list;
  for (auto [u, v] : edges) {
    list.push_back({u, v});
  }
  return Graph(n, list);
}

inline Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) {
    e.push_back({v, v + 1});
  }
  return Graph(n, e);
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) {
    e.push_back({v, (v + 1) % n});
  }
  return Graph(n, e);
}

inline Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      e.push_back({u, v});
    }
  }
  return Graph(n, e);
}

/// Vertex 0 is the centre.
inline Graph star_graph(int leaves) {
  std::vector<Edge> e;
  for (int v = 1; v <= leaves; ++v) {
    e.push_back({0, v});
  }
  return Graph(leaves + 1, e);
}

inline VertexSet vset(int n, std::initializer_list<int> members) {
  std::vector<VertexId> m(members);
  return VertexSet(n, m);
}

inline VertexSet all_vertices(int n) {
  VertexSet s(n);
  for (int v = 0; v < n; ++v) {
    s.insert(v);
  }
  return s;
}

} // namespace glpart::testing
