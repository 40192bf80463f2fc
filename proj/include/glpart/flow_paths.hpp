#pragma once

#include <limits>
#include <vector>

#include "glpart/graph.hpp"

namespace glpart {

/// Vertex sequence; consecutive entries are adjacent, no vertex repeats.
using Path = std::vector<VertexId>;

/// Paths sharing endpoints s and t with pairwise disjoint interiors.
struct PathFamily {
  VertexId s = -1;
  VertexId t = -1;
  std::vector<Path> paths;
};

inline constexpr int kUnbounded = std::numeric_limits<int>::max();

/// Up to `want` internally vertex-disjoint s-t paths, via unit-capacity
/// augmenting paths on the vertex-split network. Returns min(want, local
/// connectivity) paths. A direct s-t edge counts as one path.
/// Throws Error("identical-endpoints") when s == t.
PathFamily vertex_disjoint_paths(const Graph& g, VertexId s, VertexId t, int want = kUnbounded);

/// Maximum number of internally vertex-disjoint s-t paths.
int local_connectivity(const Graph& g, VertexId s, VertexId t);

/// Removes chords until the path is induced. The chord (i, j) with the
/// smallest i, then largest j, is short-cut first. Endpoints are kept.
Path make_induced(const Graph& g, const Path& p);

/// True iff consecutive vertices are adjacent and no vertex repeats.
bool is_valid_path(const Graph& g, const Path& p);
/// True iff no two non-consecutive path vertices are adjacent.
bool is_induced_path(const Graph& g, const Path& p);

} // namespace glpart
