#pragma once

#include <vector>

#include "glpart/flow_paths.hpp"
#include "glpart/graph.hpp"
#include "glpart/partition.hpp"

namespace glpart {

struct Interval {
  long long left = 0;
  long long right = 0;
};

/// Interval representation; vertex v is intervals[v]. Closed intervals,
/// adjacent iff they overlap.
struct IntervalModel {
  std::vector<Interval> intervals;

  int size() const { return static_cast<int>(intervals.size()); }
  /// Throws Error("invalid-model") if some left > right.
  void validate() const;
  Graph graph() const;
};

/// Bags in order; width = max bag size - 1.
struct PathDecomposition {
  std::vector<VertexSet> bags;
  int width = -1;
};

/// Empty when the three path-decomposition axioms hold for g.
std::string check_path_decomposition(const Graph& g, const PathDecomposition& pd);

/// Inclusive range of A-indices; empty when lo > hi.
struct IndexRange {
  int lo = 0;
  int hi = -1;
  bool empty() const { return lo > hi; }
  bool contains(int i) const { return lo <= i && i <= hi; }
};

/// Convex bipartite graph. A-vertices are graph ids 0..na-1 in convex order,
/// B-vertices are na..na+nb-1; b_j is adjacent to a_i for i in b_ranges[j].
struct ConvexModel {
  int na = 0;
  int nb = 0;
  std::vector<IndexRange> b_ranges;

  VertexId a(int i) const { return i; }
  VertexId b(int j) const { return na + j; }
  int num_edges() const;
  /// Throws Error("invalid-model") on malformed ranges.
  void validate() const;
  Graph graph() const;
  /// Builds ranges from an edge list (0-based a, b); throws Error("invalid-model")
  /// when some B-neighbourhood is not consecutive or an edge repeats.
  static ConvexModel from_edges(int na, int nb, const std::vector<std::pair<int, int>>& ab_edges);
};

/// Convex model whose B order also makes every A-neighbourhood consecutive.
struct BiconvexModel : ConvexModel {
  /// Adds the A-side consecutiveness check.
  void validate() const;
  static BiconvexModel from_edges(int na, int nb, const std::vector<std::pair<int, int>>& ab_edges);
};

/// Builder output: the family plus the s-t paths it was grown from
/// (endpoints included, after any chord removal).
struct StructuredCds {
  CdsFamily family;
  std::vector<Path> paths;
};

/// Bags are the maximal cliques in sweep order (point cliques at right
/// endpoints, subsumed ones dropped). Throws Error("disconnected").
PathDecomposition interval_path_decomposition(const IntervalModel& m);

/// k disjoint dominating paths through every bag. Throws
/// Error("insufficient-connectivity") with the achieved count.
StructuredCds cds_interval(const IntervalModel& m, int k);

/// k disjoint induced a_1-a_na paths, stripped, then topped up with one
/// unused neighbour of b_1 / b_nb where missing.
/// Errors: insufficient-connectivity, augmentation-exhausted.
StructuredCds cds_biconvex(const BiconvexModel& m, int k);

/// Requires 4k-connectivity. Induced a_1-a_na paths, stripped, plus an
/// alternating share of the A-vertices off the paths; a_1 and a_na go to the
/// first set. Errors: insufficient-connectivity.
StructuredCds cds_convex(const ConvexModel& m, int k);

/// Appends every uncovered vertex to the lowest-index set it is adjacent to.
/// Throws Error("not-dominating") for an orphan vertex.
CdsPartition extend_to_partition(const Graph& g, const CdsFamily& fam);

} // namespace glpart
