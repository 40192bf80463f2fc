#pragma once

#include <vector>

#include "glpart/graph.hpp"

namespace glpart {

/// Pairwise disjoint connected dominating sets; need not cover V.
struct CdsFamily {
  std::vector<VertexSet> sets;
};

/// A CdsFamily that covers V exactly.
struct CdsPartition {
  std::vector<VertexSet> blocks;
};

/// Blocks V_1..V_k of a Gyori-Lovasz partition, indexed like the terminals.
struct GlPartition {
  std::vector<VertexSet> blocks;
};

/// Graph plus k terminals and k demands. Sum of demands equals |V|.
struct GlInstance {
  Graph graph;
  std::vector<VertexId> terminals;
  std::vector<int> demands;

  int k() const { return static_cast<int>(terminals.size()); }
};

/// Empty string when the instance satisfies its invariants, else a description.
std::string check_gl_instance(const GlInstance& inst);

/// k vertex-disjoint dominating trees.
struct CdsInput {
  std::vector<DominatingTree> trees;

  /// Spanning-tree certificates for the sets of a family or partition.
  static CdsInput from_sets(const Graph& g, const std::vector<VertexSet>& sets);
};

/// Empty string when the trees are valid, pairwise disjoint and dominating.
std::string check_cds_input(const Graph& g, const CdsInput& in);

} // namespace glpart
