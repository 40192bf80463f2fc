#pragma once

#include <optional>
#include <string>
#include <vector>

#include "glpart/graph.hpp"
#include "glpart/partition.hpp"

namespace glpart {

struct Violation {
  std::string rule;
  std::string detail;
  std::vector<int> ids;  // offending vertices (0-based) or block indices
};

struct VerificationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string rule, std::string detail, std::vector<int> ids = {}) {
    violations.push_back({std::move(rule), std::move(detail), std::move(ids)});
  }
  /// `OK` or one `FAIL <rule-id> <detail>` line per violation.
  std::string to_text() const;
};

/// Checks the four GL-partition conditions and reports every violation.
/// Rule ids: block-count, overlap, missing-vertex, size-mismatch,
/// terminal-missing, disconnected.
VerificationReport verify_gl(const GlInstance& inst, const GlPartition& p);

/// Partition of V into connected dominating sets. Rule ids: overlap,
/// missing-vertex, empty-block, disconnected, not-dominating.
VerificationReport verify_cds_partition(const Graph& g, const CdsPartition& p);

/// Disjoint connected dominating sets (coverage not required).
VerificationReport verify_cds_family(const Graph& g, const CdsFamily& f);

inline constexpr int kOracleVertexLimit = 14;

/// Exhaustive GL search; lexicographically smallest block assignment
/// (vertex order) or nullopt. Throws Error("too-large-for-oracle").
std::optional<GlPartition> brute_gl(const GlInstance& inst, int vertex_limit = kOracleVertexLimit);

/// Exhaustive search for k disjoint connected dominating sets among the
/// inclusion-minimal ones, in lexicographic order of their sorted member
/// lists. Throws Error("too-large-for-oracle").
std::optional<CdsFamily> brute_cds(const Graph& g, int k, int vertex_limit = kOracleVertexLimit);

/// Smallest s-t separator size by subset enumeration, plus one when s and t
/// are adjacent (the edge counts as a path). Test oracle for small graphs.
int brute_local_connectivity(const Graph& g, VertexId s, VertexId t);

/// Smallest separator by subset enumeration; n-1 for complete graphs.
int brute_vertex_connectivity(const Graph& g);

/// Fixed negative examples: 2-connected graphs with no CDS partition of size 2.
/// Chordal: vertices A..F as 0..5. Convex: a1..a5 as 0..4, b1..b5 as 5..9.
Graph chordal_counterexample();
Graph convex_counterexample();

} // namespace glpart
