#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace glpart {

/// Dense 0-based vertex index. Files use 1-based ids; conversion lives in io.
using VertexId = int;

struct Edge {
  VertexId u;
  VertexId v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Membership over [0, n) with a cached cardinality.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(int universe) : bits_(static_cast<std::size_t>(universe), 0) {}
  VertexSet(int universe, std::span<const VertexId> members);

  int universe() const { return static_cast<int>(bits_.size()); }
  int size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(VertexId v) const {
    return v >= 0 && v < universe() && bits_[static_cast<std::size_t>(v)] != 0;
  }
  /// Returns true if v was newly inserted.
  bool insert(VertexId v);
  /// Returns true if v was present.
  bool erase(VertexId v);
  void clear();

  /// Members in ascending order.
  std::vector<VertexId> members() const;
  /// Smallest member, or -1 when empty.
  VertexId first() const;

  bool intersects(const VertexSet& other) const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.bits_ == b.bits_;
  }

private:
  std::vector<std::uint8_t> bits_;
  int count_ = 0;
};

/// Finite, undirected, simple graph with sorted adjacency lists.
/// Immutable after construction.
class Graph {
public:
  Graph() = default;
  /// Throws Error("invalid-graph") on self-loops, duplicate edges or
  /// out-of-range endpoints.
  Graph(int n, std::span<const Edge> edges);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return m_; }
  int degree(VertexId v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

  std::span<const VertexId> neighbors(VertexId v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool has_edge(VertexId u, VertexId v) const;

  /// Every edge once, as (u, v) with u < v, in ascending order.
  std::vector<Edge> edges() const;

private:
  std::vector<std::vector<VertexId>> adj_;
  int m_ = 0;
};

/// Induced subgraph together with the id maps in both directions.
struct InducedSubgraph {
  Graph graph;
  std::vector<VertexId> to_parent;  // local -> parent
  std::vector<VertexId> to_local;   // parent -> local, -1 if absent
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

/// True iff G[s] is connected. Throws Error("empty-subset") for empty s.
bool is_connected_subset(const Graph& g, const VertexSet& s);

/// Closed-neighbourhood domination: every vertex is in s or has a neighbour in s.
bool dominates(const Graph& g, const VertexSet& s);

/// N(s): vertices outside s with a neighbour in s.
VertexSet open_neighborhood(const Graph& g, const VertexSet& s);

/// BFS tree of G[s] rooted at the smallest member, neighbours scanned in
/// ascending order. Throws Error("not-connected") if G[s] is disconnected.
std::vector<Edge> spanning_tree(const Graph& g, const VertexSet& s);

/// Exact vertex connectivity, or min(kappa, cap) when a cap is given (cheaper
/// for threshold tests). K_n yields n-1. Throws Error("degenerate-graph") when
/// n < 2.
int vertex_connectivity(const Graph& g, int cap = std::numeric_limits<int>::max());

/// A connected dominating vertex set together with a spanning tree certificate.
struct DominatingTree {
  VertexSet vertices;
  std::vector<Edge> tree_edges;

  /// Builds the certificate with spanning_tree().
  static DominatingTree from_set(const Graph& g, VertexSet s);
};

/// Empty string when `t` is a valid dominating tree of g, otherwise a short
/// description of the first violated condition.
std::string check_dominating_tree(const Graph& g, const DominatingTree& t);

} // namespace glpart
