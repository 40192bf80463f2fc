#include "glpart/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "glpart/error.hpp"

namespace glpart {

VertexSet::VertexSet(int universe, std::span<const VertexId> members) : VertexSet(universe) {
  for (VertexId v : members) {
    if (v < 0 || v >= universe) {
      throw Error("out-of-range", "vertex " + std::to_string(v));
    }
    insert(v);
  }
}

bool VertexSet::insert(VertexId v) {
  auto& b = bits_[static_cast<std::size_t>(v)];
  if (b != 0) {
    return false;
  }
  b = 1;
  ++count_;
  return true;
}

bool VertexSet::erase(VertexId v) {
  auto& b = bits_[static_cast<std::size_t>(v)];
  if (b == 0) {
    return false;
  }
  b = 0;
  --count_;
  return true;
}

void VertexSet::clear() {
  std::fill(bits_.begin(), bits_.end(), 0);
  count_ = 0;
}

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  out.reserve(static_cast<std::size_t>(count_));
  for (int v = 0; v < universe(); ++v) {
    if (bits_[static_cast<std::size_t>(v)] != 0) {
      out.push_back(v);
    }
  }
  return out;
}

VertexId VertexSet::first() const {
  for (int v = 0; v < universe(); ++v) {
    if (bits_[static_cast<std::size_t>(v)] != 0) {
      return v;
    }
  }
  return -1;
}

bool VertexSet::intersects(const VertexSet& other) const {
  const int n = std::min(universe(), other.universe());
  for (int v = 0; v < n; ++v) {
    if (contains(v) && other.contains(v)) {
      return true;
    }
  }
  return false;
}

Graph::Graph(int n, std::span<const Edge> edges) : adj_(static_cast<std::size_t>(n)) {
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw Error("invalid-graph", "edge endpoint out of range");
    }
    if (e.u == e.v) {
      throw Error("invalid-graph", "self-loop at vertex " + std::to_string(e.u));
    }
    adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
      throw Error("invalid-graph", "duplicate edge");
    }
  }
  m_ = static_cast<int>(edges.size());
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (VertexId u = 0; u < num_vertices(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) {
        out.push_back({u, v});
      }
    }
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  InducedSubgraph sub;
  sub.to_local.assign(static_cast<std::size_t>(g.num_vertices()), -1);
  sub.to_parent = keep.members();
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
    sub.to_local[static_cast<std::size_t>(sub.to_parent[i])] = static_cast<VertexId>(i);
  }
  std::vector<Edge> edges;
  for (VertexId u : sub.to_parent) {
    for (VertexId v : g.neighbors(u)) {
      if (u < v && keep.contains(v)) {
        edges.push_back({sub.to_local[static_cast<std::size_t>(u)],
                         sub.to_local[static_cast<std::size_t>(v)]});
      }
    }
  }
  sub.graph = Graph(static_cast<int>(sub.to_parent.size()), edges);
  return sub;
}

namespace {

// BFS over G[s] from root; returns visit count and fills parent (-1 for root).
int bfs_within(const Graph& g, const VertexSet& s, VertexId root, std::vector<VertexId>* parent_out,
               std::vector<VertexId>* order_out) {
  std::vector<VertexId> parent(static_cast<std::size_t>(g.num_vertices()), -2);
  std::deque<VertexId> queue{root};
  parent[static_cast<std::size_t>(root)] = -1;
  int seen = 0;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    ++seen;
    if (order_out != nullptr) {
      order_out->push_back(u);
    }
    for (VertexId w : g.neighbors(u)) {
      if (s.contains(w) && parent[static_cast<std::size_t>(w)] == -2) {
        parent[static_cast<std::size_t>(w)] = u;
        queue.push_back(w);
      }
    }
  }
  if (parent_out != nullptr) {
    *parent_out = std::move(parent);
  }
  return seen;
}

} // namespace

bool is_connected_subset(const Graph& g, const VertexSet& s) {
  if (s.empty()) {
    throw Error("empty-subset", "");
  }
  return bfs_within(g, s, s.first(), nullptr, nullptr) == s.size();
}

bool dominates(const Graph& g, const VertexSet& s) {
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (s.contains(v)) {
      continue;
    }
    const auto nb = g.neighbors(v);
    if (std::none_of(nb.begin(), nb.end(), [&](VertexId w) { return s.contains(w); })) {
      return false;
    }
  }
  return true;
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!s.contains(v)) {
      continue;
    }
    for (VertexId w : g.neighbors(v)) {
      if (!s.contains(w)) {
        out.insert(w);
      }
    }
  }
  return out;
}

std::vector<Edge> spanning_tree(const Graph& g, const VertexSet& s) {
  if (s.empty()) {
    throw Error("empty-subset", "");
  }
  std::vector<VertexId> parent;
  std::vector<VertexId> order;
  if (bfs_within(g, s, s.first(), &parent, &order) != s.size()) {
    throw Error("not-connected", "");
  }
  std::vector<Edge> out;
  out.reserve(order.size());
  for (VertexId v : order) {
    const VertexId p = parent[static_cast<std::size_t>(v)];
    if (p >= 0) {
      out.push_back({p, v});
    }
  }
  return out;
}

DominatingTree DominatingTree::from_set(const Graph& g, VertexSet s) {
  DominatingTree t;
  t.tree_edges = spanning_tree(g, s);
  t.vertices = std::move(s);
  return t;
}

std::string check_dominating_tree(const Graph& g, const DominatingTree& t) {
  if (t.vertices.universe() != g.num_vertices()) {
    return "universe mismatch";
  }
  if (t.vertices.empty()) {
    return "empty tree";
  }
  if (static_cast<int>(t.tree_edges.size()) != t.vertices.size() - 1) {
    return "edge count is not |vertices|-1";
  }
  // Union-find over tree edges detects cycles; with |E| = |V|-1 acyclic means spanning.
  std::vector<VertexId> root(static_cast<std::size_t>(g.num_vertices()));
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    root[static_cast<std::size_t>(v)] = v;
  }
  auto find = [&](VertexId v) {
    while (root[static_cast<std::size_t>(v)] != v) {
      root[static_cast<std::size_t>(v)] = root[static_cast<std::size_t>(root[static_cast<std::size_t>(v)])];
      v = root[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (const Edge& e : t.tree_edges) {
    if (!t.vertices.contains(e.u) || !t.vertices.contains(e.v)) {
      return "tree edge leaves the vertex set";
    }
    if (!g.has_edge(e.u, e.v)) {
      return "tree edge is not a graph edge";
    }
    const VertexId a = find(e.u);
    const VertexId b = find(e.v);
    if (a == b) {
      return "tree edges contain a cycle";
    }
    root[static_cast<std::size_t>(a)] = b;
  }
  if (!dominates(g, t.vertices)) {
    return "vertex set does not dominate the graph";
  }
  return {};
}

} // namespace glpart
