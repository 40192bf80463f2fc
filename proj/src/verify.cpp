#include "glpart/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <string>

#include "glpart/error.hpp"

namespace glpart {

namespace {

std::string one_based(const std::vector<int>& ids) {
  std::string out;
  for (int v : ids) {
    if (!out.empty()) {
      out += ',';
    }
    out += std::to_string(v + 1);
  }
  return out;
}

// Records overlap/missing-vertex violations; returns per-vertex block owner.
std::vector<int> check_cover(int n, const std::vector<VertexSet>& blocks, bool require_cover,
                             VerificationReport& report) {
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  std::vector<int> overlaps;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (VertexId v : blocks[b].members()) {
      if (v >= n) {
        continue;
      }
      if (owner[static_cast<std::size_t>(v)] >= 0) {
        overlaps.push_back(v);
      } else {
        owner[static_cast<std::size_t>(v)] = static_cast<int>(b);
      }
    }
  }
  if (!overlaps.empty()) {
    report.add("overlap", "vertices in several blocks: " + one_based(overlaps), overlaps);
  }
  if (require_cover) {
    std::vector<int> missing;
    for (VertexId v = 0; v < n; ++v) {
      if (owner[static_cast<std::size_t>(v)] < 0) {
        missing.push_back(v);
      }
    }
    if (!missing.empty()) {
      report.add("missing-vertex", "vertices in no block: " + one_based(missing), missing);
    }
  }
  return owner;
}

void check_connected_dominating(const Graph& g, const std::vector<VertexSet>& sets,
                                VerificationReport& report) {
  for (std::size_t b = 0; b < sets.size(); ++b) {
    const int id = static_cast<int>(b);
    if (sets[b].empty()) {
      report.add("empty-block", "block " + std::to_string(b + 1) + " is empty", {id});
      continue;
    }
    if (!is_connected_subset(g, sets[b])) {
      report.add("disconnected", "block " + std::to_string(b + 1) + " induces a disconnected subgraph",
                 {id});
    }
    std::vector<int> uncovered;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (sets[b].contains(v)) {
        continue;
      }
      const auto nb = g.neighbors(v);
      if (std::none_of(nb.begin(), nb.end(), [&](VertexId w) { return sets[b].contains(w); })) {
        uncovered.push_back(v);
      }
    }
    if (!uncovered.empty()) {
      report.add("not-dominating",
                 "block " + std::to_string(b + 1) + " misses vertices " + one_based(uncovered),
                 uncovered);
    }
  }
}

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.num_vertices()), 0);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    for (VertexId w : g.neighbors(v)) {
      adj[static_cast<std::size_t>(v)] |= 1U << w;
    }
  }
  return adj;
}

bool mask_connected(const std::vector<std::uint32_t>& adj, std::uint32_t mask) {
  if (mask == 0) {
    return false;
  }
  std::uint32_t reached = mask & (~mask + 1);
  std::uint32_t frontier = reached;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f != 0; f &= f - 1) {
      next |= adj[static_cast<std::size_t>(__builtin_ctz(f))];
    }
    next &= mask & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached == mask;
}

bool mask_dominating(const std::vector<std::uint32_t>& adj, std::uint32_t mask, std::uint32_t all) {
  std::uint32_t covered = mask;
  for (std::uint32_t f = mask; f != 0; f &= f - 1) {
    covered |= adj[static_cast<std::size_t>(__builtin_ctz(f))];
  }
  return covered == all;
}

std::vector<VertexId> mask_members(std::uint32_t mask) {
  std::vector<VertexId> out;
  for (; mask != 0; mask &= mask - 1) {
    out.push_back(__builtin_ctz(mask));
  }
  return out;
}

void guard_size(const Graph& g, int limit) {
  if (g.num_vertices() > limit) {
    throw Error("too-large-for-oracle",
                std::to_string(g.num_vertices()) + " vertices exceeds limit " + std::to_string(limit));
  }
}

// Connected after deleting `removed` (and optionally the edge s-t)?
bool reaches(const Graph& g, VertexId s, VertexId t, const std::vector<char>& removed, bool skip_st) {
  std::vector<char> seen(static_cast<std::size_t>(g.num_vertices()), 0);
  std::deque<VertexId> queue{s};
  seen[static_cast<std::size_t>(s)] = 1;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbors(u)) {
      if (skip_st && ((u == s && w == t) || (u == t && w == s))) {
        continue;
      }
      if (removed[static_cast<std::size_t>(w)] == 0 && seen[static_cast<std::size_t>(w)] == 0) {
        if (w == t) {
          return true;
        }
        seen[static_cast<std::size_t>(w)] = 1;
        queue.push_back(w);
      }
    }
  }
  return false;
}

// Calls visit(chosen) for every size-r subset of pool until visit returns true.
bool for_each_subset(const std::vector<VertexId>& pool, int r,
                     const std::function<bool(const std::vector<VertexId>&)>& visit) {
  std::vector<VertexId> chosen;
  std::function<bool(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(chosen.size()) == r) {
      return visit(chosen);
    }
    const std::size_t need = static_cast<std::size_t>(r) - chosen.size();
    for (std::size_t i = from; i + need <= pool.size(); ++i) {
      chosen.push_back(pool[i]);
      if (rec(i + 1)) {
        return true;
      }
      chosen.pop_back();
    }
    return false;
  };
  return rec(0);
}

} // namespace

std::string VerificationReport::to_text() const {
  if (ok()) {
    return "OK\n";
  }
  std::string out;
  for (const Violation& v : violations) {
    out += "FAIL " + v.rule + " " + v.detail + "\n";
  }
  return out;
}

VerificationReport verify_gl(const GlInstance& inst, const GlPartition& p) {
  VerificationReport report;
  const int n = inst.graph.num_vertices();
  if (p.blocks.size() != inst.terminals.size()) {
    report.add("block-count", "expected " + std::to_string(inst.terminals.size()) + " blocks, got " +
                                  std::to_string(p.blocks.size()));
  }
  check_cover(n, p.blocks, true, report);
  const std::size_t k = std::min(p.blocks.size(), inst.terminals.size());
  for (std::size_t i = 0; i < k; ++i) {
    const int id = static_cast<int>(i);
    const VertexSet& block = p.blocks[i];
    if (block.size() != inst.demands[i]) {
      report.add("size-mismatch",
                 "block " + std::to_string(i + 1) + " has " + std::to_string(block.size()) +
                     " vertices, demand " + std::to_string(inst.demands[i]),
                 {id});
    }
    if (!block.contains(inst.terminals[i])) {
      report.add("terminal-missing",
                 "block " + std::to_string(i + 1) + " lacks terminal " + std::to_string(inst.terminals[i] + 1),
                 {id});
    }
    if (block.empty() || !is_connected_subset(inst.graph, block)) {
      report.add("disconnected", "block " + std::to_string(i + 1) + " induces a disconnected subgraph",
                 {id});
    }
  }
  return report;
}

VerificationReport verify_cds_partition(const Graph& g, const CdsPartition& p) {
  VerificationReport report;
  check_cover(g.num_vertices(), p.blocks, true, report);
  check_connected_dominating(g, p.blocks, report);
  return report;
}

VerificationReport verify_cds_family(const Graph& g, const CdsFamily& f) {
  VerificationReport report;
  check_cover(g.num_vertices(), f.sets, false, report);
  check_connected_dominating(g, f.sets, report);
  return report;
}

std::optional<GlPartition> brute_gl(const GlInstance& inst, int vertex_limit) {
  const Graph& g = inst.graph;
  guard_size(g, vertex_limit);
  const int n = g.num_vertices();
  const int k = inst.k();
  const auto adj = adjacency_masks(g);
  std::vector<int> assign(static_cast<std::size_t>(n), -1);
  std::vector<std::uint32_t> block_mask(static_cast<std::size_t>(k), 0);
  std::uint32_t unassigned = n == 32 ? ~0U : ((1U << n) - 1);
  for (int i = 0; i < k; ++i) {
    const VertexId c = inst.terminals[static_cast<std::size_t>(i)];
    assign[static_cast<std::size_t>(c)] = i;
    block_mask[static_cast<std::size_t>(i)] |= 1U << c;
    unassigned &= ~(1U << c);
  }

  // Component of `start` inside `allowed`.
  auto component = [&](std::uint32_t start, std::uint32_t allowed) {
    std::uint32_t reached = start;
    std::uint32_t frontier = start;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f != 0; f &= f - 1) {
        next |= adj[static_cast<std::size_t>(__builtin_ctz(f))];
      }
      next &= allowed & ~reached;
      reached |= next;
      frontier = next;
    }
    return reached;
  };
  auto feasible = [&]() {
    for (int b = 0; b < k; ++b) {
      const std::uint32_t mask = block_mask[static_cast<std::size_t>(b)];
      const int size = __builtin_popcount(mask);
      const int demand = inst.demands[static_cast<std::size_t>(b)];
      if (size > demand) {
        return false;
      }
      const std::uint32_t allowed = size == demand ? mask : (mask | unassigned);
      const std::uint32_t comp = component(mask & (~mask + 1), allowed);
      if ((comp & mask) != mask || __builtin_popcount(comp) < demand) {
        return false;
      }
    }
    return true;
  };

  std::function<bool(int)> search = [&](int v) {
    if (v == n) {
      return true;
    }
    if (assign[static_cast<std::size_t>(v)] >= 0) {
      return search(v + 1);
    }
    for (int b = 0; b < k; ++b) {
      auto& mask = block_mask[static_cast<std::size_t>(b)];
      if (__builtin_popcount(mask) >= inst.demands[static_cast<std::size_t>(b)]) {
        continue;
      }
      assign[static_cast<std::size_t>(v)] = b;
      mask |= 1U << v;
      unassigned &= ~(1U << v);
      if (feasible() && search(v + 1)) {
        return true;
      }
      assign[static_cast<std::size_t>(v)] = -1;
      mask &= ~(1U << v);
      unassigned |= 1U << v;
    }
    return false;
  };

  if (!feasible() || !search(0)) {
    return std::nullopt;
  }
  GlPartition out;
  for (int b = 0; b < k; ++b) {
    const auto members = mask_members(block_mask[static_cast<std::size_t>(b)]);
    out.blocks.emplace_back(n, members);
  }
  return out;
}

std::optional<CdsFamily> brute_cds(const Graph& g, int k, int vertex_limit) {
  guard_size(g, vertex_limit);
  const int n = g.num_vertices();
  if (k <= 0) {
    return CdsFamily{};
  }
  if (n == 0) {
    return std::nullopt;
  }
  const auto adj = adjacency_masks(g);
  const std::uint32_t all = (1U << n) - 1;
  std::vector<char> is_cds(static_cast<std::size_t>(all) + 1, 0);
  for (std::uint32_t mask = 1; mask <= all; ++mask) {
    is_cds[mask] = static_cast<char>(mask_dominating(adj, mask, all) && mask_connected(adj, mask));
  }
  // A CDS with a strictly smaller CDS inside loses one vertex at a time while
  // staying a CDS (drop a spanning-tree leaf outside the smaller set), so
  // single-vertex removals decide minimality.
  std::vector<std::vector<VertexId>> minimal;
  std::vector<std::uint32_t> minimal_masks;
  for (std::uint32_t mask = 1; mask <= all; ++mask) {
    if (is_cds[mask] == 0) {
      continue;
    }
    bool is_minimal = true;
    for (std::uint32_t f = mask; f != 0 && is_minimal; f &= f - 1) {
      const std::uint32_t smaller = mask & ~(f & (~f + 1));
      if (smaller != 0 && is_cds[smaller] != 0) {
        is_minimal = false;
      }
    }
    if (is_minimal) {
      minimal.push_back(mask_members(mask));
      minimal_masks.push_back(mask);
    }
  }
  std::vector<std::size_t> order(minimal.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    order[i] = i;
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return minimal[a] < minimal[b]; });

  std::vector<std::size_t> chosen;
  std::function<bool(std::size_t, std::uint32_t)> search = [&](std::size_t from, std::uint32_t used) {
    if (static_cast<int>(chosen.size()) == k) {
      return true;
    }
    for (std::size_t i = from; i < order.size(); ++i) {
      const std::uint32_t m = minimal_masks[order[i]];
      if ((m & used) != 0) {
        continue;
      }
      chosen.push_back(order[i]);
      if (search(i + 1, used | m)) {
        return true;
      }
      chosen.pop_back();
    }
    return false;
  };
  if (!search(0, 0)) {
    return std::nullopt;
  }
  CdsFamily fam;
  for (std::size_t idx : chosen) {
    fam.sets.emplace_back(n, minimal[idx]);
  }
  return fam;
}

int brute_local_connectivity(const Graph& g, VertexId s, VertexId t) {
  if (s == t) {
    throw Error("identical-endpoints", "vertex " + std::to_string(s));
  }
  const bool adjacent = g.has_edge(s, t);
  const int bound = std::min(g.degree(s), g.degree(t)) - (adjacent ? 1 : 0);
  std::vector<VertexId> pool;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (v != s && v != t) {
      pool.push_back(v);
    }
  }
  std::vector<char> removed(static_cast<std::size_t>(g.num_vertices()), 0);
  for (int r = 0; r < bound; ++r) {
    const bool found = for_each_subset(pool, r, [&](const std::vector<VertexId>& cut) {
      for (VertexId v : cut) {
        removed[static_cast<std::size_t>(v)] = 1;
      }
      const bool separated = !reaches(g, s, t, removed, adjacent);
      for (VertexId v : cut) {
        removed[static_cast<std::size_t>(v)] = 0;
      }
      return separated;
    });
    if (found) {
      return r + (adjacent ? 1 : 0);
    }
  }
  return bound + (adjacent ? 1 : 0);
}

int brute_vertex_connectivity(const Graph& g) {
  const int n = g.num_vertices();
  if (n < 2) {
    throw Error("degenerate-graph", "need at least 2 vertices");
  }
  std::vector<VertexId> pool(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) {
    pool[static_cast<std::size_t>(v)] = v;
  }
  for (int r = 0; r <= n - 2; ++r) {
    const bool found = for_each_subset(pool, r, [&](const std::vector<VertexId>& cut) {
      VertexSet rest(n);
      for (VertexId v = 0; v < n; ++v) {
        rest.insert(v);
      }
      for (VertexId v : cut) {
        rest.erase(v);
      }
      return !is_connected_subset(g, rest);
    });
    if (found) {
      return r;
    }
  }
  return n - 1;
}

Graph chordal_counterexample() {
  // A B C / D E / F with edges AB AD BC BD BE CE DE DF EF.
  const std::vector<Edge> edges{{0, 1}, {0, 3}, {1, 2}, {1, 3}, {1, 4},
                                {2, 4}, {3, 4}, {3, 5}, {4, 5}};
  return Graph(6, edges);
}

Graph convex_counterexample() {
  // a1..a5 -> 0..4, b1..b5 -> 5..9.
  const std::vector<std::pair<int, int>> ab{{1, 1}, {1, 4}, {2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 2},
                                            {3, 3}, {3, 4}, {3, 5}, {4, 4}, {4, 5}, {5, 4}, {5, 5}};
  std::vector<Edge> edges;
  for (auto [a, b] : ab) {
    edges.push_back({a - 1, 5 + b - 1});
  }
  return Graph(10, edges);
}

} // namespace glpart
