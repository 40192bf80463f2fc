#include "glpart/cds_structured.hpp"

#include <algorithm>
#include <string>

#include "glpart/error.hpp"
#include "glpart/verify.hpp"

namespace glpart {

namespace {

void ensure_valid_family(const Graph& g, const CdsFamily& fam, const char* builder) {
  const VerificationReport report = verify_cds_family(g, fam);
  if (!report.ok()) {
    throw Error("builder-invariant", std::string(builder) + ": " + report.violations.front().rule + " " +
                                         report.violations.front().detail);
  }
}

std::vector<Path> disjoint_paths_or_throw(const Graph& g, VertexId s, VertexId t, int k) {
  PathFamily fam = vertex_disjoint_paths(g, s, t, k);
  if (static_cast<int>(fam.paths.size()) < k) {
    throw Error("insufficient-connectivity", "achieved " + std::to_string(fam.paths.size()) + " of " +
                                                 std::to_string(k) + " disjoint paths");
  }
  return std::move(fam.paths);
}

VertexSet interior(int n, const Path& p) {
  VertexSet s(n);
  for (std::size_t i = 1; i + 1 < p.size(); ++i) {
    s.insert(p[i]);
  }
  return s;
}

bool closed_hits(const Graph& g, const VertexSet& s, VertexId v) {
  if (s.contains(v)) {
    return true;
  }
  const auto nb = g.neighbors(v);
  return std::any_of(nb.begin(), nb.end(), [&](VertexId w) { return s.contains(w); });
}

} // namespace

void IntervalModel::validate() const {
  for (std::size_t v = 0; v < intervals.size(); ++v) {
    if (intervals[v].left > intervals[v].right) {
      throw Error("invalid-model", "interval " + std::to_string(v + 1) + " has left > right");
    }
  }
}

Graph IntervalModel::graph() const {
  validate();
  std::vector<Edge> edges;
  const int n = size();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const Interval& a = intervals[static_cast<std::size_t>(u)];
      const Interval& b = intervals[static_cast<std::size_t>(v)];
      if (a.left <= b.right && b.left <= a.right) {
        edges.push_back({u, v});
      }
    }
  }
  return Graph(n, edges);
}

std::string check_path_decomposition(const Graph& g, const PathDecomposition& pd) {
  const int n = g.num_vertices();
  std::vector<int> first(static_cast<std::size_t>(n), -1);
  std::vector<int> last(static_cast<std::size_t>(n), -1);
  std::vector<int> count(static_cast<std::size_t>(n), 0);
  int max_bag = 0;
  for (std::size_t i = 0; i < pd.bags.size(); ++i) {
    max_bag = std::max(max_bag, pd.bags[i].size());
    for (VertexId v : pd.bags[i].members()) {
      if (first[static_cast<std::size_t>(v)] < 0) {
        first[static_cast<std::size_t>(v)] = static_cast<int>(i);
      }
      last[static_cast<std::size_t>(v)] = static_cast<int>(i);
      ++count[static_cast<std::size_t>(v)];
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    const auto i = static_cast<std::size_t>(v);
    if (first[i] < 0) {
      return "vertex " + std::to_string(v + 1) + " is in no bag";
    }
    if (last[i] - first[i] + 1 != count[i]) {
      return "bags of vertex " + std::to_string(v + 1) + " are not contiguous";
    }
  }
  for (const Edge& e : g.edges()) {
    const int lo = std::max(first[static_cast<std::size_t>(e.u)], first[static_cast<std::size_t>(e.v)]);
    const int hi = std::min(last[static_cast<std::size_t>(e.u)], last[static_cast<std::size_t>(e.v)]);
    if (lo > hi) {
      return "edge " + std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1) + " is in no bag";
    }
  }
  if (pd.width != max_bag - 1) {
    return "width does not match the largest bag";
  }
  return {};
}

int ConvexModel::num_edges() const {
  int m = 0;
  for (const IndexRange& r : b_ranges) {
    m += r.empty() ? 0 : r.hi - r.lo + 1;
  }
  return m;
}

void ConvexModel::validate() const {
  if (na < 0 || nb < 0 || static_cast<int>(b_ranges.size()) != nb) {
    throw Error("invalid-model", "side sizes do not match the range table");
  }
  for (int j = 0; j < nb; ++j) {
    const IndexRange& r = b_ranges[static_cast<std::size_t>(j)];
    if (!r.empty() && (r.lo < 0 || r.hi >= na)) {
      throw Error("invalid-model", "range of b" + std::to_string(j + 1) + " leaves A");
    }
  }
}

Graph ConvexModel::graph() const {
  validate();
  std::vector<Edge> edges;
  for (int j = 0; j < nb; ++j) {
    const IndexRange& r = b_ranges[static_cast<std::size_t>(j)];
    for (int i = r.lo; i <= r.hi; ++i) {
      edges.push_back({a(i), b(j)});
    }
  }
  return Graph(na + nb, edges);
}

ConvexModel ConvexModel::from_edges(int na, int nb, const std::vector<std::pair<int, int>>& ab_edges) {
  std::vector<std::vector<int>> per_b(static_cast<std::size_t>(nb));
  for (auto [ai, bj] : ab_edges) {
    if (ai < 0 || ai >= na || bj < 0 || bj >= nb) {
      throw Error("invalid-model", "edge endpoint out of range");
    }
    per_b[static_cast<std::size_t>(bj)].push_back(ai);
  }
  ConvexModel m;
  m.na = na;
  m.nb = nb;
  m.b_ranges.resize(static_cast<std::size_t>(nb));
  for (int j = 0; j < nb; ++j) {
    auto& list = per_b[static_cast<std::size_t>(j)];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw Error("invalid-model", "duplicate edge at b" + std::to_string(j + 1));
    }
    if (list.empty()) {
      continue;
    }
    if (list.back() - list.front() + 1 != static_cast<int>(list.size())) {
      throw Error("invalid-model", "neighbourhood of b" + std::to_string(j + 1) + " is not consecutive");
    }
    m.b_ranges[static_cast<std::size_t>(j)] = {list.front(), list.back()};
  }
  return m;
}

void BiconvexModel::validate() const {
  ConvexModel::validate();
  for (int i = 0; i < na; ++i) {
    int lo = -1;
    int hi = -1;
    int count = 0;
    for (int j = 0; j < nb; ++j) {
      if (b_ranges[static_cast<std::size_t>(j)].contains(i)) {
        if (lo < 0) {
          lo = j;
        }
        hi = j;
        ++count;
      }
    }
    if (count > 0 && hi - lo + 1 != count) {
      throw Error("invalid-model", "neighbourhood of a" + std::to_string(i + 1) + " is not consecutive");
    }
  }
}

BiconvexModel BiconvexModel::from_edges(int na, int nb, const std::vector<std::pair<int, int>>& ab_edges) {
  BiconvexModel m;
  static_cast<ConvexModel&>(m) = ConvexModel::from_edges(na, nb, ab_edges);
  m.validate();
  return m;
}

PathDecomposition interval_path_decomposition(const IntervalModel& m) {
  const Graph g = m.graph();
  const int n = g.num_vertices();
  if (n == 0) {
    throw Error("disconnected", "empty interval model");
  }
  VertexSet all(n);
  for (VertexId v = 0; v < n; ++v) {
    all.insert(v);
  }
  if (!is_connected_subset(g, all)) {
    throw Error("disconnected", "interval graph is not connected");
  }

  std::vector<long long> events;
  for (const Interval& iv : m.intervals) {
    events.push_back(iv.right);
  }
  std::sort(events.begin(), events.end());
  events.erase(std::unique(events.begin(), events.end()), events.end());

  auto subset = [](const VertexSet& a, const VertexSet& b) {
    for (VertexId v : a.members()) {
      if (!b.contains(v)) {
        return false;
      }
    }
    return true;
  };

  PathDecomposition pd;
  for (long long x : events) {
    VertexSet bag(n);
    for (VertexId v = 0; v < n; ++v) {
      const Interval& iv = m.intervals[static_cast<std::size_t>(v)];
      if (iv.left <= x && x <= iv.right) {
        bag.insert(v);
      }
    }
    while (!pd.bags.empty() && subset(pd.bags.back(), bag)) {
      pd.bags.pop_back();
    }
    if (!pd.bags.empty() && subset(bag, pd.bags.back())) {
      continue;
    }
    pd.bags.push_back(std::move(bag));
  }
  int width = 0;
  for (const VertexSet& bag : pd.bags) {
    width = std::max(width, bag.size());
  }
  pd.width = width - 1;
  return pd;
}

StructuredCds cds_interval(const IntervalModel& m, int k) {
  const PathDecomposition pd = interval_path_decomposition(m);
  const Graph g = m.graph();
  const int n = g.num_vertices();
  const VertexId s = n;
  const VertexId t = n + 1;
  std::vector<Edge> edges = g.edges();
  for (VertexId v : pd.bags.front().members()) {
    edges.push_back({s, v});
  }
  for (VertexId v : pd.bags.back().members()) {
    edges.push_back({t, v});
  }
  const Graph augmented(n + 2, edges);

  StructuredCds out;
  for (Path& p : disjoint_paths_or_throw(augmented, s, t, k)) {
    Path inner(p.begin() + 1, p.end() - 1);
    out.family.sets.emplace_back(n, inner);
    out.paths.push_back(std::move(inner));
  }
  ensure_valid_family(g, out.family, "cds_interval");
  return out;
}

StructuredCds cds_biconvex(const BiconvexModel& m, int k) {
  m.validate();
  if (m.na < 2 || m.nb < 1) {
    throw Error("invalid-model", "biconvex builder needs |A| >= 2 and |B| >= 1");
  }
  const Graph g = m.graph();
  const int n = g.num_vertices();
  const VertexId first_a = m.a(0);
  const VertexId last_a = m.a(m.na - 1);

  StructuredCds out;
  VertexSet used(n);
  for (const Path& p : disjoint_paths_or_throw(g, first_a, last_a, k)) {
    Path induced = make_induced(g, p);
    VertexSet inner = interior(n, induced);
    for (VertexId v : inner.members()) {
      used.insert(v);
    }
    out.family.sets.push_back(std::move(inner));
    out.paths.push_back(std::move(induced));
  }

  auto top_up = [&](VertexSet& set, VertexId anchor) {
    if (closed_hits(g, set, anchor)) {
      return;
    }
    for (VertexId v : g.neighbors(anchor)) {
      if (!used.contains(v)) {
        used.insert(v);
        set.insert(v);
        return;
      }
    }
    throw Error("augmentation-exhausted", "no unused neighbour of vertex " + std::to_string(anchor + 1));
  };
  for (VertexSet& set : out.family.sets) {
    top_up(set, m.b(0));
    top_up(set, m.b(m.nb - 1));
  }
  ensure_valid_family(g, out.family, "cds_biconvex");
  return out;
}

StructuredCds cds_convex(const ConvexModel& m, int k) {
  m.validate();
  if (m.na < 2 || k < 1) {
    throw Error("invalid-model", "convex builder needs |A| >= 2 and k >= 1");
  }
  const Graph g = m.graph();
  const int n = g.num_vertices();
  const VertexId first_a = m.a(0);
  const VertexId last_a = m.a(m.na - 1);

  StructuredCds out;
  VertexSet on_path(n);
  for (const Path& p : disjoint_paths_or_throw(g, first_a, last_a, k)) {
    Path induced = make_induced(g, p);
    for (VertexId v : induced) {
      on_path.insert(v);
    }
    out.family.sets.push_back(interior(n, induced));
    out.paths.push_back(std::move(induced));
  }

  int next = 0;
  for (int i = 0; i < m.na; ++i) {
    if (!on_path.contains(m.a(i))) {
      out.family.sets[static_cast<std::size_t>(next % k)].insert(m.a(i));
      ++next;
    }
  }
  out.family.sets.front().insert(first_a);
  out.family.sets.front().insert(last_a);
  ensure_valid_family(g, out.family, "cds_convex");
  return out;
}

CdsPartition extend_to_partition(const Graph& g, const CdsFamily& fam) {
  const int n = g.num_vertices();
  CdsPartition out{fam.sets};
  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  for (const VertexSet& s : fam.sets) {
    for (VertexId v : s.members()) {
      covered[static_cast<std::size_t>(v)] = 1;
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (covered[static_cast<std::size_t>(v)] != 0) {
      continue;
    }
    // Domination is judged against the original family, so an orphan cannot
    // hide behind a vertex placed earlier in this loop.
    const auto nb = g.neighbors(v);
    auto target = std::find_if(fam.sets.begin(), fam.sets.end(), [&](const VertexSet& s) {
      return std::any_of(nb.begin(), nb.end(), [&](VertexId w) { return s.contains(w); });
    });
    if (target == fam.sets.end()) {
      throw Error("not-dominating", "vertex " + std::to_string(v + 1) + " is adjacent to no set");
    }
    out.blocks[static_cast<std::size_t>(target - fam.sets.begin())].insert(v);
  }
  return out;
}

} // namespace glpart
