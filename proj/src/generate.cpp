#include "glpart/generate.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "glpart/error.hpp"

namespace glpart {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) {
    throw Error("invalid-parameters", "empty sampling range");
  }
  // Largest multiple of bound that fits; draws above it are rejected.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = eng_();
  while (x >= limit) {
    x = eng_();
  }
  return x % bound;
}

int Rng::range(int lo, int hi) {
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

namespace {

bool accepts(const Graph& g, int target_k, const GenOptions& opt) {
  if (g.num_vertices() < 2) {
    return false;
  }
  VertexSet all(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    all.insert(v);
  }
  if (!is_connected_subset(g, all)) {
    return false;
  }
  if (opt.exact) {
    return vertex_connectivity(g, target_k + 1) == target_k;
  }
  return vertex_connectivity(g, target_k) >= target_k;
}

[[noreturn]] void give_up(const char* what, int retries) {
  throw Error("generation-failed", std::string(what) + ": no sample met the connectivity target in " +
                                       std::to_string(retries) + " attempts");
}

} // namespace

IntervalModel gen_interval(int n, int target_k, std::uint64_t seed, GenOptions opt) {
  if (n < 2 || target_k < 1 || n < target_k + 1) {
    throw Error("invalid-parameters", "interval generation needs n >= target_k + 1 >= 2");
  }
  Rng rng(seed);
  const int span = 1000;
  for (int attempt = 0; attempt < opt.retries; ++attempt) {
    // Average covering depth drawn around the target so that both the
    // minimum and the exact-connectivity modes hit often.
    const int depth = std::min(n, target_k + 1 + rng.range(0, target_k + 2));
    const int mean_len = std::max(1, span * depth / n);
    IntervalModel m;
    for (int v = 0; v < n; ++v) {
      const int len = rng.range(std::max(1, mean_len / 2), mean_len + mean_len / 2);
      const int left = rng.range(0, std::max(0, span - len));
      m.intervals.push_back({left, left + len});
    }
    m.validate();
    if (accepts(m.graph(), target_k, opt)) {
      return m;
    }
  }
  give_up("interval", opt.retries);
}

BiconvexModel gen_biconvex(int na, int nb, int target_k, std::uint64_t seed, GenOptions opt) {
  if (na < target_k || nb < target_k || target_k < 1) {
    throw Error("invalid-parameters", "both sides need at least target_k vertices");
  }
  Rng rng(seed);
  for (int attempt = 0; attempt < opt.retries; ++attempt) {
    // Window width chosen so that an A-vertex is covered by about `cover`
    // windows, and at least target_k + 1 so that some window straddles every
    // run of target_k consecutive A-vertices. The first and last target_k
    // windows are pinned to the ends.
    const int cover = target_k + rng.range(0, target_k + 1);
    const int width = std::clamp((cover * na + nb - 1) / nb, std::min(na, target_k + 1), na);
    BiconvexModel m;
    m.na = na;
    m.nb = nb;
    int prev_lo = 0;
    int prev_hi = 0;
    for (int j = 0; j < nb; ++j) {
      const int slope = nb > 1 ? static_cast<int>(static_cast<long long>(j) * (na - width) / (nb - 1)) : 0;
      int lo = j < target_k ? 0 : std::max(prev_lo, std::clamp(slope + rng.range(-1, 1), 0, na - 1));
      int hi = std::max(prev_hi, std::min(na - 1, lo + width - 1 + rng.range(0, 1)));
      if (j >= nb - target_k) {
        hi = na - 1;
      }
      m.b_ranges.push_back({lo, hi});
      prev_lo = lo;
      prev_hi = hi;
    }
    m.validate();
    if (accepts(m.graph(), target_k, opt)) {
      return m;
    }
  }
  give_up("biconvex", opt.retries);
}

ConvexModel gen_convex(int na, int nb, int target_k, std::uint64_t seed, GenOptions opt) {
  if (na < target_k || nb < target_k || target_k < 1) {
    throw Error("invalid-parameters", "both sides need at least target_k vertices");
  }
  Rng rng(seed);
  for (int attempt = 0; attempt < opt.retries; ++attempt) {
    ConvexModel m;
    m.na = na;
    m.nb = nb;
    const int widest = std::min(na, target_k + rng.range(target_k / 2, target_k + 2));
    for (int j = 0; j < nb; ++j) {
      const int w = rng.range(target_k, std::max(target_k, widest));
      // Centres may fall past either end; clamping piles some windows onto
      // the boundary so that the end vertices get enough neighbours.
      const int start = rng.range(-w / 2, na - w / 2);
      const int lo = std::clamp(start, 0, na - w);
      m.b_ranges.push_back({lo, lo + w - 1});
    }
    m.validate();
    if (accepts(m.graph(), target_k, opt)) {
      return m;
    }
  }
  give_up("convex", opt.retries);
}

PlantedCds gen_planted_cds(int n, int k, int extra_edges, std::uint64_t seed) {
  if (k < 1 || n < 2 * k || extra_edges < 0) {
    throw Error("invalid-parameters", "planted generation needs k >= 1 and n >= 2k");
  }
  Rng rng(seed);
  std::vector<VertexId> order(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) {
    order[static_cast<std::size_t>(v)] = v;
  }
  rng.shuffle(order);
  // Backbones take between 2k and n/2 vertices (at least 2k), split into k
  // paths of random positive lengths.
  const int used = rng.range(2 * k, std::max(2 * k, n / 2));
  std::vector<int> cuts;
  for (int x = 1; x < used; ++x) {
    cuts.push_back(x);
  }
  rng.shuffle(cuts);
  cuts.resize(static_cast<std::size_t>(k - 1));
  std::sort(cuts.begin(), cuts.end());
  cuts.insert(cuts.begin(), 0);
  cuts.push_back(used);

  std::vector<std::vector<VertexId>> backbones(static_cast<std::size_t>(k));
  std::vector<int> backbone_of(static_cast<std::size_t>(n), -1);
  std::vector<Edge> edges;
  std::vector<std::vector<char>> adjacent(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  auto add_edge = [&](VertexId u, VertexId v) {
    if (u == v || adjacent[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] != 0) {
      return false;
    }
    adjacent[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
    adjacent[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
    edges.push_back({std::min(u, v), std::max(u, v)});
    return true;
  };
  for (int i = 0; i < k; ++i) {
    auto& path = backbones[static_cast<std::size_t>(i)];
    for (int x = cuts[static_cast<std::size_t>(i)]; x < cuts[static_cast<std::size_t>(i) + 1]; ++x) {
      const VertexId v = order[static_cast<std::size_t>(x)];
      if (!path.empty()) {
        add_edge(path.back(), v);
      }
      path.push_back(v);
      backbone_of[static_cast<std::size_t>(v)] = i;
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    for (int i = 0; i < k; ++i) {
      if (backbone_of[static_cast<std::size_t>(v)] == i) {
        continue;
      }
      const auto& path = backbones[static_cast<std::size_t>(i)];
      add_edge(v, path[static_cast<std::size_t>(rng.below(path.size()))]);
    }
  }
  const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  const long long room = max_edges - static_cast<long long>(edges.size());
  const long long extra = std::min<long long>(extra_edges, room);
  for (long long added = 0; added < extra;) {
    const auto u = static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(n)));
    const auto v = static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(n)));
    if (add_edge(u, v)) {
      ++added;
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  PlantedCds out{Graph(n, edges), {}};
  for (const auto& path : backbones) {
    DominatingTree t{VertexSet(n, path), {}};
    for (std::size_t x = 1; x < path.size(); ++x) {
      t.tree_edges.push_back({path[x - 1], path[x]});
    }
    out.trees.trees.push_back(std::move(t));
  }
  if (std::string why = check_cds_input(out.graph, out.trees); !why.empty()) {
    throw Error("generation-failed", "planted trees invalid: " + why);
  }
  return out;
}

GlInstance gen_gl_extension(const Graph& g, int k, std::uint64_t seed, const VertexSet* pool) {
  const int n = g.num_vertices();
  if (k < 1 || n < k) {
    throw Error("invalid-parameters", "need 1 <= k <= n");
  }
  Rng rng(seed);
  std::vector<VertexId> candidates;
  for (VertexId v = 0; v < n; ++v) {
    if (pool == nullptr || pool->contains(v)) {
      candidates.push_back(v);
    }
  }
  if (static_cast<int>(candidates.size()) < k) {
    throw Error("invalid-parameters", "terminal pool smaller than k");
  }
  GlInstance inst;
  inst.graph = g;
  // Partial Fisher-Yates: the first k slots become the terminals.
  for (int i = 0; i < k; ++i) {
    const auto j = static_cast<std::size_t>(i) + static_cast<std::size_t>(rng.below(candidates.size() - static_cast<std::size_t>(i)));
    std::swap(candidates[static_cast<std::size_t>(i)], candidates[j]);
    inst.terminals.push_back(candidates[static_cast<std::size_t>(i)]);
  }
  // Composition: k-1 distinct cut points in [1, n-1].
  std::vector<int> points;
  for (int x = 1; x < n; ++x) {
    points.push_back(x);
  }
  for (int i = 0; i < k - 1; ++i) {
    const auto j = static_cast<std::size_t>(i) + static_cast<std::size_t>(rng.below(points.size() - static_cast<std::size_t>(i)));
    std::swap(points[static_cast<std::size_t>(i)], points[j]);
  }
  std::vector<int> cuts(points.begin(), points.begin() + (k - 1));
  std::sort(cuts.begin(), cuts.end());
  int prev = 0;
  for (int c : cuts) {
    inst.demands.push_back(c - prev);
    prev = c;
  }
  inst.demands.push_back(n - prev);
  return inst;
}

} // namespace glpart
