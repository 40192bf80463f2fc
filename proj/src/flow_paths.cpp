#include "glpart/flow_paths.hpp"

#include <deque>
#include <string>

#include "glpart/error.hpp"

namespace glpart {

namespace {

// Unit-capacity residual network over split vertices: in(v) = 2v, out(v) = 2v+1.
class SplitNetwork {
public:
  SplitNetwork(const Graph& g, VertexId s, VertexId t)
      : s_(s), t_(t), head_(static_cast<std::size_t>(2 * g.num_vertices())) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (v != s && v != t) {
        add_arc(in(v), out(v));
      }
    }
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
      if (u == t) {
        continue;
      }
      for (VertexId w : g.neighbors(u)) {
        if (w != s) {
          add_arc(out(u), in(w));
        }
      }
    }
  }

  // Pushes one unit along a shortest residual path; false when none exists.
  bool augment() {
    const int source = out(s_);
    const int sink = in(t_);
    std::vector<int> via(head_.size(), -1);
    std::vector<char> seen(head_.size(), 0);
    std::deque<int> queue{source};
    seen[static_cast<std::size_t>(source)] = 1;
    while (!queue.empty() && seen[static_cast<std::size_t>(sink)] == 0) {
      const int x = queue.front();
      queue.pop_front();
      for (int a : head_[static_cast<std::size_t>(x)]) {
        const Arc& arc = arcs_[static_cast<std::size_t>(a)];
        if (arc.cap > 0 && seen[static_cast<std::size_t>(arc.to)] == 0) {
          seen[static_cast<std::size_t>(arc.to)] = 1;
          via[static_cast<std::size_t>(arc.to)] = a;
          queue.push_back(arc.to);
        }
      }
    }
    if (seen[static_cast<std::size_t>(sink)] == 0) {
      return false;
    }
    for (int x = sink; x != source;) {
      const int a = via[static_cast<std::size_t>(x)];
      arcs_[static_cast<std::size_t>(a)].cap -= 1;
      arcs_[static_cast<std::size_t>(a ^ 1)].cap += 1;
      x = arcs_[static_cast<std::size_t>(a ^ 1)].to;
    }
    return true;
  }

  // Flow decomposition; consumes the flow.
  std::vector<Path> extract_paths() {
    std::vector<Path> paths;
    while (true) {
      Path p{s_};
      VertexId cur = s_;
      while (cur != t_) {
        const int a = take_flow_arc(out(cur));
        if (a < 0) {
          break;
        }
        cur = arcs_[static_cast<std::size_t>(a)].to / 2;
        p.push_back(cur);
      }
      if (p.size() == 1) {
        break;
      }
      paths.push_back(std::move(p));
    }
    return paths;
  }

private:
  struct Arc {
    int to;
    int cap;
    bool forward;
  };

  static int in(VertexId v) { return 2 * v; }
  static int out(VertexId v) { return 2 * v + 1; }

  void add_arc(int from, int to) {
    head_[static_cast<std::size_t>(from)].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, 1, true});
    head_[static_cast<std::size_t>(to)].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0, false});
  }

  // Finds a saturated forward arc out of `node` (an out-node), clears it and
  // returns its index; -1 when none carries flow.
  int take_flow_arc(int node) {
    for (int a : head_[static_cast<std::size_t>(node)]) {
      Arc& arc = arcs_[static_cast<std::size_t>(a)];
      if (arc.forward && arc.cap == 0) {
        arc.cap = 1;
        arcs_[static_cast<std::size_t>(a ^ 1)].cap = 0;
        return a;
      }
    }
    return -1;
  }

  VertexId s_;
  VertexId t_;
  std::vector<std::vector<int>> head_;
  std::vector<Arc> arcs_;
};

} // namespace

PathFamily vertex_disjoint_paths(const Graph& g, VertexId s, VertexId t, int want) {
  if (s == t) {
    throw Error("identical-endpoints", "vertex " + std::to_string(s));
  }
  SplitNetwork net(g, s, t);
  int found = 0;
  while (found < want && net.augment()) {
    ++found;
  }
  PathFamily family{s, t, net.extract_paths()};
  return family;
}

int local_connectivity(const Graph& g, VertexId s, VertexId t) {
  if (s == t) {
    throw Error("identical-endpoints", "vertex " + std::to_string(s));
  }
  SplitNetwork net(g, s, t);
  int found = 0;
  while (net.augment()) {
    ++found;
  }
  return found;
}

Path make_induced(const Graph& g, const Path& p) {
  Path cur = p;
  bool changed = true;
  while (changed) {
    changed = false;
    const int len = static_cast<int>(cur.size());
    for (int i = 0; i + 2 < len && !changed; ++i) {
      for (int j = len - 1; j >= i + 2; --j) {
        if (g.has_edge(cur[static_cast<std::size_t>(i)], cur[static_cast<std::size_t>(j)])) {
          cur.erase(cur.begin() + i + 1, cur.begin() + j);
          changed = true;
          break;
        }
      }
    }
  }
  return cur;
}

bool is_valid_path(const Graph& g, const Path& p) {
  if (p.empty()) {
    return false;
  }
  VertexSet seen(g.num_vertices());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || p[i] >= g.num_vertices() || !seen.insert(p[i])) {
      return false;
    }
    if (i > 0 && !g.has_edge(p[i - 1], p[i])) {
      return false;
    }
  }
  return true;
}

bool is_induced_path(const Graph& g, const Path& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 2; j < p.size(); ++j) {
      if (g.has_edge(p[i], p[j])) {
        return false;
      }
    }
  }
  return true;
}

} // namespace glpart
