#include <algorithm>
#include <string>

#include "glpart/error.hpp"
#include "glpart/gl_engine.hpp"

namespace glpart {

namespace {

[[noreturn]] void broken(const std::string& what) { throw Error("invariant-violated", what); }

std::string vname(VertexId v) { return "vertex " + std::to_string(v + 1); }

} // namespace

PartitionState::PartitionState(const Graph& g, std::vector<VertexId> terminals, std::vector<int> demands,
                               const CdsInput& trees, const SolveOptions* options, SolveStats* stats)
    : g_(&g),
      terminals_(std::move(terminals)),
      demands_(std::move(demands)),
      trees_(trees.trees),
      tree_adj_(static_cast<std::size_t>(g.num_vertices())),
      tree_of_(static_cast<std::size_t>(g.num_vertices()), -1),
      set_of_(static_cast<std::size_t>(g.num_vertices()), -1),
      parent_(static_cast<std::size_t>(g.num_vertices()), -1),
      vlabel_of_(static_cast<std::size_t>(g.num_vertices()), -1),
      options_(options),
      stats_(stats) {
  const int n = g.num_vertices();
  const int k = static_cast<int>(terminals_.size());
  const int nt = static_cast<int>(trees_.size());
  for (int t = 0; t < nt; ++t) {
    for (VertexId v : trees_[static_cast<std::size_t>(t)].vertices.members()) {
      if (tree_of_[static_cast<std::size_t>(v)] >= 0) {
        broken("trees overlap at " + vname(v));
      }
      tree_of_[static_cast<std::size_t>(v)] = t;
    }
    for (const Edge& e : trees_[static_cast<std::size_t>(t)].tree_edges) {
      tree_adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
      tree_adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
  }
  for (auto& adj : tree_adj_) {
    std::sort(adj.begin(), adj.end());
  }
  sets_.assign(static_cast<std::size_t>(k), VertexSet(n));
  hits_.assign(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(nt), 0));
  distinct_hits_.assign(static_cast<std::size_t>(k), 0);
  class_.assign(static_cast<std::size_t>(k), SetClass::Unclassified);
  ever_under_.assign(static_cast<std::size_t>(k), 0);
  tlabel_.assign(static_cast<std::size_t>(k), -1);
  owner_.assign(static_cast<std::size_t>(nt), -1);
  pending_.assign(static_cast<std::size_t>(k), 0);
  global_vertex.resize(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) {
    global_vertex[static_cast<std::size_t>(v)] = v;
  }
  global_set.resize(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    global_set[static_cast<std::size_t>(i)] = i;
  }
}

bool PartitionState::hits_tree(int i, int t) const {
  return hits_[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] > 0;
}

void PartitionState::count_hit(int i, VertexId v, int delta) {
  const int t = tree_of(v);
  if (t < 0) {
    return;
  }
  int& c = hits_[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
  const bool before = c > 0;
  c += delta;
  const bool after = c > 0;
  distinct_hits_[static_cast<std::size_t>(i)] += static_cast<int>(after) - static_cast<int>(before);
}

void PartitionState::trace(TraceEvent ev) const {
  if (options_ == nullptr || !options_->trace) {
    return;
  }
  if (ev.vertex >= 0) {
    ev.vertex = global_vertex[static_cast<std::size_t>(ev.vertex)];
  }
  if (ev.set >= 0) {
    ev.set = global_set[static_cast<std::size_t>(ev.set)];
  }
  if (ev.from_set >= 0) {
    ev.from_set = global_set[static_cast<std::size_t>(ev.from_set)];
  }
  options_->trace(ev);
}

void PartitionState::trace_emit(int set, int tree) const {
  if (options_ != nullptr && options_->trace) {
    options_->trace({TraceEvent::Kind::Emit, -1, -1, set, tree});
  }
}

void PartitionState::place(VertexId v, int i, VertexId parent) {
  if (set_of(v) >= 0) {
    broken(vname(v) + " placed twice");
  }
  sets_[static_cast<std::size_t>(i)].insert(v);
  set_of_[static_cast<std::size_t>(v)] = i;
  parent_[static_cast<std::size_t>(v)] = parent;
  count_hit(i, v, +1);
  const int s = vlabel_of(v);
  if (s >= 0) {
    --pending_[static_cast<std::size_t>(s)];
  }
  trace({TraceEvent::Kind::Place, v, -1, i, -1});
  restart_check();
}

void PartitionState::remove(VertexId v) {
  const int i = set_of(v);
  if (i < 0) {
    broken(vname(v) + " removed while unplaced");
  }
  if (v == terminal(i)) {
    broken("terminal removed from set " + std::to_string(i + 1));
  }
  for (VertexId w : set(i).members()) {
    if (parent_[static_cast<std::size_t>(w)] == v) {
      broken(vname(v) + " is not an attachment leaf");
    }
  }
  sets_[static_cast<std::size_t>(i)].erase(v);
  set_of_[static_cast<std::size_t>(v)] = -1;
  parent_[static_cast<std::size_t>(v)] = -1;
  count_hit(i, v, -1);
  const int s = vlabel_of(v);
  if (s >= 0) {
    ++pending_[static_cast<std::size_t>(s)];
  }
}

void PartitionState::steal(VertexId v, int to, VertexId parent) {
  const int from = set_of(v);
  const int label = vlabel_of(v);
  if (from >= 0) {
    remove(v);
  }
  clear_vlabel(v);
  if (stats_ != nullptr) {
    ++stats_->steals;
  }
  trace({TraceEvent::Kind::Steal, v, from >= 0 ? from : label, to, -1});
  // Bypass the Place trace line: the steal already describes the move.
  sets_[static_cast<std::size_t>(to)].insert(v);
  set_of_[static_cast<std::size_t>(v)] = to;
  parent_[static_cast<std::size_t>(v)] = parent;
  count_hit(to, v, +1);
  restart_check();
}

void PartitionState::set_vlabel(VertexId v, int i) {
  clear_vlabel(v);
  vlabel_of_[static_cast<std::size_t>(v)] = i;
  if (set_of(v) < 0) {
    ++pending_[static_cast<std::size_t>(i)];
  }
}

void PartitionState::clear_vlabel(VertexId v) {
  const int s = vlabel_of(v);
  if (s < 0) {
    return;
  }
  if (set_of(v) < 0) {
    --pending_[static_cast<std::size_t>(s)];
  }
  vlabel_of_[static_cast<std::size_t>(v)] = -1;
}

void PartitionState::set_class(int i, SetClass c) {
  if (c == SetClass::Over && ever_under_[static_cast<std::size_t>(i)] != 0) {
    broken("set " + std::to_string(i + 1) + " moved from Under back to Over");
  }
  if (c == SetClass::Under) {
    ever_under_[static_cast<std::size_t>(i)] = 1;
  }
  class_[static_cast<std::size_t>(i)] = c;
}

void PartitionState::assign_tree(int i, int t) {
  if (owner_[static_cast<std::size_t>(t)] >= 0 || tlabel_[static_cast<std::size_t>(i)] >= 0) {
    broken("tree " + std::to_string(t + 1) + " assigned twice");
  }
  tlabel_[static_cast<std::size_t>(i)] = t;
  owner_[static_cast<std::size_t>(t)] = i;
}

const std::optional<Emission>& PartitionState::restart_check() {
  emission_.reset();
  for (int i = 0; i < k(); ++i) {
    if (full(i) && tree_hits(i) == 1) {
      Emission e{{i}, {}};
      for (int t = 0; t < num_trees(); ++t) {
        if (hits_tree(i, t)) {
          e.trees.push_back(t);
        }
      }
      emission_ = std::move(e);
      return emission_;
    }
  }
  if (options_ == nullptr || !options_->family_restart) {
    return emission_;
  }
  std::vector<int> full_sets;
  for (int i = 0; i < k(); ++i) {
    if (full(i)) {
      full_sets.push_back(i);
    }
  }
  const int f = static_cast<int>(full_sets.size());
  if (f < 2 || f > 16) {
    return emission_;
  }
  // Smallest family first, then the lowest bitmask.
  int best_mask = 0;
  int best_size = f + 1;
  for (int mask = 1; mask < (1 << f); ++mask) {
    const int size = __builtin_popcount(static_cast<unsigned>(mask));
    if (size >= best_size) {
      continue;
    }
    int touched = 0;
    for (int t = 0; t < num_trees(); ++t) {
      for (int b = 0; b < f; ++b) {
        if ((mask >> b & 1) != 0 && hits_tree(full_sets[static_cast<std::size_t>(b)], t)) {
          ++touched;
          break;
        }
      }
    }
    if (touched <= size) {
      best_mask = mask;
      best_size = size;
    }
  }
  if (best_mask == 0) {
    return emission_;
  }
  Emission e;
  for (int b = 0; b < f; ++b) {
    if ((best_mask >> b & 1) != 0) {
      e.sets.push_back(full_sets[static_cast<std::size_t>(b)]);
    }
  }
  for (int t = 0; t < num_trees(); ++t) {
    if (std::any_of(e.sets.begin(), e.sets.end(), [&](int i) { return hits_tree(i, t); })) {
      e.trees.push_back(t);
    }
  }
  emission_ = std::move(e);
  return emission_;
}

std::string PartitionState::check_invariants() const {
  const int n = g_->num_vertices();
  for (VertexId v = 0; v < n; ++v) {
    const int i = set_of(v);
    for (int j = 0; j < k(); ++j) {
      if (set(j).contains(v) != (i == j)) {
        return "membership table disagrees with set " + std::to_string(j + 1) + " at " + vname(v);
      }
    }
  }
  for (int i = 0; i < k(); ++i) {
    const VertexSet& s = set(i);
    if (s.empty()) {
      continue;
    }
    if (!s.contains(terminal(i))) {
      return "set " + std::to_string(i + 1) + " lost its terminal";
    }
    if (s.size() > demand(i)) {
      return "set " + std::to_string(i + 1) + " exceeds its demand";
    }
    if (!is_connected_subset(*g_, s)) {
      return "set " + std::to_string(i + 1) + " is disconnected";
    }
    std::vector<int> recount(static_cast<std::size_t>(num_trees()), 0);
    for (VertexId v : s.members()) {
      if (tree_of(v) >= 0) {
        ++recount[static_cast<std::size_t>(tree_of(v))];
      }
    }
    if (recount != hits_[static_cast<std::size_t>(i)]) {
      return "tree hit counts of set " + std::to_string(i + 1) + " are stale";
    }
  }
  // Attachment forest: parents lie in the same set, are adjacent, and chains
  // end at the terminal. This makes every set a rooted tree, so removing an
  // attachment leaf keeps it connected.
  for (VertexId v = 0; v < n; ++v) {
    const int i = set_of(v);
    if (i < 0) {
      continue;
    }
    if (v == terminal(i)) {
      if (attach_parent(v) != -1) {
        return "terminal " + vname(v) + " has an attachment parent";
      }
      continue;
    }
    VertexId cur = v;
    int steps = 0;
    while (cur != terminal(i)) {
      const VertexId p = attach_parent(cur);
      if (p < 0 || set_of(p) != i || !g_->has_edge(cur, p)) {
        return "attachment of " + vname(cur) + " is broken";
      }
      cur = p;
      if (++steps > n) {
        return "attachment forest has a cycle through " + vname(v);
      }
    }
  }
  std::vector<int> pending(static_cast<std::size_t>(k()), 0);
  for (VertexId v = 0; v < n; ++v) {
    const int s = vlabel_of(v);
    if (s < 0) {
      continue;
    }
    const int placed_in = set_of(v);
    if (placed_in >= 0 && placed_in != s) {
      return vname(v) + " is labelled for set " + std::to_string(s + 1) + " but sits elsewhere";
    }
    if (placed_in < 0) {
      ++pending[static_cast<std::size_t>(s)];
    }
    const auto nb = g_->neighbors(v);
    const bool adjacent = std::any_of(nb.begin(), nb.end(), [&](VertexId w) {
      return set_of(w) == s && tree_of(w) == 0;
    });
    if (!adjacent) {
      return vname(v) + " is not adjacent to the first-tree part of its labelled set";
    }
  }
  if (pending != pending_) {
    return "pending label counts are stale";
  }
  for (int i = 0; i < k(); ++i) {
    const int t = tlabel(i);
    if (t >= 0 && owner_[static_cast<std::size_t>(t)] != i) {
      return "tree label of set " + std::to_string(i + 1) + " is not injective";
    }
    if (class_[static_cast<std::size_t>(i)] == SetClass::Over && ever_under_[static_cast<std::size_t>(i)] != 0) {
      return "set " + std::to_string(i + 1) + " returned to Over";
    }
    if (class_[static_cast<std::size_t>(i)] == SetClass::Under && pending_[static_cast<std::size_t>(i)] != 0) {
      return "Under set " + std::to_string(i + 1) + " has unabsorbed labels";
    }
  }
  for (int t = 0; t < num_trees(); ++t) {
    const int i = owner_[static_cast<std::size_t>(t)];
    if (i >= 0 && tlabel_[static_cast<std::size_t>(i)] != t) {
      return "tree " + std::to_string(t + 1) + " owner table disagrees";
    }
  }
  return {};
}

void PartitionState::checkpoint(const char* where) {
  if (stats_ != nullptr) {
    ++stats_->checkpoints;
  }
  if (options_ != nullptr && options_->check_invariants) {
    const std::string why = check_invariants();
    if (!why.empty()) {
      broken(std::string(where) + ": " + why);
    }
  }
}

} // namespace glpart
