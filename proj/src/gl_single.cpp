#include <algorithm>
#include <string>

#include "glpart/error.hpp"
#include "glpart/gl_engine.hpp"

namespace glpart {

namespace {

[[noreturn]] void broken(const std::string& what) { throw Error("invariant-violated", what); }

bool stopped(const PartitionState& st) { return st.emission().has_value(); }

/// Lowest-id neighbour of v inside set i whose tree index passes `ok`.
template <class Pred>
VertexId lowest_neighbor_in(const PartitionState& st, VertexId v, int i, Pred ok) {
  for (VertexId w : st.graph().neighbors(v)) {
    if (st.set_of(w) == i && ok(st.tree_of(w))) {
      return w;
    }
  }
  return -1;
}

VertexId first_tree_neighbor_in(const PartitionState& st, VertexId v, int i) {
  return lowest_neighbor_in(st, v, i, [](int t) { return t == 0; });
}

/// Absorbs every pending Vlabel vertex of set i and hands it a tree.
void enter_under(PartitionState& st, int i, bool check = true) {
  const int n = st.graph().num_vertices();
  for (VertexId v = 0; v < n && !stopped(st); ++v) {
    if (st.vlabel_of(v) == i && st.set_of(v) < 0) {
      const VertexId p = first_tree_neighbor_in(st, v, i);
      if (p < 0) {
        broken("labelled vertex " + std::to_string(v + 1) + " lost its anchor");
      }
      st.place(v, i, p);
    }
  }
  if (stopped(st)) {
    return;
  }
  if (st.tlabel(i) < 0) {
    for (int t = 1; t < st.num_trees(); ++t) {
      if (st.tlabel_owner(t) < 0) {
        st.assign_tree(i, t);
        break;
      }
    }
    if (st.tlabel(i) < 0 && !st.full(i)) {
      broken("no free tree for Under set " + std::to_string(i + 1));
    }
  }
  if (check) {
    st.checkpoint("under");
  }
}

/// Moves v into set `to`. When v was a pending label of an Over set that can
/// no longer cover its deficit, that set turns Under.
void move_vertex(PartitionState& st, VertexId v, int to, VertexId parent) {
  const int from = st.set_of(v);
  const int label = st.vlabel_of(v);
  if (from < 0) {
    if (label < 0 || st.set_class(label) != SetClass::Over) {
      broken("vertex " + std::to_string(v + 1) + " stolen from nowhere");
    }
  } else if (st.set_class(from) != SetClass::Under) {
    broken("vertex " + std::to_string(v + 1) + " stolen from a non-Under set");
  }
  st.steal(v, to, parent);
  if (stopped(st)) {
    return;
  }
  if (from < 0 && st.deficit(label) > st.remaining_vlabel(label)) {
    st.set_class(label, SetClass::Under);
    if (st.stats() != nullptr) {
      ++st.stats()->over_to_under;
    }
    enter_under(st, label);
  }
  st.checkpoint("steal");
}

/// Every set holding a tree label must hold a vertex of that tree.
void ensure_tree_contact(PartitionState& st) {
  bool progress = true;
  while (progress && !stopped(st)) {
    progress = false;
    for (int t = 1; t < st.num_trees(); ++t) {
      const int j = st.tlabel_owner(t);
      if (j < 0 || st.hits_tree(j, t) || st.full(j)) {
        continue;
      }
      VertexId pick = -1;
      VertexId parent = -1;
      for (VertexId u : st.tree(t).vertices.members()) {
        if (st.set_of(u) == j) {
          continue;
        }
        parent = first_tree_neighbor_in(st, u, j);
        if (parent >= 0) {
          pick = u;
          break;
        }
      }
      if (pick < 0) {
        broken("tree " + std::to_string(t + 1) + " does not touch set " + std::to_string(j + 1));
      }
      move_vertex(st, pick, j, parent);
      progress = true;
      break;
    }
  }
}

bool contains_tree(const PartitionState& st, int i, int t) {
  for (VertexId v : st.tree(t).vertices.members()) {
    if (st.set_of(v) != i) {
      return false;
    }
  }
  return true;
}

} // namespace

void add_trees(PartitionState& st) {
  for (int i = 0; i < st.k(); ++i) {
    st.place(st.terminal(i), i, -1);
    if (stopped(st)) {
      return;
    }
  }
  st.checkpoint("terminals");
  std::vector<VertexId> queue;
  for (int i = 0; i < st.k(); ++i) {
    queue.push_back(st.terminal(i));
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId u = queue[head];
    for (VertexId w : st.tree_neighbors(u)) {
      if (st.tree_of(w) == 0 && st.set_of(w) < 0) {
        st.place(w, st.set_of(u), u);
        if (stopped(st)) {
          return;
        }
        queue.push_back(w);
      }
    }
  }
  st.checkpoint("first-tree");
  const int n = st.graph().num_vertices();
  for (VertexId v = 0; v < n; ++v) {
    if (st.tree_of(v) >= 0 || st.set_of(v) >= 0) {
      continue;
    }
    int target = -1;
    for (VertexId w : st.graph().neighbors(v)) {
      const int s = st.set_of(w);
      if (s >= 0 && (target < 0 || s < target)) {
        target = s;
      }
    }
    if (target < 0) {
      broken("vertex " + std::to_string(v + 1) + " is not dominated by the first tree");
    }
    st.place(v, target, lowest_neighbor_in(st, v, target, [](int) { return true; }));
    if (stopped(st)) {
      return;
    }
  }
  st.checkpoint("non-tree");
}

void labeling(PartitionState& st) {
  for (int t = 1; t < st.num_trees(); ++t) {
    for (VertexId v : st.tree(t).vertices.members()) {
      int target = -1;
      for (VertexId w : st.graph().neighbors(v)) {
        if (st.tree_of(w) == 0 && (target < 0 || st.set_of(w) < target)) {
          target = st.set_of(w);
        }
      }
      if (target < 0) {
        broken("vertex " + std::to_string(v + 1) + " is not dominated by the first tree");
      }
      st.set_vlabel(v, target);
    }
  }
  if (st.stats() != nullptr) {
    ++st.stats()->classifications;
  }
  bool any_over = false;
  for (int i = 0; i < st.k(); ++i) {
    const bool over = st.deficit(i) <= st.remaining_vlabel(i);
    st.set_class(i, over ? SetClass::Over : SetClass::Under);
    any_over = any_over || over;
  }
  if (!any_over) {
    broken("classification produced no Over set");
  }
  // Checkpoint only once every Under set has absorbed its labels.
  for (int i = 0; i < st.k() && !stopped(st); ++i) {
    if (st.set_class(i) == SetClass::Under) {
      enter_under(st, i, false);
    }
  }
  if (stopped(st)) {
    return;
  }
  st.checkpoint("classification");
  ensure_tree_contact(st);
}

void add_vertices(PartitionState& st) {
  const int n = st.graph().num_vertices();
  while (!stopped(st)) {
    int j = -1;
    for (int i = 0; i < st.k(); ++i) {
      if (st.set_class(i) != SetClass::Under || st.full(i)) {
        continue;
      }
      if (st.tlabel(i) < 0) {
        broken("Under set " + std::to_string(i + 1) + " has no tree");
      }
      if (!contains_tree(st, i, st.tlabel(i))) {
        j = i;
        break;
      }
    }
    if (j < 0) {
      break;
    }
    const int t = st.tlabel(j);
    VertexId pick = -1;
    VertexId parent = -1;
    for (VertexId v : st.tree(t).vertices.members()) {
      if (st.set_of(v) == j) {
        continue;
      }
      parent = lowest_neighbor_in(st, v, j, [t](int s) { return s == 0 || s == t; });
      if (parent >= 0) {
        pick = v;
        break;
      }
    }
    if (pick < 0) {
      broken("set " + std::to_string(j + 1) + " cannot grow along its tree");
    }
    move_vertex(st, pick, j, parent);
  }
  if (stopped(st)) {
    return;
  }
  st.checkpoint("under-filled");
  for (int i = 0; i < st.k(); ++i) {
    if (st.set_class(i) != SetClass::Over) {
      continue;
    }
    for (VertexId v = 0; v < n && !st.full(i); ++v) {
      if (st.vlabel_of(v) != i || st.set_of(v) >= 0) {
        continue;
      }
      st.place(v, i, first_tree_neighbor_in(st, v, i));
      if (stopped(st)) {
        return;
      }
    }
    if (!st.full(i)) {
      broken("Over set " + std::to_string(i + 1) + " ran out of labelled vertices");
    }
  }
  st.checkpoint("over-filled");
  for (VertexId v = 0; v < n; ++v) {
    if (st.set_of(v) >= 0) {
      continue;
    }
    int target = -1;
    for (VertexId w : st.graph().neighbors(v)) {
      const int s = st.set_of(w);
      if (s >= 0 && !st.full(s) && (target < 0 || s < target)) {
        target = s;
      }
    }
    if (target < 0) {
      broken("leftover vertex " + std::to_string(v + 1) + " has no open neighbouring set");
    }
    st.clear_vlabel(v);
    st.place(v, target, lowest_neighbor_in(st, v, target, [](int) { return true; }));
    if (stopped(st)) {
      return;
    }
  }
  st.checkpoint("leftovers");
}

} // namespace glpart
