#include <algorithm>
#include <numeric>
#include <string>

#include "glpart/error.hpp"
#include "glpart/gl_engine.hpp"

namespace glpart {

namespace {

[[noreturn]] void broken(const std::string& what) { throw Error("invariant-violated", what); }

/// Re-expresses trees in the ids of an induced subgraph. Every tree vertex
/// must survive in the subgraph.
CdsInput restrict_trees(const std::vector<DominatingTree>& trees, const std::vector<int>& pick,
                        const InducedSubgraph& sub) {
  CdsInput out;
  const int n = sub.graph.num_vertices();
  for (int t : pick) {
    const DominatingTree& src = trees[static_cast<std::size_t>(t)];
    DominatingTree dst{VertexSet(n), {}};
    for (VertexId v : src.vertices.members()) {
      const VertexId lv = sub.to_local[static_cast<std::size_t>(v)];
      if (lv < 0) {
        broken("tree vertex " + std::to_string(v + 1) + " was removed");
      }
      dst.vertices.insert(lv);
    }
    for (const Edge& e : src.tree_edges) {
      dst.tree_edges.push_back({sub.to_local[static_cast<std::size_t>(e.u)], sub.to_local[static_cast<std::size_t>(e.v)]});
    }
    out.trees.push_back(std::move(dst));
  }
  return out;
}

/// Runs the three single-tree phases on a prepared state.
void run_single_tree(PartitionState& st) {
  if (st.stats() != nullptr) {
    ++st.stats()->single_tree_calls;
  }
  add_trees(st);
  if (!st.emission()) {
    labeling(st);
  }
  if (!st.emission()) {
    add_vertices(st);
  }
}

/// Pads the emitted tree list with unhit trees from `pool` until there is one
/// tree per emitted set.
std::vector<int> dropped_for(const Emission& e, const std::vector<int>& pool) {
  std::vector<int> out = e.trees;
  for (int t : pool) {
    if (out.size() >= e.sets.size()) {
      break;
    }
    if (std::find(out.begin(), out.end(), t) == out.end()) {
      out.push_back(t);
    }
  }
  if (out.size() < e.sets.size()) {
    broken("not enough trees to drop with the emitted sets");
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

SolveOutcome solve_single_tree(const GlInstance& inst, const CdsInput& trees, const SolveOptions& options,
                               SolveStats* stats) {
  if (std::string why = check_gl_instance(inst); !why.empty()) {
    throw Error("invalid-instance", why);
  }
  if (std::string why = check_cds_input(inst.graph, trees); !why.empty()) {
    throw Error("invalid-cds-input", why);
  }
  if (static_cast<int>(trees.trees.size()) != inst.k()) {
    throw Error("invalid-cds-input", "need exactly k trees");
  }
  for (VertexId t : inst.terminals) {
    if (!trees.trees.front().vertices.contains(t)) {
      throw Error("terminals-not-on-first-tree", "terminal " + std::to_string(t + 1));
    }
  }
  PartitionState st(inst.graph, inst.terminals, inst.demands, trees, &options, stats);
  run_single_tree(st);

  SolveOutcome out;
  if (!st.emission() || static_cast<int>(st.emission()->sets.size()) == st.k()) {
    for (int i = 0; i < st.k(); ++i) {
      if (!st.full(i)) {
        broken("single-tree run ended with set " + std::to_string(i + 1) + " short");
      }
      out.block_sets.push_back(i);
      out.blocks.push_back(st.set(i));
    }
    out.complete = true;
    return out;
  }
  const Emission& e = *st.emission();
  std::vector<int> all_trees(static_cast<std::size_t>(st.num_trees()));
  std::iota(all_trees.begin(), all_trees.end(), 0);
  out.dropped_trees = dropped_for(e, all_trees);
  out.block_sets = e.sets;
  VertexSet alive(inst.graph.num_vertices());
  for (VertexId v = 0; v < inst.graph.num_vertices(); ++v) {
    alive.insert(v);
  }
  for (int i : e.sets) {
    out.blocks.push_back(st.set(i));
    for (VertexId v : st.set(i).members()) {
      alive.erase(v);
    }
  }
  InducedSubgraph sub = induced_subgraph(inst.graph, alive);
  std::vector<int> kept_trees;
  for (int t = 0; t < st.num_trees(); ++t) {
    if (!std::binary_search(out.dropped_trees.begin(), out.dropped_trees.end(), t)) {
      kept_trees.push_back(t);
    }
  }
  out.reduced_trees = restrict_trees(trees.trees, kept_trees, sub);
  out.reduced.graph = sub.graph;
  for (int i = 0; i < st.k(); ++i) {
    if (std::find(e.sets.begin(), e.sets.end(), i) == e.sets.end()) {
      out.reduced.terminals.push_back(sub.to_local[static_cast<std::size_t>(inst.terminals[static_cast<std::size_t>(i)])]);
      out.reduced.demands.push_back(inst.demands[static_cast<std::size_t>(i)]);
      out.reduced_terminal_index.push_back(i);
    }
  }
  out.reduced_to_parent = sub.to_parent;
  return out;
}

Categorized categorize_trees(const Graph& g, const CdsInput& trees, const std::vector<VertexId>& terminals) {
  Categorized out;
  out.trees = trees;
  const int nt = static_cast<int>(trees.trees.size());
  std::vector<int> count(static_cast<std::size_t>(nt), 0);
  for (VertexId term : terminals) {
    int owner = -1;
    for (int t = 0; t < nt; ++t) {
      if (trees.trees[static_cast<std::size_t>(t)].vertices.contains(term)) {
        owner = t;
        break;
      }
    }
    if (owner < 0) {
      // Stray terminal: tree 0 dominates it, so hang it off tree 0.
      DominatingTree& t0 = out.trees.trees.front();
      VertexId anchor = -1;
      for (VertexId w : g.neighbors(term)) {
        if (trees.trees.front().vertices.contains(w)) {
          anchor = w;
          break;
        }
      }
      if (anchor < 0) {
        broken("terminal " + std::to_string(term + 1) + " is not dominated by the first tree");
      }
      t0.vertices.insert(term);
      t0.tree_edges.push_back({anchor, term});
      owner = 0;
    }
    out.tree_of_terminal.push_back(owner);
    ++count[static_cast<std::size_t>(owner)];
  }
  for (int t = 0; t < nt; ++t) {
    const int c = count[static_cast<std::size_t>(t)];
    (c == 0 ? out.categories.zero : c == 1 ? out.categories.one : out.categories.many).push_back(t);
  }
  return out;
}

void add_tree_vertices(PartitionState& st, const TreeCategories& cats) {
  for (int i = 0; i < st.k(); ++i) {
    st.place(st.terminal(i), i, -1);
    if (st.emission()) {
      return;
    }
  }
  std::vector<int> bearing = cats.one;
  bearing.insert(bearing.end(), cats.many.begin(), cats.many.end());
  std::sort(bearing.begin(), bearing.end());
  for (int t : bearing) {
    std::vector<VertexId> queue;
    for (int i = 0; i < st.k(); ++i) {
      if (st.tree_of(st.terminal(i)) == t) {
        queue.push_back(st.terminal(i));
      }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId u = queue[head];
      for (VertexId w : st.tree_neighbors(u)) {
        if (st.tree_of(w) == t && st.set_of(w) < 0) {
          st.place(w, st.set_of(u), u);
          if (st.emission()) {
            return;
          }
          queue.push_back(w);
        }
      }
    }
  }
  st.checkpoint("bearing-trees");
  const int n = st.graph().num_vertices();
  for (VertexId v = 0; v < n; ++v) {
    if (st.tree_of(v) >= 0 || st.set_of(v) >= 0) {
      continue;
    }
    int target = -1;
    VertexId parent = -1;
    for (VertexId w : st.graph().neighbors(v)) {
      const int s = st.set_of(w);
      if (s >= 0 && (target < 0 || s < target)) {
        target = s;
        parent = w;
      }
    }
    if (target < 0) {
      broken("vertex " + std::to_string(v + 1) + " has no placed neighbour");
    }
    st.place(v, target, parent);
    if (st.emission()) {
      return;
    }
  }
  st.checkpoint("general-non-tree");
}

std::optional<TreeGroup> choose_tree_set(const PartitionState& st, const TreeCategories& cats) {
  std::size_t next_zero = 0;
  auto group_for = [&](int lead) {
    TreeGroup grp;
    grp.lead = lead;
    for (int i = 0; i < st.k(); ++i) {
      if (st.tree_of(st.terminal(i)) == lead) {
        grp.sets.push_back(i);
      }
    }
    return grp;
  };
  auto covers = [&](const TreeGroup& grp) {
    long long spare = 0;
    long long need = 0;
    for (int t : grp.extra) {
      spare += st.tree(t).vertices.size();
    }
    for (int i : grp.sets) {
      need += st.deficit(i);
    }
    return spare >= need;
  };
  for (int lead : cats.many) {
    TreeGroup grp = group_for(lead);
    const std::size_t want = grp.sets.size() - 1;
    if (next_zero + want > cats.zero.size()) {
      broken("fewer terminal-free trees than the count argument allows");
    }
    for (std::size_t x = 0; x < want; ++x) {
      grp.extra.push_back(cats.zero[next_zero++]);
    }
    if (covers(grp)) {
      return grp;
    }
  }
  for (int lead : cats.one) {
    TreeGroup grp = group_for(lead);
    if (covers(grp)) {
      return grp;
    }
  }
  return std::nullopt;
}

VertexSet trim_block(const Graph& g, VertexSet block, VertexId keep, int target) {
  while (block.size() > target) {
    std::vector<VertexId> order{keep};
    VertexSet seen(g.num_vertices());
    seen.insert(keep);
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (VertexId w : g.neighbors(order[head])) {
        if (block.contains(w) && seen.insert(w)) {
          order.push_back(w);
        }
      }
    }
    if (static_cast<int>(order.size()) != block.size()) {
      throw Error("not-connected", "block to trim is disconnected");
    }
    block.erase(order.back());
  }
  return block;
}

GlPartition solve(const GlInstance& inst, const CdsInput& trees, const SolveOptions& options, SolveStats* stats) {
  if (std::string why = check_gl_instance(inst); !why.empty()) {
    throw Error("invalid-instance", why);
  }
  if (std::string why = check_cds_input(inst.graph, trees); !why.empty()) {
    throw Error("invalid-cds-input", why);
  }
  if (static_cast<int>(trees.trees.size()) != inst.k()) {
    throw Error("invalid-cds-input", "need exactly " + std::to_string(inst.k()) + " trees, got " +
                                         std::to_string(trees.trees.size()));
  }
  const Graph& g = inst.graph;
  const int n = g.num_vertices();
  GlPartition result;
  result.blocks.assign(static_cast<std::size_t>(inst.k()), VertexSet(n));

  VertexSet alive(n);
  for (VertexId v = 0; v < n; ++v) {
    alive.insert(v);
  }
  std::vector<int> live_sets(static_cast<std::size_t>(inst.k()));
  std::iota(live_sets.begin(), live_sets.end(), 0);
  std::vector<int> live_trees = live_sets;

  auto finish_block = [&](int global_set, const VertexSet& local_block, const std::vector<VertexId>& to_global,
                          int global_tree, const PartitionState& st) {
    VertexSet& out = result.blocks[static_cast<std::size_t>(global_set)];
    for (VertexId v : local_block.members()) {
      const VertexId gv = to_global[static_cast<std::size_t>(v)];
      out.insert(gv);
      alive.erase(gv);
    }
    st.trace_emit(global_set, global_tree);
    if (stats != nullptr) {
      ++stats->emissions;
    }
  };
  auto retire = [](std::vector<int>& live, std::vector<int> positions) {
    std::sort(positions.rbegin(), positions.rend());
    for (int p : positions) {
      live.erase(live.begin() + p);
    }
  };

  while (!live_sets.empty()) {
    if (stats != nullptr) {
      ++stats->rounds;
    }
    InducedSubgraph sub = induced_subgraph(g, alive);
    std::vector<VertexId> terms;
    std::vector<int> dems;
    for (int s : live_sets) {
      terms.push_back(sub.to_local[static_cast<std::size_t>(inst.terminals[static_cast<std::size_t>(s)])]);
      dems.push_back(inst.demands[static_cast<std::size_t>(s)]);
    }
    std::vector<int> all_live(live_trees.size());
    std::iota(all_live.begin(), all_live.end(), 0);
    const CdsInput local_trees = restrict_trees(trees.trees, live_trees, sub);
    const Categorized cat = categorize_trees(sub.graph, local_trees, terms);

    PartitionState st(sub.graph, terms, dems, cat.trees, &options, stats);
    st.global_vertex = sub.to_parent;
    st.global_set = live_sets;
    add_tree_vertices(st, cat.categories);

    if (st.emission()) {
      const Emission e = *st.emission();
      const std::vector<int> dropped = dropped_for(e, all_live);
      for (std::size_t x = 0; x < e.sets.size(); ++x) {
        const int local_set = e.sets[x];
        finish_block(live_sets[static_cast<std::size_t>(local_set)], st.set(local_set), sub.to_parent,
                     live_trees[static_cast<std::size_t>(dropped[std::min(x, dropped.size() - 1)])], st);
      }
      retire(live_sets, e.sets);
      retire(live_trees, dropped);
      continue;
    }

    const std::optional<TreeGroup> grp = choose_tree_set(st, cat.categories);
    if (!grp) {
      broken("no tree group can absorb its remaining demand");
    }
    // G': the group's sets plus its spare trees.
    VertexSet keep(sub.graph.num_vertices());
    for (int i : grp->sets) {
      for (VertexId v : st.set(i).members()) {
        keep.insert(v);
      }
    }
    for (int t : grp->extra) {
      for (VertexId v : st.tree(t).vertices.members()) {
        keep.insert(v);
      }
    }
    InducedSubgraph inner = induced_subgraph(sub.graph, keep);
    std::vector<int> group_trees{grp->lead};
    group_trees.insert(group_trees.end(), grp->extra.begin(), grp->extra.end());
    const CdsInput inner_trees = restrict_trees(cat.trees.trees, group_trees, inner);

    std::vector<VertexId> inner_terms;
    std::vector<int> inner_dems;
    int others = 0;
    for (int i : grp->sets) {
      inner_terms.push_back(inner.to_local[static_cast<std::size_t>(st.terminal(i))]);
      inner_dems.push_back(st.demand(i));
      others += st.demand(i);
    }
    others -= inner_dems.front();
    const int first_demand = inner_dems.front();
    inner_dems.front() = keep.size() - others;
    if (inner_dems.front() < first_demand) {
      broken("group subgraph is smaller than the group demand");
    }
    const bool inflated = inner_dems.front() > first_demand;

    std::vector<VertexId> inner_to_global(inner.to_parent.size());
    for (std::size_t x = 0; x < inner.to_parent.size(); ++x) {
      inner_to_global[x] = sub.to_parent[static_cast<std::size_t>(inner.to_parent[x])];
    }
    std::vector<int> inner_global_sets;
    for (int i : grp->sets) {
      inner_global_sets.push_back(live_sets[static_cast<std::size_t>(i)]);
    }
    PartitionState in(inner.graph, inner_terms, inner_dems, inner_trees, &options, stats);
    in.global_vertex = inner_to_global;
    in.global_set = inner_global_sets;
    run_single_tree(in);

    auto block_of = [&](int x) {
      VertexSet b = in.set(x);
      if (x == 0 && inflated) {
        b = trim_block(inner.graph, b, inner_terms.front(), first_demand);
      }
      return b;
    };
    std::vector<int> done_sets;
    std::vector<int> dropped_positions;
    const std::optional<Emission>& ie = in.emission();
    if (!ie || static_cast<int>(ie->sets.size()) == in.k()) {
      for (int x = 0; x < in.k(); ++x) {
        if (!in.full(x)) {
          broken("group run ended with a short set");
        }
        finish_block(inner_global_sets[static_cast<std::size_t>(x)], block_of(x), inner_to_global,
                     live_trees[static_cast<std::size_t>(grp->lead)], in);
        done_sets.push_back(grp->sets[static_cast<std::size_t>(x)]);
      }
      dropped_positions = group_trees;
    } else {
      std::vector<int> pool(group_trees.size());
      std::iota(pool.begin(), pool.end(), 0);
      const std::vector<int> dropped_inner = dropped_for(*ie, pool);
      for (std::size_t x = 0; x < ie->sets.size(); ++x) {
        const int local = ie->sets[x];
        const int tree_pos = group_trees[static_cast<std::size_t>(dropped_inner[std::min(x, dropped_inner.size() - 1)])];
        finish_block(inner_global_sets[static_cast<std::size_t>(local)], block_of(local), inner_to_global,
                     live_trees[static_cast<std::size_t>(tree_pos)], in);
        done_sets.push_back(grp->sets[static_cast<std::size_t>(local)]);
      }
      for (int d : dropped_inner) {
        dropped_positions.push_back(group_trees[static_cast<std::size_t>(d)]);
      }
    }
    retire(live_sets, done_sets);
    retire(live_trees, dropped_positions);
  }
  return result;
}

} // namespace glpart
