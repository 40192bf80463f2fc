#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "glpart/graph.hpp"
#include "glpart/partition.hpp"

namespace glpart {

/// One solver event. Ids are those of the instance passed to solve(), 0-based.
struct TraceEvent {
  enum class Kind { Place, Steal, Emit };
  Kind kind = Kind::Place;
  VertexId vertex = -1;
  int from_set = -1;  // Steal only
  int set = -1;       // target set for Place/Steal, emitted set for Emit
  int tree = -1;      // Emit only
};

using TraceSink = std::function<void(const TraceEvent&)>;

struct SolveOptions {
  /// Run the full state checker at every checkpoint; throws
  /// Error("invariant-violated") on the first failure.
  bool check_invariants = false;
  /// Also emit families of l full sets that together touch at most l trees
  /// (brute force over full sets, skipped above 16 of them).
  bool family_restart = false;
  TraceSink trace;
};

struct SolveStats {
  int checkpoints = 0;
  int rounds = 0;
  int single_tree_calls = 0;
  int emissions = 0;
  int classifications = 0;
  int over_to_under = 0;
  int steals = 0;
};

enum class SetClass { Unclassified, Over, Under };

/// Blocks to output plus the trees that leave the family with them.
struct Emission {
  std::vector<int> sets;
  std::vector<int> trees;
};

/// Mutable bookkeeping shared by the single-tree and general solvers: the
/// growing sets, the attachment forest, Vlabel/Tlabel and Over/Under status.
class PartitionState {
public:
  PartitionState(const Graph& g, std::vector<VertexId> terminals, std::vector<int> demands,
                 const CdsInput& trees, const SolveOptions* options = nullptr, SolveStats* stats = nullptr);

  const Graph& graph() const { return *g_; }
  int k() const { return static_cast<int>(terminals_.size()); }
  int num_trees() const { return static_cast<int>(trees_.size()); }
  VertexId terminal(int i) const { return terminals_[static_cast<std::size_t>(i)]; }
  int demand(int i) const { return demands_[static_cast<std::size_t>(i)]; }
  const DominatingTree& tree(int t) const { return trees_[static_cast<std::size_t>(t)]; }
  /// Tree adjacency lists built from the tree certificates.
  const std::vector<VertexId>& tree_neighbors(VertexId v) const { return tree_adj_[static_cast<std::size_t>(v)]; }

  const VertexSet& set(int i) const { return sets_[static_cast<std::size_t>(i)]; }
  int set_of(VertexId v) const { return set_of_[static_cast<std::size_t>(v)]; }
  int tree_of(VertexId v) const { return tree_of_[static_cast<std::size_t>(v)]; }
  VertexId attach_parent(VertexId v) const { return parent_[static_cast<std::size_t>(v)]; }
  bool full(int i) const { return set(i).size() == demand(i); }
  int deficit(int i) const { return demand(i) - set(i).size(); }
  /// Number of distinct trees that set i intersects.
  int tree_hits(int i) const { return distinct_hits_[static_cast<std::size_t>(i)]; }
  bool hits_tree(int i, int t) const;

  SetClass set_class(int i) const { return class_[static_cast<std::size_t>(i)]; }
  int tlabel(int i) const { return tlabel_[static_cast<std::size_t>(i)]; }
  int tlabel_owner(int t) const { return owner_[static_cast<std::size_t>(t)]; }
  int vlabel_of(VertexId v) const { return vlabel_of_[static_cast<std::size_t>(v)]; }
  /// Vlabel vertices of set i that are not yet placed.
  int remaining_vlabel(int i) const { return pending_[static_cast<std::size_t>(i)]; }

  /// Adds v to set i, attached through `parent` (-1 only for terminals).
  void place(VertexId v, int i, VertexId parent);
  /// Removes an attachment leaf from its set.
  void remove(VertexId v);
  /// Moves v into set `to`; v is either a pending Vlabel vertex of an Over set
  /// or an attachment leaf of another set.
  void steal(VertexId v, int to, VertexId parent);

  void set_vlabel(VertexId v, int i);
  void clear_vlabel(VertexId v);
  void set_class(int i, SetClass c);
  void assign_tree(int i, int t);

  /// Set when some full set touches exactly one tree (or, with
  /// family_restart, a family of full sets touching no more trees than sets).
  const std::optional<Emission>& emission() const { return emission_; }
  /// Recomputes emission() from the current sets.
  const std::optional<Emission>& restart_check();

  /// Empty when every state invariant holds; otherwise the first violation.
  std::string check_invariants() const;
  /// Counts a checkpoint and, when enabled, throws on a violated invariant.
  void checkpoint(const char* where);

  void trace_emit(int set, int tree) const;
  SolveStats* stats() const { return stats_; }
  const SolveOptions* options() const { return options_; }

  /// Id translation used for trace output.
  std::vector<VertexId> global_vertex;
  std::vector<int> global_set;

private:
  void count_hit(int i, VertexId v, int delta);
  void trace(TraceEvent ev) const;

  const Graph* g_;
  std::vector<VertexId> terminals_;
  std::vector<int> demands_;
  std::vector<DominatingTree> trees_;
  std::vector<std::vector<VertexId>> tree_adj_;
  std::vector<int> tree_of_;
  std::vector<VertexSet> sets_;
  std::vector<int> set_of_;
  std::vector<VertexId> parent_;
  std::vector<std::vector<int>> hits_;
  std::vector<int> distinct_hits_;
  std::vector<SetClass> class_;
  std::vector<char> ever_under_;
  std::vector<int> tlabel_;
  std::vector<int> owner_;
  std::vector<int> vlabel_of_;
  std::vector<int> pending_;
  std::optional<Emission> emission_;
  const SolveOptions* options_;
  SolveStats* stats_;
};

// Single-tree case: every terminal lies on tree 0.

/// Grows the terminal singletons over tree 0 (tree edges only, BFS), then
/// places every vertex outside all trees. Stops early on an emission.
void add_trees(PartitionState& st);
/// Vlabel every unplaced vertex, classify Over/Under, give Under sets a tree
/// and one vertex of it. Stops early on an emission.
void labeling(PartitionState& st);
/// Fills Under sets from their trees, then Over sets from their Vlabel, then
/// the leftovers. Stops early on an emission.
void add_vertices(PartitionState& st);

struct SolveOutcome {
  bool complete = false;
  /// Complete: one block per terminal. Emit: the emitted blocks only.
  std::vector<int> block_sets;
  std::vector<VertexSet> blocks;
  /// Emit only: indices of the dropped trees, and the reduced instance.
  std::vector<int> dropped_trees;
  GlInstance reduced;
  CdsInput reduced_trees;
  std::vector<VertexId> reduced_to_parent;
  std::vector<int> reduced_terminal_index;
};

/// Throws Error("terminals-not-on-first-tree").
SolveOutcome solve_single_tree(const GlInstance& inst, const CdsInput& trees, const SolveOptions& options = {},
                               SolveStats* stats = nullptr);

// General case.

struct TreeCategories {
  std::vector<int> zero;  // no terminal
  std::vector<int> one;   // exactly one
  std::vector<int> many;  // two or more
};

struct Categorized {
  CdsInput trees;
  TreeCategories categories;
  std::vector<int> tree_of_terminal;
};

/// Attaches stray terminals to tree 0 and buckets trees by terminal count.
Categorized categorize_trees(const Graph& g, const CdsInput& trees, const std::vector<VertexId>& terminals);

/// Grows each terminal-bearing tree from its terminals using only its own
/// edges, then places the vertices outside all trees. Stops on an emission.
void add_tree_vertices(PartitionState& st, const TreeCategories& cats);

struct TreeGroup {
  int lead = -1;
  std::vector<int> extra;  // zero-terminal trees paired with the lead
  std::vector<int> sets;   // sets whose terminal lies on the lead
};

/// First group whose spare trees can cover the group's remaining demand.
std::optional<TreeGroup> choose_tree_set(const PartitionState& st, const TreeCategories& cats);

/// Full pipeline. Throws Error("invalid-instance") / Error("invalid-cds-input").
GlPartition solve(const GlInstance& inst, const CdsInput& trees, const SolveOptions& options = {},
                  SolveStats* stats = nullptr);

/// Trims a connected block containing `keep` down to `target` vertices by
/// repeatedly removing the last leaf of a BFS tree rooted at `keep`.
VertexSet trim_block(const Graph& g, VertexSet block, VertexId keep, int target);

} // namespace glpart
