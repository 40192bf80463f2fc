#include "glpart/partition.hpp"

#include <numeric>
#include <string>

namespace glpart {

std::string check_gl_instance(const GlInstance& inst) {
  const int n = inst.graph.num_vertices();
  if (inst.terminals.empty()) {
    return "k must be at least 1";
  }
  if (inst.terminals.size() != inst.demands.size()) {
    return "terminal and demand counts differ";
  }
  VertexSet seen(n);
  for (VertexId c : inst.terminals) {
    if (c < 0 || c >= n) {
      return "terminal " + std::to_string(c) + " out of range";
    }
    if (!seen.insert(c)) {
      return "terminal " + std::to_string(c) + " repeated";
    }
  }
  long long total = 0;
  for (int d : inst.demands) {
    if (d < 1) {
      return "demands must be positive";
    }
    total += d;
  }
  if (total != n) {
    return "sum of demands " + std::to_string(total) + " differs from n = " + std::to_string(n);
  }
  return {};
}

CdsInput CdsInput::from_sets(const Graph& g, const std::vector<VertexSet>& sets) {
  CdsInput in;
  in.trees.reserve(sets.size());
  for (const VertexSet& s : sets) {
    in.trees.push_back(DominatingTree::from_set(g, s));
  }
  return in;
}

std::string check_cds_input(const Graph& g, const CdsInput& in) {
  VertexSet used(g.num_vertices());
  for (std::size_t i = 0; i < in.trees.size(); ++i) {
    const std::string why = check_dominating_tree(g, in.trees[i]);
    if (!why.empty()) {
      return "tree " + std::to_string(i + 1) + ": " + why;
    }
    for (VertexId v : in.trees[i].vertices.members()) {
      if (!used.insert(v)) {
        return "trees overlap at vertex " + std::to_string(v + 1);
      }
    }
  }
  return {};
}

} // namespace glpart
