#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "glpart/cds_structured.hpp"
#include "glpart/gl_engine.hpp"
#include "glpart/graph.hpp"
#include "glpart/partition.hpp"
#include "glpart/verify.hpp"

namespace glpart {

// Text formats. Files use 1-based ids and allow `#` comments on any line;
// everything in memory is 0-based.
//
//   graph      p gl <n> <m>            then m lines  e <u> <v>
//   interval   p interval <n>          then n lines  i <id> <left> <right>
//   convex     p convex <nA> <nB> <m>  then m lines  e <a> <b>
//   biconvex   p biconvex <nA> <nB> <m>
//   extension  k <k>                   then k lines  t <terminal> <demand>
//   cds        c <k>                   then k lines  s <i> <v...>
//   partition  k lines                 v <i> <v...>
//
// Parse failures throw Error("syntax-error", "syntax error at line L: ...")
// or Error("invalid-input", "invariant violated: ...").

enum class InstanceKind { Graph, Interval, Convex, Biconvex };

/// A graph or class model, optionally followed by a GL extension.
struct InstanceBundle {
  InstanceKind kind = InstanceKind::Graph;
  Graph graph;
  std::optional<IntervalModel> interval;
  std::optional<BiconvexModel> convex;  // Convex and Biconvex kinds
  std::vector<VertexId> terminals;      // empty without an extension
  std::vector<int> demands;
  /// Written as leading `# ` lines; parsing drops comments.
  std::vector<std::string> header;

  bool has_extension() const { return !terminals.empty(); }
  /// Throws Error("missing-extension") when the bundle has no terminals.
  GlInstance gl_instance() const;
};

InstanceBundle parse_instance(std::string_view text);
std::string write_instance(const InstanceBundle& b);

InstanceBundle bundle_from_graph(Graph g);
InstanceBundle bundle_from_interval(IntervalModel m);
InstanceBundle bundle_from_convex(const ConvexModel& m, bool biconvex);

/// Sets of a cds file, indexed by their `s <i>` label. Ranges and duplicate
/// members are checked here; disjointness and domination are left to the
/// verifier so that `verify` can report them.
std::vector<VertexSet> parse_cds(std::string_view text, int n);
std::string write_cds(const std::vector<VertexSet>& sets);

std::vector<VertexSet> parse_partition(std::string_view text, int n);
std::string write_partition(const std::vector<VertexSet>& blocks);

std::string write_report(const VerificationReport& r);
/// One trace line without the newline, e.g. `STEAL 4 2 1`.
std::string format_trace(const TraceEvent& ev);

/// Whole-file helpers. Throw Error("io-error") when the file cannot be
/// opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

} // namespace glpart
