// glpart command-line front end. Exit codes: 0 success, 1 infeasible or
// failed verification, 2 usage, parse or input errors.

#include <cstdint>
#include <iostream>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "glpart/cds_structured.hpp"
#include "glpart/error.hpp"
#include "glpart/generate.hpp"
#include "glpart/gl_engine.hpp"
#include "glpart/io.hpp"
#include "glpart/verify.hpp"

using namespace glpart;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

/// Codes that describe bad input rather than an infeasible or failed run.
bool is_input_error(const std::string& code) {
  static const std::set<std::string> input = {
      "syntax-error", "invalid-input", "io-error", "missing-extension", "invalid-parameters",
      "too-large-for-oracle", "k-mismatch", "invalid-cds-input", "invalid-instance", "wrong-class",
      "invalid-model", "invalid-graph", "degenerate-graph"};
  return input.count(code) != 0;
}

InstanceBundle load(const std::string& path) { return parse_instance(read_file(path)); }

std::string sibling_cds_path(const std::string& path) {
  const std::size_t slash = path.find_last_of('/');
  const std::size_t dot = path.find_last_of('.');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) {
    return path.substr(0, dot) + ".cds";
  }
  return path + ".cds";
}

struct GenArgs {
  std::string cls;
  int n = 0;
  int na = 0;
  int nb = 0;
  int k = 0;
  std::uint64_t seed = 1;
  std::string out;
  int extra = -1;
  int terminals = 0;
  bool exact = false;
};

int run_gen(const GenArgs& a) {
  InstanceBundle b;
  const GenOptions opt{a.exact, kDefaultRetries};
  std::string cds_text;
  if (a.cls == "interval") {
    b = bundle_from_interval(gen_interval(a.n, a.k, a.seed, opt));
  } else if (a.cls == "biconvex") {
    b = bundle_from_convex(gen_biconvex(a.na, a.nb, a.k, a.seed, opt), true);
  } else if (a.cls == "convex") {
    b = bundle_from_convex(gen_convex(a.na, a.nb, a.k, a.seed, opt), false);
  } else {
    const PlantedCds pc = gen_planted_cds(a.n, a.k, a.extra >= 0 ? a.extra : a.n, a.seed);
    b = bundle_from_graph(pc.graph);
    const GlInstance inst = gen_gl_extension(pc.graph, a.k, a.seed + 1);
    b.terminals = inst.terminals;
    b.demands = inst.demands;
    std::vector<VertexSet> sets;
    for (const DominatingTree& t : pc.trees.trees) {
      sets.push_back(t.vertices);
    }
    cds_text = write_cds(sets);
  }
  if (a.cls != "planted" && a.terminals > 0) {
    const GlInstance inst = gen_gl_extension(b.graph, a.terminals, a.seed + 1);
    b.terminals = inst.terminals;
    b.demands = inst.demands;
  }
  b.header = {"generated by glpart gen --class " + a.cls + " --seed " + std::to_string(a.seed),
              "prng: std::mt19937_64 (standard reference stream), rejection-sampled bounded draws"};
  write_file(a.out, write_instance(b));
  if (!cds_text.empty()) {
    write_file(sibling_cds_path(a.out), cds_text);
  }
  return kOk;
}

int run_cds(const std::string& cls, int k, const std::string& in, const std::string& out) {
  const InstanceBundle b = load(in);
  const bool matches = (cls == "interval" && b.kind == InstanceKind::Interval) ||
                       (cls == "biconvex" && b.kind == InstanceKind::Biconvex) ||
                       (cls == "convex" && (b.kind == InstanceKind::Convex || b.kind == InstanceKind::Biconvex));
  if (!matches) {
    throw Error("wrong-class", "input file does not hold a " + cls + " model");
  }
  StructuredCds built;
  if (cls == "interval") {
    built = cds_interval(*b.interval, k);
  } else if (cls == "biconvex") {
    built = cds_biconvex(*b.convex, k);
  } else {
    built = cds_convex(*b.convex, k);
  }
  const CdsPartition part = extend_to_partition(b.graph, built.family);
  write_file(out, write_cds(part.blocks));
  return kOk;
}

int run_partition(const std::string& in, const std::string& cds, const std::string& out, const std::string& trace,
                  bool check, bool family) {
  const InstanceBundle b = load(in);
  const GlInstance inst = b.gl_instance();
  const std::vector<VertexSet> sets = parse_cds(read_file(cds), b.graph.num_vertices());
  if (static_cast<int>(sets.size()) != inst.k()) {
    throw Error("k-mismatch", "cds file has " + std::to_string(sets.size()) + " sets but the instance has k = " +
                                  std::to_string(inst.k()));
  }
  for (const VertexSet& s : sets) {
    if (s.empty() || !is_connected_subset(b.graph, s)) {
      throw Error("invalid-cds-input", "every cds set must be non-empty and connected");
    }
  }
  const CdsInput trees = CdsInput::from_sets(b.graph, sets);
  std::string trace_text;
  SolveOptions opt;
  opt.check_invariants = check;
  opt.family_restart = family;
  if (!trace.empty()) {
    opt.trace = [&trace_text](const TraceEvent& ev) { trace_text += format_trace(ev) + "\n"; };
  }
  const GlPartition p = solve(inst, trees, opt);
  write_file(out, write_partition(p.blocks));
  if (!trace.empty()) {
    write_file(trace, trace_text);
  }
  return kOk;
}

int run_verify(const std::string& what, const std::string& instance, const std::string& object) {
  const InstanceBundle b = load(instance);
  const std::string text = read_file(object);
  VerificationReport report;
  if (what == "gl") {
    const GlInstance inst = b.gl_instance();
    report = verify_gl(inst, GlPartition{parse_partition(text, b.graph.num_vertices())});
  } else {
    report = verify_cds_family(b.graph, CdsFamily{parse_cds(text, b.graph.num_vertices())});
  }
  std::cout << write_report(report);
  return report.ok() ? kOk : kFailed;
}

int run_oracle(const std::string& what, int k, int limit, const std::string& in) {
  const InstanceBundle b = load(in);
  if (what == "gl") {
    const auto p = brute_gl(b.gl_instance(), limit);
    if (!p) {
      std::cout << "INFEASIBLE\n";
      return kFailed;
    }
    std::cout << write_partition(p->blocks);
    return kOk;
  }
  if (k < 1) {
    throw Error("invalid-parameters", "oracle --what cds needs -k >= 1");
  }
  const auto fam = brute_cds(b.graph, k, limit);
  if (!fam) {
    std::cout << "INFEASIBLE\n";
    return kFailed;
  }
  std::cout << write_cds(fam->sets);
  return kOk;
}

int run_connectivity(const std::string& in) {
  std::cout << vertex_connectivity(load(in).graph) << "\n";
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connected dominating set partitions and Gyori-Lovasz partitions"};
  app.require_subcommand(1);

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a seeded model or planted instance");
  gen_cmd->add_option("--class", gen.cls, "interval | biconvex | convex | planted")
      ->required()
      ->check(CLI::IsMember({"interval", "biconvex", "convex", "planted"}));
  gen_cmd->add_option("--n", gen.n, "Vertex count (interval, planted)");
  gen_cmd->add_option("--na", gen.na, "A-side size (biconvex, convex)");
  gen_cmd->add_option("--nb", gen.nb, "B-side size (biconvex, convex)");
  gen_cmd->add_option("--k", gen.k, "Target connectivity, or number of planted trees")->required();
  gen_cmd->add_option("--seed", gen.seed, "PRNG seed")->required();
  gen_cmd->add_option("-o,--output", gen.out, "Output file; planted also writes <stem>.cds")->required();
  gen_cmd->add_option("--extra", gen.extra, "Planted: extra random edges (default n)");
  gen_cmd->add_option("--terminals", gen.terminals, "Structured classes: append a GL extension with this many terminals");
  gen_cmd->add_flag("--exact", gen.exact, "Require connectivity exactly --k");

  std::string cds_class;
  int cds_k = 0;
  std::string cds_in;
  std::string cds_out;
  CLI::App* cds_cmd = app.add_subcommand("cds", "Build a CDS partition of a structured model");
  cds_cmd->add_option("--class", cds_class, "interval | biconvex | convex")
      ->required()
      ->check(CLI::IsMember({"interval", "biconvex", "convex"}));
  cds_cmd->add_option("-k", cds_k, "Partition size")->required();
  cds_cmd->add_option("input", cds_in, "Model file")->required();
  cds_cmd->add_option("-o,--output", cds_out, "Output cds file")->required();

  std::string part_in;
  std::string part_cds;
  std::string part_out;
  std::string part_trace;
  bool part_check = false;
  bool part_family = false;
  CLI::App* part_cmd = app.add_subcommand(
      "partition",
      "Turn a size-k CDS partition into a GL partition. A CDS file is mandatory; build one with "
      "'cds' (structured classes) or 'oracle --what cds' (small graphs).");
  part_cmd->add_option("input", part_in, "Instance file with a GL extension")->required();
  part_cmd->add_option("--cds", part_cds, "CDS file with exactly k sets")->required();
  part_cmd->add_option("-o,--output", part_out, "Output partition file")->required();
  part_cmd->add_option("--trace", part_trace, "Write solver events to this file");
  part_cmd->add_flag("--check-invariants", part_check, "Run the state checker at every checkpoint");
  part_cmd->add_flag("--family-restart", part_family, "Also emit families of full sets");

  std::string ver_what;
  std::string ver_instance;
  std::string ver_object;
  CLI::App* ver_cmd = app.add_subcommand("verify", "Check a partition or CDS family");
  ver_cmd->add_option("--what", ver_what, "gl | cds")->required()->check(CLI::IsMember({"gl", "cds"}));
  ver_cmd->add_option("instance", ver_instance, "Instance file")->required();
  ver_cmd->add_option("object", ver_object, "Partition or cds file")->required();

  std::string or_what;
  int or_k = 0;
  int or_limit = kOracleVertexLimit;
  std::string or_in;
  CLI::App* or_cmd = app.add_subcommand("oracle", "Exhaustive search on small graphs");
  or_cmd->add_option("--what", or_what, "gl | cds")->required()->check(CLI::IsMember({"gl", "cds"}));
  or_cmd->add_option("-k", or_k, "Number of sets (cds)");
  or_cmd->add_option("--limit", or_limit, "Largest vertex count the search accepts")->capture_default_str();
  or_cmd->add_option("input", or_in, "Instance file")->required();

  std::string conn_in;
  CLI::App* conn_cmd = app.add_subcommand("connectivity", "Print the vertex connectivity");
  conn_cmd->add_option("input", conn_in, "Instance file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << "ERROR usage\n";
    std::cerr << e.what() << "\n";
    return kUsage;
  }

  try {
    if (gen_cmd->parsed()) {
      return run_gen(gen);
    }
    if (cds_cmd->parsed()) {
      return run_cds(cds_class, cds_k, cds_in, cds_out);
    }
    if (part_cmd->parsed()) {
      return run_partition(part_in, part_cds, part_out, part_trace, part_check, part_family);
    }
    if (ver_cmd->parsed()) {
      return run_verify(ver_what, ver_instance, ver_object);
    }
    if (or_cmd->parsed()) {
      return run_oracle(or_what, or_k, or_limit, or_in);
    }
    return run_connectivity(conn_in);
  } catch (const Error& e) {
    std::cout << "ERROR " << e.code() << "\n";
    std::cerr << e.what() << "\n";
    return is_input_error(e.code()) ? kUsage : kFailed;
  } catch (const std::exception& e) {
    std::cout << "ERROR internal\n";
    std::cerr << e.what() << "\n";
    return kFailed;
  }
}
