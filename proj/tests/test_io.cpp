#include <string>

#include "doctest.h"
#include "glpart/error.hpp"
#include "glpart/generate.hpp"
#include "glpart/io.hpp"
#include "support.hpp"

using namespace glpart;
using namespace glpart::testing;

namespace {

Error parse_error(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected a parse error for: " << text);
  return Error("none", "");
}

bool same_graph(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) {
    return false;
  }
  for (const Edge& e : a.edges()) {
    if (!b.has_edge(e.u, e.v)) {
      return false;
    }
  }
  return true;
}

InstanceBundle random_bundle(std::uint64_t seed) {
  Rng rng(seed);
  InstanceBundle b;
  switch (seed % 4) {
  case 0:
    b = bundle_from_interval(gen_interval(rng.range(3, 25), 2, seed));
    break;
  case 1:
    b = bundle_from_convex(gen_biconvex(rng.range(4, 10), rng.range(4, 10), 2, seed), true);
    break;
  case 2:
    b = bundle_from_convex(gen_convex(rng.range(6, 10), rng.range(10, 20), 2, seed), false);
    break;
  default:
    b = bundle_from_graph(gen_planted_cds(rng.range(4, 30), 2, rng.range(0, 20), seed).graph);
    break;
  }
  if (seed % 3 != 0) {
    const GlInstance inst = gen_gl_extension(b.graph, rng.range(1, 4), seed + 9);
    b.terminals = inst.terminals;
    b.demands = inst.demands;
  }
  if (seed % 5 == 0) {
    b.header = {"seed " + std::to_string(seed)};
  }
  return b;
}

} // namespace

TEST_CASE("parse a path graph") {
  const InstanceBundle b = parse_instance("p gl 3 2\ne 1 2\ne 2 3\n");
  CHECK(b.kind == InstanceKind::Graph);
  CHECK(same_graph(b.graph, path_graph(3)));
  CHECK_FALSE(b.has_extension());
  CHECK_THROWS_AS(b.gl_instance(), Error);
}

TEST_CASE("comments and extension lines") {
  const InstanceBundle b = parse_instance("# a comment\np gl 3 2\ne 1 2 # trailing\ne 2 3\nk 2\nt 1 1\nt 3 2\n");
  REQUIRE(b.has_extension());
  CHECK(b.terminals == std::vector<VertexId>{0, 2});
  CHECK(b.demands == std::vector<int>{1, 2});
  CHECK(b.gl_instance().k() == 2);
}

TEST_CASE("parse errors carry line numbers") {
  const Error sum = parse_error("p gl 3 2\ne 1 2\ne 2 3\nk 1\nt 1 2\n");
  CHECK(sum.code() == "invalid-input");
  CHECK(std::string(sum.what()).find("invariant violated") != std::string::npos);

  CHECK(parse_error("p gl 3 2\ne 1 2\ne 2 3\nk 2\nt 1 0\nt 2 3\n").code() == "invalid-input");

  const Error bad = parse_error("p gl 3 2\ne 1 2\nx 2 3\n");
  CHECK(bad.code() == "syntax-error");
  CHECK(std::string(bad.what()).find("syntax error at line 3") != std::string::npos);

  CHECK(parse_error("p gl 3 2\ne 1 2\ne 2 4\n").code() == "invalid-input");
  CHECK(parse_error("p gl 3 2\ne 1 2\n").code() == "syntax-error");
  CHECK(parse_error("p gl 3 1\ne 1 1\n").code() == "invalid-input");
  CHECK(parse_error("p gl 2 1\ne 1 x\n").code() == "syntax-error");
  CHECK(parse_error("").code() == "syntax-error");
}

TEST_CASE("interval and convex files") {
  const InstanceBundle iv = parse_instance("p interval 3\ni 1 0 2\ni 2 2 4\ni 3 5 6\n");
  REQUIRE(iv.interval.has_value());
  CHECK(iv.graph.has_edge(0, 1));
  CHECK(iv.graph.degree(2) == 0);

  const InstanceBundle cv = parse_instance("p convex 2 2 3\ne 1 1\ne 2 1\ne 2 2\n");
  REQUIRE(cv.convex.has_value());
  CHECK(cv.kind == InstanceKind::Convex);
  CHECK(cv.graph.has_edge(cv.convex->a(1), cv.convex->b(1)));
  CHECK(parse_error("p convex 3 1 2\ne 1 1\ne 3 1\n").code() == "invalid-input");
}

TEST_CASE("cds and partition files") {
  const auto sets = parse_cds("c 2\ns 1 1 2\ns 2 4\n", 4);
  REQUIRE(sets.size() == 2);
  CHECK(sets[0] == vset(4, {0, 1}));
  CHECK(sets[1] == vset(4, {3}));
  CHECK(write_cds(sets) == "c 2\ns 1 1 2\ns 2 4\n");
  CHECK_THROWS_AS(parse_cds("c 1\ns 1 5\n", 4), Error);
  CHECK_THROWS_AS(parse_cds("c 1\ns 1 2 2\n", 4), Error);

  const auto blocks = parse_partition("v 1 1 3\nv 2 2\n", 3);
  CHECK(blocks[0] == vset(3, {0, 2}));
  CHECK(write_partition(blocks) == "v 1 1 3\nv 2 2\n");
}

TEST_CASE("trace lines are 1-based") {
  CHECK(format_trace({TraceEvent::Kind::Place, 3, -1, 1, -1}) == "PLACE 4 2");
  CHECK(format_trace({TraceEvent::Kind::Steal, 3, 0, 1, -1}) == "STEAL 4 1 2");
  CHECK(format_trace({TraceEvent::Kind::Emit, -1, -1, 2, 0}) == "EMIT 3 1");
}

TEST_CASE("round trips on generated files") {
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    const InstanceBundle b = random_bundle(seed);
    const std::string text = write_instance(b);
    const InstanceBundle back = parse_instance(text);
    // Parsing drops comments, so the normal form is the file without its header.
    InstanceBundle bare = b;
    bare.header.clear();
    CAPTURE(seed);
    CHECK(write_instance(back) == write_instance(bare));
    CHECK(back.kind == b.kind);
    CHECK(same_graph(back.graph, b.graph));
    CHECK(back.terminals == b.terminals);
    CHECK(back.demands == b.demands);
  }
}

TEST_CASE("generators: identical intervals and small connectivity targets") {
  IntervalModel same;
  for (int v = 0; v < 6; ++v) {
    same.intervals.push_back({0, 10});
  }
  CHECK(same.graph().num_edges() == 15);
  CHECK(vertex_connectivity(same.graph()) == 5);

  CHECK(vertex_connectivity(gen_interval(30, 3, 1).graph()) >= 3);
  CHECK(vertex_connectivity(gen_convex(40, 40, 8, 7).graph()) >= 8);
  CHECK_THROWS_AS(gen_interval(1, 1, 1), Error);

  const BiconvexModel full = gen_biconvex(5, 5, 5, 3);
  CHECK(full.graph().num_edges() == 25);
  CHECK_NOTHROW(full.validate());
}

TEST_CASE("generators: exact connectivity") {
  GenOptions exact;
  exact.exact = true;
  for (int k = 2; k <= 5; ++k) {
    CHECK(vertex_connectivity(gen_interval(40, k, static_cast<std::uint64_t>(k), exact).graph()) == k);
    CHECK(vertex_connectivity(gen_biconvex(20, 20, k, static_cast<std::uint64_t>(k), exact).graph()) == k);
  }
}

TEST_CASE("planted CDS generator") {
  const PlantedCds pc = gen_planted_cds(100, 5, 100, 3);
  CHECK(pc.trees.trees.size() == 5);
  CHECK(check_cds_input(pc.graph, pc.trees).empty());

  const PlantedCds tight = gen_planted_cds(8, 4, 0, 2);
  CHECK(check_cds_input(tight.graph, tight.trees).empty());
  CHECK(gen_planted_cds(5, 1, 3, 4).trees.trees.size() == 1);
  CHECK_THROWS_AS(gen_planted_cds(5, 3, 0, 1), Error);
}

TEST_CASE("GL extensions are compositions of n") {
  const Graph g = complete_graph(12);
  for (std::uint64_t seed = 1; seed <= 10000; ++seed) {
    const int k = 1 + static_cast<int>(seed % 12);
    const GlInstance inst = gen_gl_extension(g, k, seed);
    REQUIRE(check_gl_instance(inst).empty());
  }
  const GlInstance all = gen_gl_extension(g, 12, 5);
  for (int d : all.demands) {
    CHECK(d == 1);
  }
  CHECK(gen_gl_extension(g, 1, 5).demands == std::vector<int>{12});
  const VertexSet pool = vset(12, {3, 4});
  const GlInstance pooled = gen_gl_extension(g, 2, 8, &pool);
  CHECK(pool.contains(pooled.terminals[0]));
  CHECK(pool.contains(pooled.terminals[1]));
  CHECK_THROWS_AS(gen_gl_extension(g, 3, 8, &pool), Error);
}

TEST_CASE("generators are deterministic per seed") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    CHECK(write_instance(random_bundle(seed)) == write_instance(random_bundle(seed)));
  }
  CHECK(write_instance(random_bundle(4)) != write_instance(random_bundle(8)));
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 100; ++i) {
    CHECK(a.below(7) == b.below(7));
  }
  // First output of the standard 64-bit Mersenne Twister with the default seed.
  std::mt19937_64 ref;
  CHECK(ref() == 14514284786278117030ULL);
}
