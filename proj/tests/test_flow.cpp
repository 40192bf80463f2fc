#include <algorithm>
#include <set>

#include "doctest.h"
#include "glpart/error.hpp"
#include "glpart/flow_paths.hpp"
#include "glpart/generate.hpp"
#include "glpart/verify.hpp"
#include "support.hpp"

using namespace glpart;
using namespace glpart::testing;

namespace {

void check_family(const Graph& g, const PathFamily& fam) {
  std::set<VertexId> interior;
  for (const Path& p : fam.paths) {
    REQUIRE(p.size() >= 2);
    CHECK(p.front() == fam.s);
    CHECK(p.back() == fam.t);
    CHECK(is_valid_path(g, p));
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      CHECK(interior.insert(p[i]).second);
    }
  }
}

Graph random_graph(Rng& rng, int n, int percent) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.range(1, 100) <= percent) {
        edges.push_back({u, v});
      }
    }
  }
  return Graph(n, edges);
}

} // namespace

TEST_CASE("vertex_disjoint_paths on K4") {
  const Graph g = complete_graph(4);
  const PathFamily fam = vertex_disjoint_paths(g, 0, 3, 3);
  check_family(g, fam);
  std::set<Path> got(fam.paths.begin(), fam.paths.end());
  CHECK(got == std::set<Path>{{0, 3}, {0, 1, 3}, {0, 2, 3}});
}

TEST_CASE("vertex_disjoint_paths through a cut vertex") {
  const Graph g = path_graph(3);
  const PathFamily fam = vertex_disjoint_paths(g, 0, 2, 2);
  REQUIRE(fam.paths.size() == 1);
  CHECK(fam.paths[0] == Path{0, 1, 2});
}

TEST_CASE("vertex_disjoint_paths on the convex fixture") {
  const Graph g = convex_counterexample();
  const PathFamily fam = vertex_disjoint_paths(g, 0, 4, 2);
  CHECK(fam.paths.size() == 2);
  check_family(g, fam);
  CHECK(brute_local_connectivity(g, 0, 4) == 2);
}

TEST_CASE("want caps the family size") {
  const Graph g = complete_graph(6);
  CHECK(vertex_disjoint_paths(g, 1, 4, 2).paths.size() == 2);
  CHECK(vertex_disjoint_paths(g, 1, 4).paths.size() == 5);
}

TEST_CASE("identical endpoints are rejected") {
  try {
    vertex_disjoint_paths(complete_graph(3), 1, 1);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == "identical-endpoints");
  }
  CHECK_THROWS_AS(local_connectivity(complete_graph(3), 2, 2), Error);
}

TEST_CASE("local_connectivity small cases") {
  CHECK(local_connectivity(complete_graph(5), 0, 4) == 4);
  CHECK(local_connectivity(star_graph(4), 0, 3) == 1);
  CHECK(local_connectivity(cycle_graph(6), 0, 3) == 2);
  CHECK(local_connectivity(make_graph(4, {{0, 1}, {2, 3}}), 0, 3) == 0);
}

TEST_CASE("Menger counts match separator enumeration") {
  Rng rng(7);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = rng.range(2, 12);
    const Graph g = random_graph(rng, n, rng.range(15, 80));
    const auto s = static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(n)));
    auto t = static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(n - 1)));
    if (t >= s) {
      ++t;
    }
    CAPTURE(trial);
    const PathFamily fam = vertex_disjoint_paths(g, s, t);
    check_family(g, fam);
    CHECK(static_cast<int>(fam.paths.size()) == brute_local_connectivity(g, s, t));
    CHECK(static_cast<int>(fam.paths.size()) == local_connectivity(g, s, t));
  }
}

TEST_CASE("make_induced removes chords") {
  const Graph c5 = cycle_graph(5);
  CHECK(make_induced(c5, {0, 1, 2, 3}) == Path{0, 1, 2, 3});
  CHECK(make_induced(complete_graph(3), {0, 1, 2}) == Path{0, 2});
  // Chord (0,3) is taken before (1,4): smallest start first.
  const Graph g = make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 3}, {1, 4}});
  CHECK(make_induced(g, {0, 1, 2, 3, 4, 5}) == Path{0, 3, 4, 5});

  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.range(3, 14);
    const Graph h = random_graph(rng, n, rng.range(20, 70));
    const PathFamily fam = vertex_disjoint_paths(h, 0, n - 1);
    std::set<VertexId> used;
    for (const Path& p : fam.paths) {
      const Path q = make_induced(h, p);
      CHECK(q.front() == p.front());
      CHECK(q.back() == p.back());
      CHECK(is_valid_path(h, q));
      CHECK(is_induced_path(h, q));
      for (VertexId v : q) {
        CHECK(std::find(p.begin(), p.end(), v) != p.end());
      }
      for (std::size_t i = 1; i + 1 < q.size(); ++i) {
        CHECK(used.insert(q[i]).second);
      }
    }
  }
}

TEST_CASE("path predicates") {
  const Graph g = path_graph(4);
  CHECK(is_valid_path(g, {0, 1, 2}));
  CHECK_FALSE(is_valid_path(g, {0, 2}));
  CHECK_FALSE(is_valid_path(g, {0, 1, 0}));
  CHECK(is_induced_path(g, {0, 1, 2, 3}));
  CHECK_FALSE(is_induced_path(complete_graph(3), {0, 1, 2}));
}
