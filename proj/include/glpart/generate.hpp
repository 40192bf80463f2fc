#pragma once

#include <cstdint>
#include <random>

#include "glpart/cds_structured.hpp"
#include "glpart/graph.hpp"
#include "glpart/partition.hpp"

namespace glpart {

/// Seeded source for every generator: std::mt19937_64, whose output stream
/// is fixed by the C++ standard. Bounded draws use rejection sampling on the
/// raw 64-bit words instead of the (implementation-defined) std
/// distributions, so a seed yields the same files on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  int range(int lo, int hi);

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[static_cast<std::size_t>(below(i))]);
    }
  }

private:
  std::mt19937_64 eng_;
};

inline constexpr int kDefaultRetries = 200;

/// Resampling bounds: with `exact`, accept only kappa == target_k, otherwise
/// kappa >= target_k.
struct GenOptions {
  bool exact = false;
  int retries = kDefaultRetries;
};

/// Random integer intervals; resampled until the graph is connected with
/// the requested connectivity. Requires n >= target_k + 1.
/// Throws Error("invalid-parameters") / Error("generation-failed").
IntervalModel gen_interval(int n, int target_k, std::uint64_t seed, GenOptions opt = {});

/// Staircase windows: b_j sees a_i for f(j) <= i <= g(j) with f and g
/// nondecreasing, which keeps both sides' neighbourhoods consecutive.
BiconvexModel gen_biconvex(int na, int nb, int target_k, std::uint64_t seed, GenOptions opt = {});

/// Independent random A-interval per b_j.
ConvexModel gen_convex(int na, int nb, int target_k, std::uint64_t seed, GenOptions opt = {});

struct PlantedCds {
  Graph graph;
  CdsInput trees;
};

/// k disjoint path backbones over a random vertex subset; every vertex gets
/// an edge to a random member of each backbone it is not on, then
/// `extra_edges` random edges are added. Requires n >= 2k.
PlantedCds gen_planted_cds(int n, int k, int extra_edges, std::uint64_t seed);

/// k distinct uniform terminals (drawn from `pool` when given) and a uniform
/// random composition of n into k positive demands. Requires n >= k.
GlInstance gen_gl_extension(const Graph& g, int k, std::uint64_t seed, const VertexSet* pool = nullptr);

} // namespace glpart
