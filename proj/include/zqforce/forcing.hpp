#pragma once

#include <vector>

#include "zqforce/graph.hpp"

namespace zq {

/// source -> target, where target is the only unfilled neighbour of the filled source.
struct Force {
  Vertex source;
  Vertex target;
  friend auto operator<=>(const Force&, const Force&) = default;
};

/// Every legal Rule-2 force at `filled`, ordered by (source, target).
std::vector<Force> applicable_forces(const Graph& g, const VertexSet& filled);

/// Least fixed point of repeated forcing; independent of force order.
VertexSet forcing_closure(const Graph& g, const VertexSet& filled);

/// Same closure, also returning one valid sequence of forces that reaches it.
struct ClosureTrace {
  VertexSet filled;
  std::vector<Force> forces;
};
ClosureTrace forcing_closure_trace(const Graph& g, const VertexSet& filled);

bool is_zero_forcing_set(const Graph& g, const VertexSet& seed);

struct ZeroForcingResult {
  int value = 0;
  VertexSet witness;  // lexicographically smallest minimum zero forcing set
};

inline constexpr int kDefaultBruteForceCap = 20;

/// Exhaustive Z(G): tries subsets in order of size, lexicographically within a size.
/// Throws ResourceError when n exceeds `vertex_cap` (at most 64).
ZeroForcingResult brute_force_Z(const Graph& g, int vertex_cap = kDefaultBruteForceCap);

}  // namespace zq
