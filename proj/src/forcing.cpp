#include "zqforce/forcing.hpp"

#include <bit>
#include <cstdint>

#include "zqforce/errors.hpp"

namespace zq {

std::vector<Force> applicable_forces(const Graph& g, const VertexSet& filled) {
  std::vector<Force> out;
  for (Vertex u : filled.members()) {
    Vertex only = -1;
    int unfilled = 0;
    for (Vertex w : g.neighbors(u)) {
      if (!filled.contains(w)) {
        only = w;
        if (++unfilled > 1) break;
      }
    }
    if (unfilled == 1) out.push_back({u, only});
  }
  return out;
}

ClosureTrace forcing_closure_trace(const Graph& g, const VertexSet& filled) {
  const int n = g.n();
  ClosureTrace result{filled, {}};
  auto& done = result.filled;
  // Work queue over filled vertices whose unfilled-neighbour count may have dropped to one.
  std::vector<int> unfilled_count(n, 0);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) unfilled_count[v] += done.contains(w) ? 0 : 1;
    if (done.contains(v) && unfilled_count[v] == 1) queue.push_back(v);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    if (unfilled_count[u] != 1) continue;
    Vertex target = -1;
    for (Vertex w : g.neighbors(u)) {
      if (!done.contains(w)) {
        target = w;
        break;
      }
    }
    done.insert(target);
    result.forces.push_back({u, target});
    for (Vertex w : g.neighbors(target)) {
      if (--unfilled_count[w] == 1 && done.contains(w)) queue.push_back(w);
    }
    if (unfilled_count[target] == 1) queue.push_back(target);
  }
  return result;
}

VertexSet forcing_closure(const Graph& g, const VertexSet& filled) { return forcing_closure_trace(g, filled).filled; }

bool is_zero_forcing_set(const Graph& g, const VertexSet& seed) {
  return forcing_closure(g, seed).size() == g.n();
}

namespace {

using Mask = std::uint64_t;

Mask closure_mask(const std::vector<Mask>& adj, Mask filled) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (Mask rest = filled; rest != 0; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      const Mask open = adj[u] & ~filled;
      if (open != 0 && (open & (open - 1)) == 0) {
        filled |= open;
        changed = true;
      }
    }
  }
  return filled;
}

// Next k-subset of {0..n-1} in lexicographic order; false when exhausted.
bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[i] == n - k + i) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

}  // namespace

ZeroForcingResult brute_force_Z(const Graph& g, int vertex_cap) {
  const int n = g.n();
  if (vertex_cap > 64) throw ResourceError("brute-force cap cannot exceed 64 vertices");
  if (n > vertex_cap) {
    throw ResourceError("brute_force_Z refuses n = " + std::to_string(n) + " (cap " + std::to_string(vertex_cap) + ")");
  }
  if (n == 0) return {0, VertexSet(0)};
  const auto adj = g.adjacency_masks();
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  for (int size = 0; size <= n; ++size) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    do {
      Mask seed = 0;
      for (int v : idx) seed |= Mask{1} << v;
      if (closure_mask(adj, seed) == all) return {size, VertexSet::from_mask(n, seed)};
    } while (next_combination(idx, n));
  }
  return {n, VertexSet::full(n)};  // unreachable: V itself always forces
}

}  // namespace zq
