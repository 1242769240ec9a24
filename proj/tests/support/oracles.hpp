#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "zqforce/certificate.hpp"
#include "zqforce/graph.hpp"

namespace zq::testing {

/// Blocks by definition: two edges share a block iff no single vertex separates them.
/// Returns each block as a sorted vertex list; the list is sorted.
std::vector<std::vector<Vertex>> oracle_blocks(const Graph& g);

/// True when every edge lies on at most one simple cycle, checked by cycle enumeration.
bool oracle_is_cactus(const Graph& g);

/// Spanning tree plus each remaining pair with probability `p`.
Graph random_connected_graph(int n, double p, std::mt19937_64& rng);

/// Random labelled tree (uniform attachment).
Graph random_tree(int n, std::mt19937_64& rng);

/// One representative per isomorphism class of connected graphs on n vertices (n <= 7).
std::vector<Graph> connected_graphs_up_to_iso(int n);

/// Straightforward Z_q: memoised recursion with every announcement size, no pruning
/// shortcuts beyond discarding announcements that admit a dead reveal. n <= 12.
int reference_Zq(const Graph& g, int q, Rule3Mode mode = Rule3Mode::closure);

/// Z by closure over all subsets, independent of the library's brute force.
int reference_Z(const Graph& g);

Graph from_edges(int n, const std::vector<Edge>& edges);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph bowtie();

}  // namespace zq::testing
