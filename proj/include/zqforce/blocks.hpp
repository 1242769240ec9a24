#pragma once

#include <optional>
#include <vector>

#include "zqforce/graph.hpp"

namespace zq {

/// A biconnected block (maximal 2-connected subgraph or a bridge).
struct Block {
  std::vector<Vertex> vertices;  // sorted
  int edge_count = 0;
  /// The single vertex this block shares with the part of the graph not yet
  /// eliminated; absent for the last block.
  std::optional<Vertex> anchor;

  int size() const noexcept { return static_cast<int>(vertices.size()); }
};

/// Leaf-to-root elimination order: removing blocks front to back (keeping anchors),
/// every block shares only its anchor with what remains.
struct BlockOrder {
  std::vector<Block> sequence;
};

/// DFS biconnected-component extraction in O(n + m). Blocks come out in the order
/// they are popped off the edge stack, each anchored at the vertex where it was popped.
/// Throws ScopeError when g is disconnected. A graph with one vertex has no blocks.
BlockOrder find_blocks(const Graph& g);

/// True iff every block induces a clique with at least `min_block_size` vertices.
bool is_block_graph(const Graph& g, int min_block_size = 3);
bool is_block_graph(const BlockOrder& order, int min_block_size = 3);

/// True iff every block is a bridge or an induced cycle.
bool is_cactus(const Graph& g);
bool is_cactus(const BlockOrder& order);

/// Number of blocks with at least three vertices (the cycles of a cactus).
int count_cycle_blocks(const BlockOrder& order);

}  // namespace zq
