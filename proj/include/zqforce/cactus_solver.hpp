#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "zqforce/graph.hpp"

namespace zq {

/// Marks an undefined or infeasible table entry.
inline constexpr std::int64_t kCactusUndefined = -1;

/// Token counts for one block hanging below its top vertex `top`.
/// val[i][j]: the top vertex gets i free fills from above, the block's other members
/// supply j free fills from their own subtrees. Bridges only define j <= 1.
struct CactusBlockEntry {
  Vertex top = -1;
  std::vector<Vertex> members;  // without `top`
  std::array<std::array<std::int64_t, 3>, 2> val{};
};

/// Tables from one rooting.
struct CactusTables {
  Vertex root = -1;
  std::int64_t value = 0;  // dp[root][0]
  std::vector<CactusBlockEntry> blocks;
  /// dp[v][0]: subtree of v when v is not filled from above (v may then fill upward);
  /// dp[v][1]: subtree of v when v is filled from above. kCactusUndefined when infeasible.
  std::vector<std::array<std::int64_t, 2>> dp;
};

struct CactusResult {
  int value = 0;
  Vertex best_root = -1;
  std::vector<CactusTables> roots;  // filled only when requested
};

/// Z_0(G) of a connected cactus: the block dynamic program run from every root,
/// minimum over roots. O(n^2) overall. Throws ScopeError for non-cactus input.
CactusResult cactus_Z0_tables(const Graph& g, bool keep_tables = false);

inline int cactus_Z0(const Graph& g) { return cactus_Z0_tables(g).value; }

}  // namespace zq
