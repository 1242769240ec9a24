#include "zqforce/blocks.hpp"

#include <algorithm>

#include "zqforce/errors.hpp"

namespace zq {

BlockOrder find_blocks(const Graph& g) {
  const int n = g.n();
  if (!is_connected(g)) throw ScopeError("find_blocks requires a connected graph");
  BlockOrder order;
  if (n <= 1) return order;

  std::vector<int> disc(n, -1);
  std::vector<int> low(n, -1);
  std::vector<Edge> edge_stack;
  edge_stack.reserve(g.m());

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> frames;
  int time = 0;
  const Vertex root = 0;
  disc[root] = low[root] = time++;
  frames.push_back({root, -1, 0});

  std::vector<char> in_block(n, 0);
  auto pop_block = [&](Vertex v, Vertex u) {
    Block block;
    for (;;) {
      const Edge e = edge_stack.back();
      edge_stack.pop_back();
      ++block.edge_count;
      for (Vertex x : {e.first, e.second}) {
        if (!in_block[x]) {
          in_block[x] = 1;
          block.vertices.push_back(x);
        }
      }
      if (e == Edge{v, u}) break;
    }
    for (Vertex x : block.vertices) in_block[x] = 0;
    std::sort(block.vertices.begin(), block.vertices.end());
    block.anchor = v;
    order.sequence.push_back(std::move(block));
  };

  while (!frames.empty()) {
    Frame& f = frames.back();
    const auto& nb = g.neighbors(f.v);
    if (f.next < nb.size()) {
      const Vertex u = nb[f.next++];
      if (disc[u] == -1) {
        edge_stack.emplace_back(f.v, u);
        disc[u] = low[u] = time++;
        frames.push_back({u, f.v, 0});
      } else if (u != f.parent && disc[u] < disc[f.v]) {
        edge_stack.emplace_back(f.v, u);
        low[f.v] = std::min(low[f.v], disc[u]);
      }
      continue;
    }
    const Frame done = f;
    frames.pop_back();
    if (frames.empty()) break;
    const Vertex v = frames.back().v;
    low[v] = std::min(low[v], low[done.v]);
    if (low[done.v] >= disc[v]) pop_block(v, done.v);
  }
  // The last block popped at the root has nothing left to attach to.
  order.sequence.back().anchor.reset();
  return order;
}

bool is_block_graph(const BlockOrder& order, int min_block_size) {
  return std::all_of(order.sequence.begin(), order.sequence.end(), [&](const Block& b) {
    const long long s = b.size();
    return s >= min_block_size && b.edge_count == s * (s - 1) / 2;
  });
}

bool is_block_graph(const Graph& g, int min_block_size) { return is_block_graph(find_blocks(g), min_block_size); }

bool is_cactus(const BlockOrder& order) {
  return std::all_of(order.sequence.begin(), order.sequence.end(), [](const Block& b) {
    return b.size() == 2 ? b.edge_count == 1 : b.edge_count == b.size();
  });
}

bool is_cactus(const Graph& g) { return is_cactus(find_blocks(g)); }

int count_cycle_blocks(const BlockOrder& order) {
  return static_cast<int>(
      std::count_if(order.sequence.begin(), order.sequence.end(), [](const Block& b) { return b.size() >= 3; }));
}

}  // namespace zq
