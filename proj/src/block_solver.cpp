#include "zqforce/block_solver.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "zqforce/errors.hpp"
#include "zqforce/forcing.hpp"

namespace zq {

namespace {

std::string describe(const Block& b) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < b.vertices.size(); ++i) out << (i ? "," : "") << b.vertices[i];
  out << "}";
  return out.str();
}

void require_block_graph(const Graph& g, const BlockOrder& order) {
  for (const auto& b : order.sequence) {
    const long long s = b.size();
    if (s < 3) throw ScopeError("not a block graph with blocks >= 3: block " + describe(b) + " is a bridge");
    if (b.edge_count != s * (s - 1) / 2) throw ScopeError("not a block graph: block " + describe(b) + " is not a clique");
  }
  (void)g;
}

// Marks, pending forces and spent tokens while blocks are eliminated.
struct BlockRunState {
  std::vector<char> filled;
  std::vector<Vertex> tokens;

  explicit BlockRunState(int n) : filled(n, 0) {}

  void buy(Vertex v, BlockStep& step) {
    filled[v] = 1;
    tokens.push_back(v);
    step.tokens.push_back(v);
  }
};

}  // namespace

BlockGraphResult block_graph_Z(const Graph& g) {
  if (!is_connected(g)) throw ScopeError("block_graph_Z requires a connected graph");
  const BlockOrder order = find_blocks(g);
  require_block_graph(g, order);

  BlockGraphResult result;
  BlockRunState state(g.n());
  for (const Block& block : order.sequence) {
    BlockStep step;
    step.vertices = block.vertices;
    step.anchor = block.anchor;
    const int size = block.size();
    int filled = 0;
    for (Vertex x : block.vertices) filled += state.filled[x];
    step.filled_before = filled;

    if (!block.anchor) {
      // Buy all but one vertex; the last one is forced by any filled neighbour.
      for (Vertex x : block.vertices) {
        if (filled >= size - 1) break;
        if (!state.filled[x]) {
          state.buy(x, step);
          ++filled;
        }
      }
      for (Vertex x : block.vertices) state.filled[x] = 1;
      step.outcome = BlockStep::Outcome::final;
    } else if (filled >= size - 1) {
      for (Vertex x : block.vertices) state.filled[x] = 1;
      step.outcome = BlockStep::Outcome::completed;
    } else {
      const Vertex anchor = *block.anchor;
      int inner = filled - state.filled[anchor];
      for (Vertex x : block.vertices) {
        if (inner >= size - 2) break;
        if (x != anchor && !state.filled[x]) {
          state.buy(x, step);
          ++inner;
        }
      }
      if (state.filled[anchor]) {
        for (Vertex x : block.vertices) state.filled[x] = 1;
        step.outcome = BlockStep::Outcome::completed;
      } else {
        step.outcome = BlockStep::Outcome::pending;
        for (Vertex x : block.vertices)
          if (x != anchor && !state.filled[x]) step.deferred = x;
      }
    }
    result.log.push_back(std::move(step));
  }
  if (g.n() == 1) {
    BlockStep lone;
    lone.vertices = {0};
    lone.outcome = BlockStep::Outcome::final;
    state.buy(0, lone);
    result.log.push_back(std::move(lone));
  }

  std::sort(state.tokens.begin(), state.tokens.end());
  const auto closure = forcing_closure_trace(g, VertexSet(g.n(), state.tokens));
  if (closure.filled.size() != g.n()) throw std::logic_error("block solver token set does not force the graph");
  result.value = static_cast<int>(state.tokens.size());
  for (Vertex v : state.tokens) result.certificate.trace.emplace_back(TokenStep{v});
  for (const auto& f : closure.forces) result.certificate.trace.emplace_back(ForceStep{f.source, f.target});
  result.certificate.tokens = std::move(state.tokens);
  return result;
}

int block_graph_Zq(const Graph& g, int q) {
  if (q < 0) throw ValidationError("q must be nonnegative");
  return block_graph_Z(g).value;
}

std::string audit_block_tokens(const BlockGraphResult& result) {
  const auto& tokens = result.certificate.tokens;
  auto has_token = [&](Vertex v) { return std::binary_search(tokens.begin(), tokens.end(), v); };
  for (const auto& step : result.log) {
    const int size = static_cast<int>(step.vertices.size());
    if (size < 3) continue;  // the lone-vertex graph
    const int carried = static_cast<int>(std::count_if(step.vertices.begin(), step.vertices.end(), has_token));
    std::ostringstream where;
    where << "block of size " << size << " at";
    for (Vertex v : step.vertices) where << ' ' << v;
    if (carried < size - 2 || carried > size - 1) {
      return where.str() + " carries " + std::to_string(carried) + " tokens";
    }
    if (step.anchor && carried == size - 2 && has_token(*step.anchor)) {
      return where.str() + " carries size-2 tokens including its anchor " + std::to_string(*step.anchor);
    }
  }
  return {};
}

}  // namespace zq
