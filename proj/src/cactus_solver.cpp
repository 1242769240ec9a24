#include "zqforce/cactus_solver.hpp"

#include <algorithm>
#include <limits>

#include "zqforce/blocks.hpp"
#include "zqforce/errors.hpp"

namespace zq {

namespace {

using Cost = std::int64_t;
constexpr Cost kInf = std::numeric_limits<Cost>::max() / 4;

Cost add(Cost a, Cost b) { return (a >= kInf || b >= kInf) ? kInf : a + b; }

Cost exported(Cost c) { return c >= kInf ? kCactusUndefined : c; }

// One rooted pass: a DFS that pops blocks off the edge stack and folds each one
// into the dp of the vertex it hangs from.
class RootedPass {
 public:
  explicit RootedPass(const Graph& g)
      : g_(g), disc_(g.n()), low_(g.n()), dp0_(g.n()), dp1_(g.n()), acc_(g.n()), min_extra_(g.n()) {}

  Cost run(Vertex root, CactusTables* tables) {
    const int n = g_.n();
    std::fill(disc_.begin(), disc_.end(), -1);
    std::fill(acc_.begin(), acc_.end(), 0);
    std::fill(min_extra_.begin(), min_extra_.end(), kInf);
    edges_.clear();
    tables_ = tables;

    struct Frame {
      Vertex v;
      Vertex parent;
      std::size_t next;
    };
    std::vector<Frame> frames;
    int time = 0;
    disc_[root] = low_[root] = time++;
    frames.push_back({root, -1, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto& nb = g_.neighbors(f.v);
      if (f.next < nb.size()) {
        const Vertex u = nb[f.next++];
        if (disc_[u] == -1) {
          edges_.emplace_back(f.v, u);
          disc_[u] = low_[u] = time++;
          frames.push_back({u, f.v, 0});
        } else if (u != f.parent && disc_[u] < disc_[f.v]) {
          edges_.emplace_back(f.v, u);
          low_[f.v] = std::min(low_[f.v], disc_[u]);
        }
        continue;
      }
      const Vertex done = f.v;
      finish(done);
      frames.pop_back();
      if (frames.empty()) break;
      const Vertex v = frames.back().v;
      low_[v] = std::min(low_[v], low_[done]);
      if (low_[done] >= disc_[v]) fold_block(v, done);
    }
    if (tables) {
      tables->root = root;
      tables->dp.resize(n);
      for (Vertex v = 0; v < n; ++v) tables->dp[v] = {exported(dp0_[v]), exported(dp1_[v])};
      tables->value = exported(dp0_[root]);
    }
    return dp0_[root];
  }

 private:
  // All blocks below v have been folded in.
  void finish(Vertex v) {
    dp1_[v] = acc_[v];
    dp0_[v] = add(acc_[v], min_extra_[v]);
  }

  void fold_block(Vertex top, Vertex child) {
    members_.clear();
    for (;;) {
      const Edge e = edges_.back();
      edges_.pop_back();
      for (Vertex x : {e.first, e.second})
        if (x != top) members_.push_back(x);
      if (e == Edge{top, child}) break;
    }
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());

    // sum of dp[x][1], and the two smallest extra costs dp[x][0] - dp[x][1] of letting
    // member x fill itself from its own subtree.
    Cost sum = 0;
    Cost min1 = kInf;
    Cost min2 = kInf;
    for (Vertex x : members_) {
      sum = add(sum, dp1_[x]);
      const Cost extra = dp0_[x] >= kInf ? kInf : dp0_[x] - dp1_[x];
      if (extra < min1) {
        min2 = min1;
        min1 = extra;
      } else if (extra < min2) {
        min2 = extra;
      }
    }

    std::array<std::array<Cost, 3>, 2> val;
    for (auto& row : val) row.fill(kInf);
    if (members_.size() == 1) {
      // Bridge: one fill of either endpoint settles the edge.
      val[0][0] = add(1, sum);
      val[0][1] = add(sum, min1);
      val[1][0] = sum;
    } else {
      // Cycle: any two filled vertices settle the whole cycle.
      val[0][0] = add(2, sum);
      val[0][1] = add(add(1, sum), min1);
      val[0][2] = add(add(sum, min1), min2);
      val[1][0] = add(1, sum);
      val[1][1] = add(sum, min1);
    }

    const Cost with_top = std::min(val[1][0], val[1][1]);
    acc_[top] = add(acc_[top], with_top);
    // If nothing above fills `top`, exactly one hanging block has to fill it.
    const Cost own = std::min({val[0][0], val[0][1], val[0][2]});
    if (own < kInf) min_extra_[top] = std::min(min_extra_[top], own - with_top);

    if (tables_) {
      CactusBlockEntry entry;
      entry.top = top;
      entry.members = members_;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) entry.val[i][j] = exported(val[i][j]);
      tables_->blocks.push_back(std::move(entry));
    }
  }

  const Graph& g_;
  std::vector<int> disc_;
  std::vector<int> low_;
  std::vector<Cost> dp0_;
  std::vector<Cost> dp1_;
  std::vector<Cost> acc_;
  std::vector<Cost> min_extra_;
  std::vector<Edge> edges_;
  std::vector<Vertex> members_;
  CactusTables* tables_ = nullptr;
};

}  // namespace

CactusResult cactus_Z0_tables(const Graph& g, bool keep_tables) {
  if (!is_connected(g)) throw ScopeError("cactus_Z0 requires a connected graph");
  if (!is_cactus(g)) throw ScopeError("cactus_Z0 requires a cactus graph (some edge lies on two cycles)");
  CactusResult result;
  const int n = g.n();
  if (n == 0) return result;
  if (n == 1) {
    result.value = 1;
    result.best_root = 0;
    return result;
  }
  RootedPass pass(g);
  Cost best = kInf;
  for (Vertex r = 0; r < n; ++r) {
    CactusTables* tables = nullptr;
    if (keep_tables) tables = &result.roots.emplace_back();
    const Cost value = pass.run(r, tables);
    if (value < best) {
      best = value;
      result.best_root = r;
    }
  }
  result.value = static_cast<int>(best);
  return result;
}

}  // namespace zq
