#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "zqforce/certificate.hpp"
#include "zqforce/graph.hpp"

namespace zq {

/// Filled set of a game state, bit v = vertex v.
using Mask = std::uint64_t;

struct GameConfig {
  int q = 0;
  Rule3Mode rule3_mode = Rule3Mode::closure;
  int vertex_cap = 16;                           // at most 64
  std::uint64_t memo_limit = std::uint64_t{1} << 26;  // state-table entries
  /// Keep the oracle's best reveal for every evaluated announcement, not only
  /// the one the player ends up choosing. Costs memory; meant for audits.
  bool record_all_responses = false;
};

/// Declaration order is the tie-break order between equally good moves.
enum class MoveKind : std::uint8_t { force, announce, token };

struct PlayerMove {
  MoveKind kind = MoveKind::token;
  Vertex source = -1;    // force only
  Vertex vertex = -1;    // token vertex or force target
  Mask announcement = 0; // union of the announced components
  Mask reveal = 0;       // the oracle's best answer to `announcement`
};

/// Exact minimax values of the Z_q game for every filled set, plus optimal play.
class GameSolution {
 public:
  int n() const noexcept { return n_; }
  const GameConfig& config() const noexcept { return config_; }
  /// Z_q of the graph: the value of the empty state.
  int value() const { return value_at(0); }
  int value_at(Mask filled) const { return values_.at(filled); }
  /// Optimal player move at a non-full state.
  const PlayerMove& best_move(Mask filled) const { return moves_.at(filled); }
  /// The oracle's maximizing reveal for an announcement at `filled`, when recorded.
  std::optional<Mask> oracle_response(Mask filled, Mask announcement) const;
  /// Every recorded (state, announcement) -> reveal entry.
  std::vector<std::tuple<Mask, Mask, Mask>> recorded_responses() const;
  std::uint64_t states_explored() const noexcept { return values_.size(); }
  Mask full_mask() const noexcept { return full_; }

 private:
  friend GameSolution solve_zq(const Graph&, const GameConfig&);

  struct PairHash {
    std::size_t operator()(const std::pair<Mask, Mask>& p) const noexcept {
      return std::hash<Mask>{}(p.first * 0x9E3779B97F4A7C15ULL ^ p.second);
    }
  };

  int n_ = 0;
  Mask full_ = 0;
  GameConfig config_;
  std::vector<std::uint8_t> values_;
  std::vector<PlayerMove> moves_;
  std::unordered_map<std::pair<Mask, Mask>, Mask, PairHash> responses_;
};

/// Rule 3 announcements at `filled`: all sets of at least q+1 unfilled components,
/// requiring more than q components overall, minus those where some nonempty reveal
/// admits no force (the oracle would pick it and nothing would change).
/// Components within an announcement are ordered by smallest member; smaller
/// announcements come first. `prune_dead_reveals = false` keeps the dead ones. Needs n <= 64.
std::vector<std::vector<VertexSet>> legal_announcements(const Graph& g, const VertexSet& filled, int q,
                                                        bool prune_dead_reveals = true);

struct RevealOutcome {
  std::vector<VertexSet> revealed;   // nonempty subset of the announcement
  std::vector<VertexSet> successors; // distinct filled sets reachable by forcing inside the reveal
};

/// For every nonempty subset of `announcement`, the filled sets the player can reach by
/// forcing inside G[filled ∪ revealed]: the closure in closure mode, one successor per
/// distinct target in single_force mode. Subsets are enumerated by their index bitmask.
std::vector<RevealOutcome> reveal_outcomes(const Graph& g, const VertexSet& filled,
                                           const std::vector<VertexSet>& announcement, Rule3Mode mode);

/// Exact Z_q by backward induction over all 2^n filled sets.
///
/// Throws ScopeError for disconnected graphs and ResourceError when n exceeds
/// vertex_cap or 2^n exceeds memo_limit.
GameSolution solve_zq(const Graph& g, const GameConfig& cfg = {});

/// An oracle picks a nonempty subset of the announced components, returned as indices.
using OraclePolicy =
    std::function<std::vector<int>(const Graph& g, const VertexSet& filled, const std::vector<VertexSet>& announced)>;

/// Plays the stored optimal strategy against `oracle` (the solution's own optimal
/// oracle when empty). Against the optimal oracle exactly value() tokens are spent;
/// against any legal oracle at most that many. Throws ValidationError naming the
/// step when the oracle answers illegally.
Certificate extract_player_trace(const Graph& g, const GameSolution& sol, const OraclePolicy& oracle = {});

}  // namespace zq
