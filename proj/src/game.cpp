#include "zqforce/game.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "zqforce/errors.hpp"

namespace zq {

namespace {

bool single_bit(Mask m) { return m != 0 && (m & (m - 1)) == 0; }

Mask bit(int v) { return Mask{1} << v; }

Mask full_mask_for(int n) { return n == 64 ? ~Mask{0} : bit(n) - 1; }

/// Mask-level view of one graph shared by the solver and the trace extractor.
struct MaskGraph {
  int n = 0;
  Mask full = 0;
  std::vector<Mask> adj;

  explicit MaskGraph(const Graph& g) : n(g.n()), full(full_mask_for(g.n())), adj(g.adjacency_masks()) {}

  /// Components of the unfilled vertices, ordered by smallest member.
  std::vector<Mask> components(Mask filled) const {
    std::vector<Mask> comps;
    Mask rest = full & ~filled;
    while (rest != 0) {
      Mask comp = rest & (~rest + 1);
      Mask frontier = comp;
      while (frontier != 0) {
        Mask grow = 0;
        for (Mask f = frontier; f != 0; f &= f - 1) grow |= adj[std::countr_zero(f)];
        grow &= rest & ~comp;
        comp |= grow;
        frontier = grow;
      }
      rest &= ~comp;
      comps.push_back(comp);
    }
    return comps;
  }

  /// Some filled vertex has exactly one neighbour inside `region` (all of it unfilled).
  bool has_force_into(Mask filled, Mask region) const {
    for (Mask f = filled; f != 0; f &= f - 1) {
      if (single_bit(adj[std::countr_zero(f)] & region)) return true;
    }
    return false;
  }

  /// Forcing closure inside G[filled ∪ revealed]; optionally logs the forces.
  Mask reveal_closure(Mask filled, Mask revealed, std::vector<std::pair<int, int>>* log = nullptr) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Mask f = filled; f != 0; f &= f - 1) {
        const int u = std::countr_zero(f);
        const Mask open = adj[u] & revealed & ~filled;
        if (single_bit(open)) {
          filled |= open;
          changed = true;
          if (log) log->emplace_back(u, std::countr_zero(open));
        }
      }
    }
    return filled;
  }

  /// Single forces inside G[filled ∪ revealed], ordered by (source, target), one per target.
  std::vector<std::pair<int, int>> reveal_forces(Mask filled, Mask revealed) const {
    std::vector<std::pair<int, int>> out;
    Mask seen = 0;
    for (Mask f = filled; f != 0; f &= f - 1) {
      const int u = std::countr_zero(f);
      const Mask open = adj[u] & revealed & ~filled;
      if (single_bit(open) && !(seen & open)) {
        seen |= open;
        out.emplace_back(u, std::countr_zero(open));
      }
    }
    return out;
  }
};

std::vector<Vertex> mask_members(Mask m) {
  std::vector<Vertex> out;
  for (; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

VertexSet to_set(int n, Mask m) { return VertexSet::from_mask(n, m); }

void require_mask_graph(const Graph& g) {
  if (g.n() > 64) throw ValidationError("game operations need n <= 64");
}

// Advances the k-subset `idx` of {0..n-1} lexicographically.
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

// ------------------------------------------------------------ announcements

std::vector<std::vector<VertexSet>> legal_announcements(const Graph& g, const VertexSet& filled, int q,
                                                        bool prune_dead_reveals) {
  require_mask_graph(g);
  const MaskGraph mg(g);
  const Mask f = filled.to_mask();
  const auto comps = mg.components(f);
  const int k = static_cast<int>(comps.size());
  std::vector<std::vector<VertexSet>> out;
  if (q < 0 || k <= q || k >= 31) {
    if (k >= 31) throw ResourceError("too many components to enumerate announcements");
    return out;
  }
  // An announcement survives iff every nonempty union of its components admits a force.
  std::vector<char> forceable(std::size_t{1} << k, 0);
  for (std::uint32_t s = 1; s < (1U << k); ++s) {
    Mask region = 0;
    for (int i = 0; i < k; ++i)
      if (s >> i & 1U) region |= comps[i];
    forceable[s] = mg.has_force_into(f, region);
  }
  std::vector<std::uint32_t> sets;
  for (std::uint32_t s = 1; s < (1U << k); ++s) {
    if (std::popcount(s) < q + 1) continue;
    bool ok = true;
    for (std::uint32_t sub = s; prune_dead_reveals && sub != 0 && ok; sub = (sub - 1) & s) ok = forceable[sub];
    if (ok) sets.push_back(s);
  }
  // Smaller announcements first, lexicographic on component indices within a size.
  std::sort(sets.begin(), sets.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
    for (int i = 0; i < k; ++i) {
      const bool ia = a >> i & 1U;
      const bool ib = b >> i & 1U;
      if (ia != ib) return ia;
    }
    return false;
  });
  for (auto s : sets) {
    std::vector<VertexSet> ann;
    for (int i = 0; i < k; ++i)
      if (s >> i & 1U) ann.push_back(to_set(g.n(), comps[i]));
    out.push_back(std::move(ann));
  }
  return out;
}

std::vector<RevealOutcome> reveal_outcomes(const Graph& g, const VertexSet& filled,
                                           const std::vector<VertexSet>& announcement, Rule3Mode mode) {
  require_mask_graph(g);
  const MaskGraph mg(g);
  const Mask f = filled.to_mask();
  const int a = static_cast<int>(announcement.size());
  if (a >= 31) throw ResourceError("announcement too large to enumerate reveals");
  std::vector<RevealOutcome> out;
  for (std::uint32_t s = 1; s < (1U << a); ++s) {
    RevealOutcome outcome;
    Mask region = 0;
    for (int i = 0; i < a; ++i) {
      if (s >> i & 1U) {
        outcome.revealed.push_back(announcement[i]);
        region |= announcement[i].to_mask();
      }
    }
    region &= ~f;
    if (mode == Rule3Mode::closure) {
      const Mask next = mg.reveal_closure(f, region);
      if (next != f) outcome.successors.push_back(to_set(g.n(), next));
    } else {
      for (auto [u, t] : mg.reveal_forces(f, region)) outcome.successors.push_back(to_set(g.n(), f | bit(t)));
    }
    out.push_back(std::move(outcome));
  }
  return out;
}

// ------------------------------------------------------------------ solving

std::optional<Mask> GameSolution::oracle_response(Mask filled, Mask announcement) const {
  if (filled < moves_.size() && filled != full_) {
    const auto& mv = moves_[filled];
    if (mv.kind == MoveKind::announce && mv.announcement == announcement) return mv.reveal;
  }
  if (auto it = responses_.find({filled, announcement}); it != responses_.end()) return it->second;
  return std::nullopt;
}

std::vector<std::tuple<Mask, Mask, Mask>> GameSolution::recorded_responses() const {
  std::vector<std::tuple<Mask, Mask, Mask>> out;
  for (Mask f = 0; f < moves_.size(); ++f) {
    if (f != full_ && moves_[f].kind == MoveKind::announce) out.emplace_back(f, moves_[f].announcement, moves_[f].reveal);
  }
  for (const auto& [key, reveal] : responses_) {
    const auto& mv = moves_[key.first];
    if (!(mv.kind == MoveKind::announce && mv.announcement == key.second)) out.emplace_back(key.first, key.second, reveal);
  }
  std::sort(out.begin(), out.end());
  return out;
}

GameSolution solve_zq(const Graph& g, const GameConfig& cfg) {
  const int n = g.n();
  if (cfg.vertex_cap > 64) throw ValidationError("vertex_cap cannot exceed 64");
  if (cfg.q < 0) throw ValidationError("q must be nonnegative");
  if (n > cfg.vertex_cap) {
    throw ResourceError("exact solver refuses n = " + std::to_string(n) + " (vertex cap " +
                        std::to_string(cfg.vertex_cap) + ")");
  }
  if (n >= 63 || (std::uint64_t{1} << n) > cfg.memo_limit) {
    throw ResourceError("exact solver needs 2^" + std::to_string(n) + " states, above memo limit " +
                        std::to_string(cfg.memo_limit));
  }
  if (!is_connected(g)) throw ScopeError("solve_zq requires a connected graph");

  const MaskGraph mg(g);
  GameSolution sol;
  sol.n_ = n;
  sol.full_ = mg.full;
  sol.config_ = cfg;
  const std::size_t states = std::size_t{1} << n;
  sol.values_.assign(states, 0);
  sol.moves_.assign(states, PlayerMove{});
  auto& value = sol.values_;

  constexpr int kInf = std::numeric_limits<int>::max();
  const long long need = static_cast<long long>(cfg.q) + 1;  // components per announcement
  std::vector<int> idx;

  // Descending mask order: every successor of F is a strict superset of F.
  for (Mask f = mg.full; f-- > 0;) {
    const Mask unfilled = mg.full & ~f;
    int best = kInf;
    PlayerMove move;

    // Rule 2.
    for (Mask rest = f; rest != 0; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      const Mask open = mg.adj[u] & unfilled;
      if (single_bit(open) && value[f | open] < best) {
        best = value[f | open];
        move = {MoveKind::force, u, std::countr_zero(open), 0, 0};
      }
    }

    // Rule 3, over announcements of exactly q+1 forceable components.
    if (best > 0 && f != 0) {
      const auto comps = mg.components(f);
      if (static_cast<long long>(comps.size()) > cfg.q) {
        std::vector<Mask> candidates;  // components that a lone reveal can make progress in
        for (Mask c : comps)
          if (mg.has_force_into(f, c)) candidates.push_back(c);
        const int count = static_cast<int>(candidates.size());
        if (need <= count) {
          const int size = static_cast<int>(need);
          idx.resize(size);
          for (int i = 0; i < size; ++i) idx[i] = i;
          const std::uint32_t all_sub = (size >= 32) ? ~0U : (1U << size) - 1;
          do {
            Mask ann = 0;
            for (int i : idx) ann |= candidates[i];
            int worst = -1;
            Mask worst_reveal = 0;
            bool pruned = false;
            // Largest reveal first.
            for (std::uint32_t s = all_sub; s != 0 && !pruned; --s) {
              Mask region = 0;
              for (int i = 0; i < size; ++i)
                if (s >> i & 1U) region |= candidates[idx[i]];
              int outcome = kInf;
              if (cfg.rule3_mode == Rule3Mode::closure) {
                const Mask next = mg.reveal_closure(f, region);
                if (next != f) outcome = value[next];
              } else {
                for (Mask rest = f; rest != 0; rest &= rest - 1) {
                  const Mask open = mg.adj[std::countr_zero(rest)] & region;
                  if (single_bit(open)) outcome = std::min<int>(outcome, value[f | open]);
                }
              }
              if (outcome == kInf) {
                pruned = true;
              } else if (outcome > worst) {
                worst = outcome;
                worst_reveal = region;
              }
            }
            if (pruned) continue;
            if (cfg.record_all_responses) sol.responses_[{f, ann}] = worst_reveal;
            if (worst < best) {
              best = worst;
              move = {MoveKind::announce, -1, -1, ann, worst_reveal};
            }
          } while (best > 0 && next_combination(idx, count));
        }
      }
    }

    // Rule 1.
    if (best > 1) {
      for (Mask rest = unfilled; rest != 0; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        if (1 + value[f | bit(v)] < best) {
          best = 1 + value[f | bit(v)];
          move = {MoveKind::token, -1, v, 0, 0};
        }
      }
    }
    value[f] = static_cast<std::uint8_t>(best);
    sol.moves_[f] = move;
  }
  return sol;
}

// ------------------------------------------------------------- trace replay

Certificate extract_player_trace(const Graph& g, const GameSolution& sol, const OraclePolicy& oracle) {
  if (g.n() != sol.n()) throw ValidationError("solution was computed for a different graph");
  const MaskGraph mg(g);
  const int n = g.n();
  const Rule3Mode mode = sol.config().rule3_mode;
  Certificate cert;
  Mask f = 0;
  while (f != mg.full) {
    const PlayerMove& mv = sol.best_move(f);
    switch (mv.kind) {
      case MoveKind::token:
        cert.trace.emplace_back(TokenStep{mv.vertex});
        f |= bit(mv.vertex);
        break;
      case MoveKind::force:
        cert.trace.emplace_back(ForceStep{mv.source, mv.vertex});
        f |= bit(mv.vertex);
        break;
      case MoveKind::announce: {
        std::vector<Mask> announced;
        for (Mask c : mg.components(f))
          if ((c & mv.announcement) == c) announced.push_back(c);
        AnnounceStep ann;
        for (Mask c : announced) ann.components.push_back(mask_members(c));
        cert.trace.emplace_back(std::move(ann));

        Mask region = 0;
        if (!oracle) {
          region = mv.reveal;
        } else {
          std::vector<VertexSet> sets;
          for (Mask c : announced) sets.push_back(to_set(n, c));
          auto picked = oracle(g, to_set(n, f), sets);
          const std::string where = "oracle reveal at trace step " + std::to_string(cert.trace.size());
          if (picked.empty()) throw ValidationError(where + ": empty reveal");
          std::sort(picked.begin(), picked.end());
          if (std::adjacent_find(picked.begin(), picked.end()) != picked.end()) {
            throw ValidationError(where + ": component revealed twice");
          }
          for (int i : picked) {
            if (i < 0 || i >= static_cast<int>(announced.size())) {
              throw ValidationError(where + ": index " + std::to_string(i) + " is not an announced component");
            }
            region |= announced[i];
          }
        }
        RevealStep rev;
        for (Mask c : announced)
          if ((c & region) == c) rev.components.push_back(mask_members(c));
        cert.trace.emplace_back(std::move(rev));

        if (mode == Rule3Mode::closure) {
          std::vector<std::pair<int, int>> log;
          f = mg.reveal_closure(f, region, &log);
          for (auto [u, t] : log) cert.trace.emplace_back(ForceStep{u, t});
        } else {
          const auto forces = mg.reveal_forces(f, region);
          if (forces.empty()) throw std::logic_error("announcement admits a reveal without forces");
          auto pick = forces.front();
          for (auto fc : forces)
            if (sol.value_at(f | bit(fc.second)) < sol.value_at(f | bit(pick.second))) pick = fc;
          cert.trace.emplace_back(ForceStep{pick.first, pick.second});
          f |= bit(pick.second);
        }
        break;
      }
    }
  }
  cert.sync_tokens();
  return cert;
}

}  // namespace zq
