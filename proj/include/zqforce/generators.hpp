#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zqforce/graph.hpp"

namespace zq {

enum class FamilyKind {
  path,
  cycle,
  clique,
  generalized_star,
  windmill_I,
  windmill_II,
  random_block_graph,
  random_cactus,
};

std::string_view to_string(FamilyKind kind);
/// Accepts the enum spellings plus the short CLI aliases (star, windmill1, windmill2, block, cactus).
std::optional<FamilyKind> parse_family_kind(std::string_view name);
bool is_random_family(FamilyKind kind);

/// Parameters for every generated family; each kind reads only the fields it needs.
///
///   path, cycle, clique    n
///   generalized_star       path_lengths (one entry per arm)
///   windmill_I/II          eta copies of K_k joined to an l-vertex centre
///   random_block_graph     n, and either blocks (exact count) or max_block (clique size cap)
///   random_cactus          n, max_block (cycle length cap), bridge_percent
struct FamilyParams {
  int eta = 0;
  int k = 0;
  int l = 0;
  std::vector<int> path_lengths;
  int n = 0;
  int blocks = 0;
  int max_block = 6;
  int bridge_percent = 30;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// Deterministic for a given (kind, params, seed). Throws ValidationError on bad parameters.
///
/// Windmill layout: centre vertices 0..l-1, then copy c occupies l + c*k .. l + c*k + k-1.
/// Generalized star: centre 0, arms laid out consecutively, each arm starting next to the centre.
Graph generate_family(FamilyKind kind, const FamilyParams& params, std::uint64_t seed = 0);

}  // namespace zq
