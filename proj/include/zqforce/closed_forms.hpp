#pragma once

#include <vector>

namespace zq {

/// Z_q of the generalized star with the given arm lengths (k = number of arms):
/// 1 for q = 0, max(1, k-1) for q >= 1. Throws ValidationError on an empty or
/// nonpositive arm list, or q < 0.
int star_Zq(const std::vector<int>& path_lengths, int q);

/// Z_q of the Type I windmill: eta copies of K_k joined to a clique of l centre vertices.
int windmill_I_Zq(int eta, int k, int l, int q);

/// Z_q of the Type II windmill (independent centre). For eta, k, l > 1 the q = 0 value is
/// min(eta(k-1)+l, eta*k), otherwise eta(k-1)+l. eta = 1 and l = 1 reduce to Type I.
/// Throws ScopeError for k = 1 with eta, l > 1 (a complete bipartite graph).
int windmill_II_Zq(int eta, int k, int l, int q);

}  // namespace zq
