#include "zqforce/closed_forms.hpp"

#include <algorithm>

#include "zqforce/errors.hpp"

namespace zq {

namespace {

void require_windmill(int eta, int k, int l, int q) {
  if (eta < 1 || k < 1 || l < 1) throw ValidationError("windmill parameters eta, k, l must be at least 1");
  if (q < 0) throw ValidationError("q must be nonnegative");
}

}  // namespace

int star_Zq(const std::vector<int>& path_lengths, int q) {
  if (path_lengths.empty()) throw ValidationError("generalized star needs at least one arm");
  for (int len : path_lengths)
    if (len < 1) throw ValidationError("arm lengths must be at least 1");
  if (q < 0) throw ValidationError("q must be nonnegative");
  if (q == 0) return 1;
  const int arms = static_cast<int>(path_lengths.size());
  return std::max(1, arms - 1);
}

int windmill_I_Zq(int eta, int k, int l, int q) {
  require_windmill(eta, k, l, q);
  if (k > 1) return eta * (k - 1) + l;
  if (eta == 1) return l;
  return q > 0 ? l + eta - 2 : l;
}

int windmill_II_Zq(int eta, int k, int l, int q) {
  require_windmill(eta, k, l, q);
  if (eta == 1) return windmill_I_Zq(l, 1, k, q);
  if (l == 1) return windmill_I_Zq(eta, k, 1, q);
  if (k == 1) throw ScopeError("windmill_II with k = 1 and eta, l > 1 is a complete bipartite graph; no closed form here");
  if (q == 0) return std::min(eta * (k - 1) + l, eta * k);
  return eta * (k - 1) + l;
}

}  // namespace zq
