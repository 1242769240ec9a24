#include "zqforce/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "zqforce/errors.hpp"

namespace zq {

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::path: return "path";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::clique: return "clique";
    case FamilyKind::generalized_star: return "generalized_star";
    case FamilyKind::windmill_I: return "windmill_I";
    case FamilyKind::windmill_II: return "windmill_II";
    case FamilyKind::random_block_graph: return "random_block_graph";
    case FamilyKind::random_cactus: return "random_cactus";
  }
  return "?";
}

std::optional<FamilyKind> parse_family_kind(std::string_view name) {
  struct Alias {
    std::string_view name;
    FamilyKind kind;
  };
  static constexpr Alias aliases[] = {
      {"path", FamilyKind::path},
      {"cycle", FamilyKind::cycle},
      {"clique", FamilyKind::clique},
      {"complete", FamilyKind::clique},
      {"generalized_star", FamilyKind::generalized_star},
      {"star", FamilyKind::generalized_star},
      {"windmill_I", FamilyKind::windmill_I},
      {"windmill1", FamilyKind::windmill_I},
      {"windmill_II", FamilyKind::windmill_II},
      {"windmill2", FamilyKind::windmill_II},
      {"random_block_graph", FamilyKind::random_block_graph},
      {"block", FamilyKind::random_block_graph},
      {"random_cactus", FamilyKind::random_cactus},
      {"cactus", FamilyKind::random_cactus},
  };
  for (const auto& a : aliases) {
    if (a.name == name) return a.kind;
  }
  return std::nullopt;
}

bool is_random_family(FamilyKind kind) {
  return kind == FamilyKind::random_block_graph || kind == FamilyKind::random_cactus;
}

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw ValidationError(message);
}

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Graph relabel(int n, std::vector<Edge> edges, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& [u, v] : edges) {
    u = perm[u];
    v = perm[v];
  }
  return Graph(n, edges);
}

Graph windmill(const FamilyParams& p, bool centre_clique) {
  require(p.eta >= 1 && p.k >= 1 && p.l >= 1, "windmill parameters eta, k, l must be >= 1");
  const int n = p.l + p.eta * p.k;
  std::vector<Edge> edges;
  if (centre_clique) {
    for (int a = 0; a < p.l; ++a)
      for (int b = a + 1; b < p.l; ++b) edges.emplace_back(a, b);
  }
  for (int c = 0; c < p.eta; ++c) {
    const int base = p.l + c * p.k;
    for (int i = 0; i < p.k; ++i) {
      for (int j = i + 1; j < p.k; ++j) edges.emplace_back(base + i, base + j);
      for (int a = 0; a < p.l; ++a) edges.emplace_back(a, base + i);
    }
  }
  return Graph(n, edges);
}

// Block sizes minus one (new vertices per block) summing to n - 1, every part >= 2.
std::vector<int> block_increments(const FamilyParams& p, std::mt19937_64& rng) {
  const int total = p.n - 1;
  std::vector<int> parts;
  if (p.blocks > 0) {
    require(total >= 2 * p.blocks, "random_block_graph needs n >= 2*blocks + 1");
    // Stars and bars over the surplus.
    const int surplus = total - 2 * p.blocks;
    std::vector<int> cuts(p.blocks - 1);
    for (auto& c : cuts) c = uniform(rng, 0, surplus);
    std::sort(cuts.begin(), cuts.end());
    int prev = 0;
    for (int c : cuts) {
      parts.push_back(2 + c - prev);
      prev = c;
    }
    parts.push_back(2 + surplus - prev);
    return parts;
  }
  require(p.max_block >= 3, "random_block_graph needs max_block >= 3");
  int remaining = total;
  while (remaining > 0) {
    int part = std::min(uniform(rng, 2, p.max_block - 1), remaining);
    // Never leave a single vertex over; with max_block = 3 that means one size-4 block.
    if (remaining - part == 1) part = (part < p.max_block - 1 || part == 2) ? part + 1 : part - 1;
    parts.push_back(part);
    remaining -= part;
  }
  return parts;
}

Graph random_block_graph(const FamilyParams& p, std::mt19937_64& rng) {
  require(p.n >= 3, "random_block_graph needs n >= 3");
  const auto parts = block_increments(p, rng);
  std::vector<Edge> edges;
  int count = 0;
  for (std::size_t b = 0; b < parts.size(); ++b) {
    std::vector<Vertex> members;
    if (b == 0) {
      members.push_back(count++);
    } else {
      members.push_back(uniform(rng, 0, count - 1));
    }
    for (int i = 0; i < parts[b]; ++i) members.push_back(count++);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) edges.emplace_back(members[i], members[j]);
  }
  return relabel(count, std::move(edges), rng);
}

Graph random_cactus(const FamilyParams& p, std::mt19937_64& rng) {
  require(p.n >= 1, "random_cactus needs n >= 1");
  require(p.bridge_percent >= 0 && p.bridge_percent <= 100, "bridge_percent must lie in [0, 100]");
  require(p.max_block >= 3 || p.bridge_percent == 100, "random_cactus needs max_block >= 3 for cycles");
  std::vector<Edge> edges;
  int count = 1;
  while (count < p.n) {
    const int remaining = p.n - count;
    const Vertex at = uniform(rng, 0, count - 1);
    const bool bridge = remaining == 1 || uniform(rng, 0, 99) < p.bridge_percent;
    if (bridge) {
      edges.emplace_back(at, count++);
      continue;
    }
    const int length = uniform(rng, 3, std::min(p.max_block, remaining + 1));
    Vertex prev = at;
    for (int i = 1; i < length; ++i) {
      edges.emplace_back(prev, count);
      prev = count++;
    }
    edges.emplace_back(prev, at);
  }
  return relabel(count, std::move(edges), rng);
}

}  // namespace

Graph generate_family(FamilyKind kind, const FamilyParams& p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  switch (kind) {
    case FamilyKind::path:
      require(p.n >= 1, "path needs n >= 1");
      for (int v = 0; v + 1 < p.n; ++v) edges.emplace_back(v, v + 1);
      return Graph(p.n, edges);
    case FamilyKind::cycle:
      require(p.n >= 3, "cycle needs n >= 3");
      for (int v = 0; v < p.n; ++v) edges.emplace_back(v, (v + 1) % p.n);
      return Graph(p.n, edges);
    case FamilyKind::clique:
      require(p.n >= 1, "clique needs n >= 1");
      for (int u = 0; u < p.n; ++u)
        for (int v = u + 1; v < p.n; ++v) edges.emplace_back(u, v);
      return Graph(p.n, edges);
    case FamilyKind::generalized_star: {
      require(!p.path_lengths.empty(), "generalized_star needs at least one arm");
      int next = 1;
      for (int len : p.path_lengths) {
        require(len >= 1, "generalized_star arm lengths must be >= 1");
        Vertex prev = 0;
        for (int i = 0; i < len; ++i) {
          edges.emplace_back(prev, next);
          prev = next++;
        }
      }
      return Graph(next, edges);
    }
    case FamilyKind::windmill_I: return windmill(p, true);
    case FamilyKind::windmill_II: return windmill(p, false);
    case FamilyKind::random_block_graph: return random_block_graph(p, rng);
    case FamilyKind::random_cactus: return random_cactus(p, rng);
  }
  throw ValidationError("unknown family kind");
}

}  // namespace zq
