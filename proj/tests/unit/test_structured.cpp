#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zqforce/block_solver.hpp"
#include "zqforce/blocks.hpp"
#include "zqforce/cactus_solver.hpp"
#include "zqforce/errors.hpp"
#include "zqforce/forcing.hpp"
#include "zqforce/game.hpp"
#include "zqforce/generators.hpp"

using namespace zq;

namespace {

int z0(const Graph& g) { return solve_zq(g).value(); }

Graph triangle_path(int t) {
  std::vector<Edge> e;
  for (int i = 0; i < t; ++i) {
    const int a = 2 * i;
    e.insert(e.end(), {{a, a + 1}, {a + 1, a + 2}, {a, a + 2}});
  }
  return Graph(2 * t + 1, e);
}

}  // namespace

TEST_SUITE("block_solver") {
  TEST_CASE("cliques and bowtie") {
    for (int n = 2; n <= 9; ++n) {
      Graph k = generate_family(FamilyKind::clique, FamilyParams{.n = n});
      if (n >= 3) CHECK(block_graph_Z(k).value == n - 1);
    }
    auto bt = block_graph_Z(testing::bowtie());
    CHECK(bt.value == 3);
    CHECK(check_certificate(testing::bowtie(), 0, bt.certificate).ok);
    CHECK(block_graph_Zq(testing::bowtie(), 0) == 3);
    CHECK(block_graph_Zq(generate_family(FamilyKind::clique, FamilyParams{.n = 4}), 2) == 3);
  }

  TEST_CASE("lone vertex") {
    auto r = block_graph_Z(Graph(1, std::vector<Edge>{}));
    CHECK(r.value == 1);
    CHECK(check_certificate(Graph(1, std::vector<Edge>{}), 0, r.certificate).ok);
  }

  TEST_CASE("out of class inputs name a block") {
    CHECK_THROWS_WITH_AS(block_graph_Z(testing::path_graph(3)), doctest::Contains("bridge"), ScopeError);
    CHECK_THROWS_WITH_AS(block_graph_Z(testing::cycle_graph(4)), doctest::Contains("clique"), ScopeError);
    CHECK_THROWS_AS(block_graph_Z(parse_edge_list("0 1\n1 2\n2 0\n3 4\n4 5\n5 3")), ScopeError);
    CHECK_THROWS_AS(block_graph_Zq(testing::bowtie(), -1), ValidationError);
  }

  TEST_CASE("random block graphs: n - b, brute force, certificates, audits") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
      FamilyParams p;
      p.n = 3 + static_cast<int>(seed % 10);
      p.max_block = 3 + static_cast<int>(seed % 4);
      Graph g = generate_family(FamilyKind::random_block_graph, p, seed);
      auto r = block_graph_Z(g);
      const int b = static_cast<int>(find_blocks(g).sequence.size());
      CAPTURE(to_edge_list(g));
      CHECK(r.value == g.n() - b);
      CHECK(r.value == brute_force_Z(g).value);
      CHECK(r.certificate.value() == r.value);
      CHECK(is_zero_forcing_set(g, VertexSet(g.n(), r.certificate.tokens)));
      CHECK(check_certificate(g, 0, r.certificate).ok);
      CHECK(audit_block_tokens(r).empty());
    }
  }

  TEST_CASE("audit catches a bad block") {
    auto r = block_graph_Z(testing::bowtie());
    r.certificate.tokens = {0};
    CHECK_FALSE(audit_block_tokens(r).empty());
  }
}

TEST_SUITE("cactus") {
  TEST_CASE("cycles, bowtie, triangle paths") {
    for (int n = 3; n <= 12; ++n) CHECK(cactus_Z0(testing::cycle_graph(n)) == 2);
    CHECK(cactus_Z0(testing::bowtie()) == 3);
    for (int t = 1; t <= 5; ++t) {
      CHECK(cactus_Z0(triangle_path(t)) == t + 1);
      if (t <= 3) CHECK(z0(triangle_path(t)) == t + 1);
    }
  }

  TEST_CASE("small cases and errors") {
    CHECK(cactus_Z0(Graph(1, std::vector<Edge>{})) == 1);
    CHECK(cactus_Z0(testing::path_graph(2)) == 1);
    CHECK(cactus_Z0(testing::path_graph(7)) == 1);
    CHECK_THROWS_AS(cactus_Z0(generate_family(FamilyKind::clique, FamilyParams{.n = 4})), ScopeError);
    CHECK_THROWS_AS(cactus_Z0(parse_edge_list("0 1\n2 3")), ScopeError);
  }

  TEST_CASE("trees match the game solver") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 150; ++trial) {
      Graph t = testing::random_tree(1 + trial % 12, rng);
      CAPTURE(to_edge_list(t));
      CHECK(cactus_Z0(t) == z0(t));
    }
  }

  TEST_CASE("random cacti match the game solver") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
      FamilyParams p;
      p.n = 2 + static_cast<int>(seed % 11);
      p.max_block = 3 + static_cast<int>(seed % 5);
      p.bridge_percent = static_cast<int>(seed * 13 % 100);
      Graph g = generate_family(FamilyKind::random_cactus, p, seed);
      CAPTURE(to_edge_list(g));
      CHECK(cactus_Z0(g) == z0(g));
    }
  }

  TEST_CASE("tables are exposed per root") {
    auto r = cactus_Z0_tables(testing::bowtie(), true);
    CHECK(r.value == 3);
    REQUIRE(r.roots.size() == 5);
    for (const auto& t : r.roots) {
      CHECK(t.value >= 3);
      CHECK(t.blocks.size() == 2);
      CHECK(t.dp.size() == 5);
    }
    CHECK(r.roots[r.best_root].value == 3);
    // bridges never define the second member slot
    auto path = cactus_Z0_tables(testing::path_graph(3), true);
    for (const auto& t : path.roots)
      for (const auto& b : t.blocks) CHECK(b.val[0][2] == kCactusUndefined);
  }
}
