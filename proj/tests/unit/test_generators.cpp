#include <doctest.h>

#include "oracles.hpp"
#include "zqforce/blocks.hpp"
#include "zqforce/errors.hpp"
#include "zqforce/generators.hpp"

using namespace zq;

TEST_SUITE("generators") {
  TEST_CASE("windmill_I(1,1,3) is K4") {
    FamilyParams p{.eta = 1, .k = 1, .l = 3};
    Graph g = generate_family(FamilyKind::windmill_I, p);
    CHECK(g == generate_family(FamilyKind::clique, FamilyParams{.n = 4}));
  }

  TEST_CASE("star [1,1,1] is K_{1,3}") {
    FamilyParams p;
    p.path_lengths = {1, 1, 1};
    Graph g = generate_family(FamilyKind::generalized_star, p);
    CHECK(g.n() == 4);
    CHECK(g.m() == 3);
    CHECK(g.degree(0) == 3);
  }

  TEST_CASE("windmill_II(2,2,2)") {
    FamilyParams p{.eta = 2, .k = 2, .l = 2};
    Graph g = generate_family(FamilyKind::windmill_II, p);
    CHECK(g.n() == 6);
    CHECK_FALSE(g.has_edge(0, 1));
    for (Vertex c : {0, 1})
      for (Vertex v = 2; v < 6; ++v) CHECK(g.has_edge(c, v));
    CHECK(g.has_edge(2, 3));
    CHECK(g.has_edge(4, 5));
    CHECK_FALSE(g.has_edge(3, 4));
    Graph w1 = generate_family(FamilyKind::windmill_I, p);
    CHECK(w1.has_edge(0, 1));
    CHECK(w1.m() == g.m() + 1);
  }

  TEST_CASE("invalid parameters") {
    CHECK_THROWS_AS(generate_family(FamilyKind::windmill_I, FamilyParams{.eta = 2, .k = 0, .l = 1}), ValidationError);
    CHECK_THROWS_AS(generate_family(FamilyKind::generalized_star, FamilyParams{}), ValidationError);
  }

  TEST_CASE("random families are pure and in class") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      FamilyParams p;
      p.n = 4 + static_cast<int>(seed % 30);
      Graph a = generate_family(FamilyKind::random_block_graph, p, seed);
      CHECK(a == generate_family(FamilyKind::random_block_graph, p, seed));
      CHECK(a.n() == p.n);
      CHECK(is_connected(a));
      CHECK(is_block_graph(a, 3));
      Graph c = generate_family(FamilyKind::random_cactus, p, seed);
      CHECK(c == generate_family(FamilyKind::random_cactus, p, seed));
      CHECK(c.n() == p.n);
      CHECK(is_connected(c));
      CHECK(is_cactus(c));
    }
  }

  TEST_CASE("exact block count") {
    FamilyParams p;
    p.n = 10;
    p.blocks = 3;
    Graph g = generate_family(FamilyKind::random_block_graph, p, 7);
    CHECK(find_blocks(g).sequence.size() == 3);
    p.blocks = 5;
    CHECK_THROWS_AS(generate_family(FamilyKind::random_block_graph, p, 7), ValidationError);
  }

  TEST_CASE("family names") {
    CHECK(parse_family_kind("windmill1") == FamilyKind::windmill_I);
    CHECK(parse_family_kind("windmill_II") == FamilyKind::windmill_II);
    CHECK(parse_family_kind("cactus") == FamilyKind::random_cactus);
    CHECK_FALSE(parse_family_kind("bogus").has_value());
    CHECK(to_string(FamilyKind::generalized_star) == "generalized_star");
  }
}
