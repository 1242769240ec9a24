#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "zqforce/blocks.hpp"
#include "zqforce/errors.hpp"
#include "zqforce/generators.hpp"

using namespace zq;

namespace {

std::vector<std::vector<Vertex>> block_sets(const BlockOrder& order) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& b : order.sequence) out.push_back(b.vertices);
  std::sort(out.begin(), out.end());
  return out;
}

// Removing blocks in order (keeping anchors), each next block meets the rest in one vertex.
void check_order_invariant(const Graph& g, const BlockOrder& order) {
  const auto& seq = order.sequence;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    std::set<Vertex> rest;
    for (std::size_t j = i + 1; j < seq.size(); ++j) rest.insert(seq[j].vertices.begin(), seq[j].vertices.end());
    int shared = 0;
    for (Vertex v : seq[i].vertices) shared += rest.count(v);
    CHECK(shared == 1);
    REQUIRE(seq[i].anchor.has_value());
    CHECK(rest.count(*seq[i].anchor) == 1);
  }
  if (!seq.empty()) CHECK_FALSE(seq.back().anchor.has_value());
  (void)g;
}

}  // namespace

TEST_SUITE("blocks") {
  TEST_CASE("bowtie") {
    auto order = find_blocks(testing::bowtie());
    REQUIRE(order.sequence.size() == 2);
    CHECK(order.sequence[0].anchor == 2);
    CHECK_FALSE(order.sequence[1].anchor.has_value());
    CHECK(block_sets(order) == testing::oracle_blocks(testing::bowtie()));
  }

  TEST_CASE("triangle and P4") {
    auto tri = find_blocks(testing::cycle_graph(3));
    REQUIRE(tri.sequence.size() == 1);
    CHECK_FALSE(tri.sequence[0].anchor.has_value());
    auto p4 = find_blocks(testing::path_graph(4));
    REQUIRE(p4.sequence.size() == 3);
    for (const auto& b : p4.sequence) CHECK(b.size() == 2);
  }

  TEST_CASE("disconnected input refused") {
    CHECK_THROWS_AS(find_blocks(parse_edge_list("0 1\n2 3")), ScopeError);
  }

  TEST_CASE("class predicates") {
    Graph k4 = generate_family(FamilyKind::clique, FamilyParams{.n = 4});
    CHECK(is_block_graph(testing::bowtie(), 3));
    CHECK_FALSE(is_block_graph(testing::path_graph(4), 3));
    CHECK(is_block_graph(k4, 3));
    CHECK(is_cactus(testing::bowtie()));
    CHECK_FALSE(is_cactus(k4));
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) CHECK(is_cactus(testing::random_tree(1 + i % 10, rng)));
    CHECK_FALSE(is_block_graph(testing::cycle_graph(4), 3));
    CHECK(is_cactus(testing::cycle_graph(4)));
  }

  TEST_CASE("blocks agree with the vertex-removal oracle on random graphs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 150; ++trial) {
      const int n = 2 + trial % 10;
      Graph g = testing::random_connected_graph(n, 0.25, rng);
      auto order = find_blocks(g);
      CAPTURE(to_edge_list(g));
      CHECK(block_sets(order) == testing::oracle_blocks(g));
      int edges = 0;
      for (const auto& b : order.sequence) edges += b.edge_count;
      CHECK(edges == g.m());
      check_order_invariant(g, order);
      CHECK(is_cactus(g) == testing::oracle_is_cactus(g));
    }
  }

  TEST_CASE("order invariant on random block graphs") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      FamilyParams p;
      p.n = 5 + static_cast<int>(seed % 46);
      Graph g = generate_family(FamilyKind::random_block_graph, p, seed);
      auto order = find_blocks(g);
      check_order_invariant(g, order);
      for (std::size_t i = 0; i < order.sequence.size(); ++i)
        for (std::size_t j = i + 1; j < order.sequence.size(); ++j) {
          std::vector<Vertex> common;
          std::set_intersection(order.sequence[i].vertices.begin(), order.sequence[i].vertices.end(),
                                order.sequence[j].vertices.begin(), order.sequence[j].vertices.end(),
                                std::back_inserter(common));
          CHECK(common.size() <= 1);
        }
    }
  }

  TEST_CASE("cactus oracle spot check") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      FamilyParams p;
      p.n = 3 + static_cast<int>(seed % 8);
      Graph g = generate_family(FamilyKind::random_cactus, p, seed);
      CHECK(testing::oracle_is_cactus(g));
      CHECK(is_cactus(g));
    }
  }

  TEST_CASE("long cycle keeps a single block") {
    auto order = find_blocks(testing::cycle_graph(9));
    REQUIRE(order.sequence.size() == 1);
    CHECK(order.sequence[0].size() == 9);
    CHECK(count_cycle_blocks(order) == 1);
  }
}
