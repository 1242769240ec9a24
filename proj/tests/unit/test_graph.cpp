#include <doctest.h>

#include "oracles.hpp"
#include "zqforce/errors.hpp"
#include "zqforce/graph.hpp"

using namespace zq;

TEST_SUITE("graph") {
  TEST_CASE("parse path") {
    Graph g = parse_edge_list("0 1\n1 2");
    CHECK(g.n() == 3);
    CHECK(g.m() == 2);
  }

  TEST_CASE("parse header with isolated vertices") {
    Graph g = parse_edge_list("n 4\n0 1");
    CHECK(g.n() == 4);
    CHECK(g.m() == 1);
    CHECK(g.degree(2) == 0);
    CHECK(g.degree(3) == 0);
  }

  TEST_CASE("parse collapses duplicates") {
    Graph g = parse_edge_list("0 1\n0 1\n1 0");
    CHECK(g.n() == 2);
    CHECK(g.m() == 1);
    CHECK(g.has_edge(1, 0));
  }

  TEST_CASE("comments and blank lines") {
    Graph g = parse_edge_list("# triangle\n\n0 1 # first\n1 2\n2 0\n");
    CHECK(g.m() == 3);
  }

  TEST_CASE("malformed line reports its number") {
    try {
      parse_edge_list("0 1\n1 x\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_edge_list("0 1 2"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0"), ParseError);
  }

  TEST_CASE("self-loop is a validation error") {
    CHECK_THROWS_AS(parse_edge_list("0 1\n2 2"), ValidationError);
    CHECK_THROWS_AS(Graph(3, std::vector<Edge>{{1, 1}}), ValidationError);
  }

  TEST_CASE("header smaller than endpoints") { CHECK_THROWS_AS(parse_edge_list("n 2\n0 5"), ValidationError); }

  TEST_CASE("edge list round trip") {
    Graph g = testing::bowtie();
    CHECK(parse_edge_list(to_edge_list(g)) == g);
    Graph iso = parse_edge_list("n 5\n0 1");
    CHECK(parse_edge_list(to_edge_list(iso)) == iso);
  }

  TEST_CASE("adjacency symmetric and sorted") {
    Graph g(4, std::vector<Edge>{{3, 0}, {0, 1}, {2, 0}});
    CHECK(g.neighbors(0) == std::vector<Vertex>{1, 2, 3});
    for (Vertex v = 0; v < 4; ++v)
      for (Vertex u : g.neighbors(v)) CHECK(g.has_edge(u, v));
  }

  TEST_CASE("unfilled components of C5") {
    Graph c5 = testing::cycle_graph(5);
    auto one = unfilled_components(c5, VertexSet(5, {0}));
    REQUIRE(one.size() == 1);
    CHECK(one[0].members() == std::vector<Vertex>{1, 2, 3, 4});
    auto two = unfilled_components(c5, VertexSet(5, {0, 2}));
    REQUIRE(two.size() == 2);
    CHECK(two[0].members() == std::vector<Vertex>{1});
    CHECK(two[1].members() == std::vector<Vertex>{3, 4});
    CHECK(unfilled_components(c5, VertexSet::full(5)).empty());
  }

  TEST_CASE("connectivity and induced subgraphs") {
    Graph g = parse_edge_list("0 1\n2 3\n3 4");
    CHECK_FALSE(is_connected(g));
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 2);
    Subgraph s = induced_subgraph(g, comps[1]);
    CHECK(s.graph.n() == 3);
    CHECK(s.graph.m() == 2);
    CHECK(s.original == std::vector<Vertex>{2, 3, 4});
    CHECK(is_connected(Graph(1, std::vector<Edge>{})));
  }

  TEST_CASE("vertex set basics") {
    VertexSet s(70, {1, 65});
    CHECK(s.size() == 2);
    CHECK(s.contains(65));
    s.erase(65);
    CHECK_FALSE(s.contains(65));
    CHECK_THROWS_AS(s.insert(70), ValidationError);
    VertexSet a = VertexSet::from_mask(6, 0b101101);
    CHECK(a.to_mask() == 0b101101);
    CHECK(VertexSet(6, {0, 2}).is_subset_of(a));
  }
}
