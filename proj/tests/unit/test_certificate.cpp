#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zqforce/certificate.hpp"
#include "zqforce/errors.hpp"
#include "zqforce/forcing.hpp"

using namespace zq;

namespace {

Certificate make(std::vector<TraceStep> steps) {
  Certificate c;
  c.trace = std::move(steps);
  c.sync_tokens();
  return c;
}

}  // namespace

TEST_SUITE("certificate") {
  TEST_CASE("path trace under any q") {
    Certificate c = make({TokenStep{0}, ForceStep{0, 1}, ForceStep{1, 2}});
    for (int q : {0, 1, 3, kQInfinity}) CHECK(check_certificate(testing::path_graph(3), q, c).ok);
  }

  TEST_CASE("illegal force in K3") {
    Certificate c = make({TokenStep{0}, ForceStep{0, 1}});
    auto r = check_certificate(testing::cycle_graph(3), 0, c);
    CHECK_FALSE(r.ok);
    CHECK(r.failed_step == 1);
  }

  TEST_CASE("C5 announcement trace") {
    Certificate c = make({TokenStep{0}, TokenStep{2}, AnnounceStep{{{3, 4}}}, RevealStep{{{3, 4}}}, ForceStep{2, 3},
                          ForceStep{3, 4}, AnnounceStep{{{1}}}, RevealStep{{{1}}}, ForceStep{0, 1}});
    auto r = check_certificate(testing::cycle_graph(5), 0, c);
    CHECK_MESSAGE(r.ok, r.reason);
    CHECK(c.value() == 2);
    // q = 1 needs two components per announcement
    CHECK_FALSE(check_certificate(testing::cycle_graph(5), 1, c).ok);
  }

  TEST_CASE("single force mode allows one force per reveal") {
    Graph c6 = testing::cycle_graph(6);
    Certificate two = make({TokenStep{0}, TokenStep{3}, AnnounceStep{{{1, 2}}}, RevealStep{{{1, 2}}}, ForceStep{0, 1},
                            ForceStep{3, 2}, ForceStep{3, 4}, ForceStep{4, 5}});
    CHECK(check_certificate(c6, 0, two).ok);
    auto r = check_certificate(c6, 0, two, Rule3Mode::single_force);
    CHECK_FALSE(r.ok);
    CHECK(r.failed_step == 5);
    Certificate again = make({TokenStep{0}, TokenStep{3}, AnnounceStep{{{1, 2}}}, RevealStep{{{1, 2}}},
                              ForceStep{0, 1}, AnnounceStep{{{2}}}, RevealStep{{{2}}}, ForceStep{3, 2},
                              ForceStep{3, 4}, ForceStep{4, 5}});
    CHECK(check_certificate(c6, 0, again, Rule3Mode::single_force).ok);
    Certificate bad = make({TokenStep{0}, TokenStep{2}, AnnounceStep{{{1}, {3, 4}}}, RevealStep{{{1}, {3, 4}}},
                            ForceStep{2, 3}});
    CHECK_FALSE(check_certificate(testing::cycle_graph(5), 0, bad).ok);
  }

  TEST_CASE("announcement legality") {
    Graph c5 = testing::cycle_graph(5);
    // not a whole component
    CHECK_FALSE(check_certificate(c5, 0, make({TokenStep{0}, AnnounceStep{{{1, 2}}}, RevealStep{{{1, 2}}}})).ok);
    // reveal outside the announcement
    CHECK_FALSE(
        check_certificate(c5, 0, make({TokenStep{0}, TokenStep{2}, AnnounceStep{{{1}}}, RevealStep{{{3, 4}}}})).ok);
    // empty reveal
    CHECK_FALSE(check_certificate(c5, 0, make({TokenStep{0}, TokenStep{2}, AnnounceStep{{{1}}}, RevealStep{{}}})).ok);
    // announce without reveal
    CHECK_FALSE(check_certificate(c5, 0, make({TokenStep{0}, TokenStep{2}, AnnounceStep{{{1}}}, TokenStep{1}})).ok);
    // too few components for q
    CHECK_FALSE(check_certificate(c5, 1, make({TokenStep{0}, TokenStep{2}, AnnounceStep{{{1}}}, RevealStep{{{1}}}})).ok);
  }

  TEST_CASE("incomplete fill and token mismatch") {
    Certificate c = make({TokenStep{0}, ForceStep{0, 1}});
    CHECK_FALSE(check_certificate(testing::path_graph(3), 0, c).ok);
    Certificate d = make({TokenStep{0}, ForceStep{0, 1}, ForceStep{1, 2}});
    d.tokens = {1};
    CHECK_FALSE(check_certificate(testing::path_graph(3), 0, d).ok);
    Certificate twice = make({TokenStep{0}, TokenStep{0}, ForceStep{0, 1}, ForceStep{1, 2}});
    CHECK_FALSE(check_certificate(testing::path_graph(3), 0, twice).ok);
  }

  TEST_CASE("text round trip") {
    Certificate c = make({TokenStep{0}, TokenStep{2}, AnnounceStep{{{1}, {3, 4}}}, RevealStep{{{3, 4}}},
                          ForceStep{2, 3}});
    CHECK(parse_certificate(to_text(c)) == c);
    CHECK_THROWS_AS(parse_certificate("tokn 1\n"), ParseError);
    CHECK_THROWS_AS(parse_certificate("force 1\n"), ParseError);
  }

  TEST_CASE("applicable forces replay as legal steps") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 2 + trial % 9;
      Graph g = testing::random_connected_graph(n, 0.3, rng);
      const std::uint64_t mask = rng() & ((std::uint64_t{1} << n) - 1);
      VertexSet seed = VertexSet::from_mask(n, mask);
      for (const auto& f : applicable_forces(g, seed)) {
        Certificate c;
        for (Vertex v : seed.members()) c.trace.emplace_back(TokenStep{v});
        c.trace.emplace_back(ForceStep{f.source, f.target});
        for (Vertex v = 0; v < n; ++v)
          if (!seed.contains(v) && v != f.target) c.trace.emplace_back(TokenStep{v});
        c.sync_tokens();
        CHECK(check_certificate(g, 0, c).ok);
      }
    }
  }

  TEST_CASE("mode names") {
    CHECK(parse_rule3_mode("single") == Rule3Mode::single_force);
    CHECK(parse_rule3_mode("closure") == Rule3Mode::closure);
    CHECK_FALSE(parse_rule3_mode("x").has_value());
  }
}
