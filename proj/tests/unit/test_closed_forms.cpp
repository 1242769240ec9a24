#include <doctest.h>

#include "zqforce/closed_forms.hpp"
#include "zqforce/errors.hpp"
#include "zqforce/game.hpp"
#include "zqforce/generators.hpp"

using namespace zq;

TEST_SUITE("closed_forms") {
  TEST_CASE("star examples") {
    CHECK(star_Zq({2, 3, 4}, 1) == 2);
    CHECK(star_Zq({5, 5, 5, 5}, 0) == 1);
    CHECK(star_Zq({7}, 3) == 1);
    CHECK(star_Zq({7, 2}, 1) == 1);
    CHECK_THROWS_AS(star_Zq({}, 0), ValidationError);
    CHECK_THROWS_AS(star_Zq({1, 0}, 0), ValidationError);
  }

  TEST_CASE("windmill I examples") {
    CHECK(windmill_I_Zq(2, 3, 1, 5) == 5);
    CHECK(windmill_I_Zq(3, 1, 2, 1) == 3);
    CHECK(windmill_I_Zq(3, 1, 2, 0) == 2);
    CHECK(windmill_I_Zq(1, 1, 3, 0) == 3);
    CHECK(windmill_I_Zq(1, 1, 3, 2) == 3);
  }

  TEST_CASE("windmill II examples") {
    CHECK(windmill_II_Zq(2, 2, 5, 0) == 4);
    CHECK(windmill_II_Zq(2, 2, 5, 1) == 7);
    CHECK(windmill_II_Zq(1, 3, 2, 0) == 3);
    CHECK(windmill_II_Zq(3, 2, 1, 0) == windmill_I_Zq(3, 2, 1, 0));
    CHECK_THROWS_AS(windmill_II_Zq(2, 1, 2, 0), ScopeError);
    CHECK_THROWS_AS(windmill_II_Zq(0, 2, 2, 0), ValidationError);
  }

  TEST_CASE("formulas match the solver on small windmills") {
    for (int eta = 1; eta <= 2; ++eta)
      for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 2; ++l) {
          FamilyParams p{.eta = eta, .k = k, .l = l};
          Graph w1 = generate_family(FamilyKind::windmill_I, p);
          Graph w2 = generate_family(FamilyKind::windmill_II, p);
          for (int q : {0, 1, 2}) {
            CAPTURE(eta);
            CAPTURE(k);
            CAPTURE(l);
            CAPTURE(q);
            GameConfig cfg;
            cfg.q = q;
            CHECK(windmill_I_Zq(eta, k, l, q) == solve_zq(w1, cfg).value());
            if (!(k == 1 && eta > 1 && l > 1)) CHECK(windmill_II_Zq(eta, k, l, q) == solve_zq(w2, cfg).value());
          }
        }
  }

  TEST_CASE("monotone in q") {
    for (int eta = 1; eta <= 3; ++eta)
      for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l)
          for (int q = 0; q < 12; ++q) {
            CHECK(windmill_I_Zq(eta, k, l, q) <= windmill_I_Zq(eta, k, l, q + 1));
            if (!(k == 1 && eta > 1 && l > 1)) CHECK(windmill_II_Zq(eta, k, l, q) <= windmill_II_Zq(eta, k, l, q + 1));
          }
  }
}
