#include "qcycle/json_io.hpp"

#include <catch_amalgamated.hpp>

#include "qcycle/fermion.hpp"

using namespace qc;

TEST_CASE("wedge elements survive a round trip", "[json]") {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 4; ++n)
    for (int l = 0; l <= n; ++l)
      for (int s = 0; s < 3; ++s) {
        WedgeElem p = random_wedge(n, l, rng);
        REQUIRE(wedge_from_json(json::parse(wedge_to_json(p).dump())) == p);
      }
}

TEST_CASE("unsorted subsets carry their sign", "[json]") {
  json j = json::parse(R"({"n":3,"l":2,"terms":[{"subset":[2,0],"coeff":1}]})");
  REQUIRE(wedge_from_json(j) == WedgeElem::basis(3, {0, 2}, RationalFn(-1)));
  json rep = json::parse(R"({"n":3,"l":2,"terms":[{"subset":[1,1],"coeff":1}]})");
  REQUIRE_THROWS_AS(wedge_from_json(rep), std::invalid_argument);
  REQUIRE_THROWS_AS(wedge_from_json(json::parse(R"({"n":2})")), JsonError);
}

TEST_CASE("towers and rational coefficients round trip", "[json]") {
  auto t = example_tower("jminus", 6);
  auto [w, back] = tower_from_json(json::parse(tower_to_json(example_tower_weight("jminus"), t).dump()));
  REQUIRE(w == example_tower_weight("jminus"));
  REQUIRE(back == t);
  RationalFn f(zvar(1) + LaurentPoly(1), {{zvar(2) - LaurentPoly(1), 2}});
  REQUIRE(ratfn_from_json(ratfn_to_json(f)) == f);
}

TEST_CASE("scalar strings parse back", "[json]") {
  LaurentPoly p = LaurentPoly(CycScalar::zeta_power(3)) * zvar(1);
  REQUIRE(poly_from_json(poly_to_json(p)) == p);
}
