#include <catch_amalgamated.hpp>

#include <random>

#include "qcycle/symfn.hpp"
#include "qcycle/wedge.hpp"

using namespace qc;

namespace {

WedgeElem random_monomial_wedge(std::mt19937_64& rng, int n, int l) {
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  std::shuffle(all.begin(), all.end(), rng);
  Subset s(all.begin(), all.begin() + l);
  std::sort(s.begin(), s.end());
  return WedgeElem::basis(n, s, RationalFn(zvar(1 + static_cast<int>(rng() % n))));
}

}  // namespace

TEST_CASE("symmetric functions") {
  CHECK(elementary(2, 1) == zvar(1) + zvar(2));
  CHECK(power_sum(2, -1) == zvar(1, -1) + zvar(2, -1));
  CHECK(is_symmetric(zvar(1) + zvar(2), 2));
  CHECK_FALSE(is_symmetric(zvar(1) - zvar(2), 2));
  LaurentPoly prod(1);
  for (int j = 1; j <= 3; ++j)
    for (int k = j + 1; k <= 3; ++k) prod *= zvar(j) + zvar(k);
  CHECK(is_symmetric(prod, 3));
  for (int a = 0; a <= 1; ++a) CHECK(schur_frobenius(4, {0}, {2 * a}) == elementary(4, 2 * a + 1));
  CHECK_THROWS(frobenius_to_partition({1, 2}, {0, 1}));
  CHECK(frobenius_to_partition({2, 0}, {2, 0}) == std::vector<int>{3, 2, 1});
}

TEST_CASE("Schur bialternant agrees with Jacobi-Trudi in a 4x4 box") {
  for (int n = 1; n <= 4; ++n) {
    // all partitions with at most 4 parts, parts <= 4
    std::vector<int> lam(4, 0);
    std::function<void(int, int)> rec = [&](int i, int maxp) {
      if (i == 4) {
        REQUIRE(schur(n, lam) == schur_jacobi_trudi(n, lam));
        return;
      }
      for (int p = 0; p <= maxp; ++p) {
        lam[i] = p;
        rec(i + 1, p);
      }
      lam[i] = 0;
    };
    rec(0, 4);
  }
}

TEST_CASE("wedge products") {
  WedgeElem x0 = WedgeElem::basis(4, {0}), x1 = WedgeElem::basis(4, {1}), x3 = WedgeElem::basis(4, {3});
  CHECK(wedge_mul(x0, x0).is_zero());
  CHECK(wedge_mul(x1, x3) == WedgeElem::basis(4, {1, 3}));
  CHECK(wedge_mul(x3, x1) == -WedgeElem::basis(4, {1, 3}));
  WedgeElem e1x0 = x0 * RationalFn(elementary(4, 1));
  CHECK(wedge_mul(e1x0, x1).coeff({0, 1}) == RationalFn(elementary(4, 1)));
  CHECK(wedge_mul(WedgeElem::basis(2, {0}), WedgeElem::basis(2, {1}) * RationalFn(1)).l() == 2);
  CHECK(wedge_mul(WedgeElem::basis(2, {0, 1}), WedgeElem::basis(2, {0})).is_zero());
}

TEST_CASE("wedge associativity and graded anticommutativity") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 200; ++it) {
    int n = 6;
    int la = 1 + rng() % 2, lb = 1 + rng() % 2, lc = 1 + rng() % 2;
    WedgeElem a = random_monomial_wedge(rng, n, la), b = random_monomial_wedge(rng, n, lb),
              c = random_monomial_wedge(rng, n, lc);
    REQUIRE(wedge_mul(wedge_mul(a, b), c) == wedge_mul(a, wedge_mul(b, c)));
    WedgeElem ab = wedge_mul(a, b), ba = wedge_mul(b, a);
    REQUIRE(ab == ((la * lb) % 2 ? -ba : ba));
  }
}

TEST_CASE("skew symmetrization") {
  ExpandedPoly f;
  f.vars = 2;
  f.add({0, 1}, RationalFn(1));
  CHECK(skew(3, f) == WedgeElem::basis(3, {0, 1}));
  ExpandedPoly g;
  g.vars = 2;
  g.add({2, 2}, RationalFn(1));
  CHECK(skew(3, g).is_zero());
  std::mt19937_64 rng(5);
  for (int it = 0; it < 50; ++it) {
    WedgeElem p = random_monomial_wedge(rng, 5, 3) + random_monomial_wedge(rng, 5, 3);
    // skew of the expanded form counts every permutation once more
    REQUIRE(skew(5, expand(p)) == p * CycScalar(6));
  }
  ExpandedPoly big;
  big.vars = 1;
  big.add({3}, RationalFn(1));
  CHECK_THROWS(skew(3, big));
}

TEST_CASE("specialization and contraction") {
  WedgeElem p = WedgeElem::basis(3, {0, 1});
  ExpandedPoly s = specialize_X(p, 2, RationalFn(tvar()));
  ExpandedPoly expect;
  expect.vars = 1;
  expect.add({0}, RationalFn(tvar()));
  expect.add({1}, RationalFn(-1));
  CHECK(s == expect);
  CHECK_THROWS(specialize_X(WedgeElem::scalar(2, RationalFn(1)), 1, RationalFn(tvar())));
  // contraction agrees with substitution of the last slot
  std::mt19937_64 rng(9);
  for (int it = 0; it < 30; ++it) {
    WedgeElem q = random_monomial_wedge(rng, 5, 3) + random_monomial_wedge(rng, 5, 3);
    ExpandedPoly direct = specialize_X(q, 3, RationalFn(tvar()));
    ExpandedPoly viac;
    viac.vars = 2;
    for (auto& [e, w] : contract_last(q))
      for (auto& [ex, c] : expand(w).terms) viac.add(ex, c * RationalFn(tvar(e)));
    REQUIRE(direct == viac);
  }
}

TEST_CASE("bigrading") {
  int m = 1;
  WedgeElem p = WedgeElem::basis(m + 4, {m + 1, m + 3});
  BiGrading g = bigrade(p);
  CHECK(g.weight == m);
  CHECK(g.deg0 == -(2 * m + 4));
  CHECK(bigrade(WedgeElem::basis(2, {0}, RationalFn(elementary(2, 1)))).deg0 == 1);
  WedgeElem h = WedgeElem::basis(2, {0}, RationalFn(zvar(1) * zvar(2))) + WedgeElem::basis(2, {1});
  BiGrading gh = bigrade(h);
  CHECK_FALSE(gh.deg0.has_value());
  CHECK(gh.parts.size() == 2);
  CHECK(gh.parts.count(2));
  CHECK(gh.parts.count(-1));
  // additivity under wedge
  WedgeElem a = WedgeElem::basis(4, {1}, RationalFn(elementary(4, 2)));
  WedgeElem b = WedgeElem::basis(4, {3}, RationalFn(zvar(1, -1)));
  CHECK(*bigrade(wedge_mul(a, b)).deg0 == *bigrade(a).deg0 + *bigrade(b).deg0);
}

TEST_CASE("theta") {
  LaurentPoly X = xvar(1);
  CHECK(theta(2, X) == 1 - (zvar(1) + zvar(2)) * X + zvar(1) * zvar(2) * xvar(1, 2));
  LaurentPoly X2 = xvar(2);
  CHECK(theta2(3, X, X2) == -theta2(3, -X, -X2));
  CHECK(theta2(2, LaurentPoly(), -X) == 2 * (zvar(1) + zvar(2)) * X);
  LaurentPoly zz = zaux();
  Bindings b{{var::z(1), RationalFn(zz)}, {var::z(2), RationalFn(-zz)}};
  CHECK(substitute(theta(2, X), b).poly() == 1 - zz * zz * xvar(1, 2));
}

TEST_CASE("single kernel") {
  RationalFn f1 = kernel_F(1);
  CHECK(f1 == RationalFn(zvar(1) * tvar(), 1 - zvar(1) * tvar()));
  auto s2 = kernel_F_series(2, Point::Zero, 2);
  CHECK(s2[1] == elementary(2, 1));
  for (int n = 1; n <= 5; ++n) {
    for (Point at : {Point::Zero, Point::Infinity}) {
      auto ser = kernel_F_series(n, at, 4);
      auto ref = series_expand(kernel_F(n), var::kT, at, 4);
      REQUIRE(ser == ref);
      for (auto& [k, c] : ser) REQUIRE(c.degree_range(var::x(1)).second <= n - 1);
    }
  }
}

TEST_CASE("double kernel") {
  for (int n = 1; n <= 4; ++n) {
    RationalFn f2 = kernel_F2(n);
    REQUIRE(f2.den_factors().size() <= 1);
    LaurentPoly swapped = f2.num().swap_slots(var::x(1), var::x(2));
    REQUIRE(swapped == -f2.num());
    for (Point at : {Point::Zero, Point::Infinity}) {
      auto ser = kernel_F2_series(n, at, 4);
      auto ref = series_expand(f2, var::kT, at, 4);
      REQUIRE(ser == ref);
    }
  }
}
