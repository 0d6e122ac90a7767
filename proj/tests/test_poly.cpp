#include <catch_amalgamated.hpp>

#include <random>

#include "qcycle/ratfn.hpp"

using namespace qc;

namespace {

LaurentPoly Z(int j, int k = 1) { return LaurentPoly::variable(var::z(j), k); }
LaurentPoly T(int k = 1) { return LaurentPoly::variable(var::kT, k); }
LaurentPoly X(int a, int k = 1) { return LaurentPoly::variable(var::x(a), k); }

LaurentPoly random_poly(std::mt19937_64& rng, int nvars, int terms, bool laurent) {
  std::uniform_int_distribution<int> ex(laurent ? -2 : 0, 2), co(-3, 3);
  LaurentPoly p;
  for (int i = 0; i < terms; ++i) {
    Mono m;
    for (int v = 1; v <= nvars; ++v) m.set(var::z(v), ex(rng));
    m.set(var::kT, std::uniform_int_distribution<int>(0, 2)(rng));
    p += LaurentPoly(m, CycScalar(co(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("ring arithmetic") {
  CHECK((1 - Z(1) * T()) * (1 + Z(1) * T()) == 1 - Z(1, 2) * T(2));
  CHECK(Z(1, -1) * Z(1) == LaurentPoly(1));
  CHECK((Z(1) + Z(2)).pow(2) == Z(1, 2) + 2 * Z(1) * Z(2) + Z(2, 2));
}

TEST_CASE("exact division") {
  CHECK(exact_div(X(1, 2) - T(2), X(1) - T()) == X(1) + T());
  CHECK_THROWS_AS(exact_div(1 - Z(1) * T(), 1 - Z(2) * T()), NonDivisible);
  // theta_2(t, -X) / (X - t), checked by multiplying back
  LaurentPoly th_t = (1 - Z(1) * T()) * (1 - Z(2) * T());
  LaurentPoly th_mt = (1 + Z(1) * T()) * (1 + Z(2) * T());
  LaurentPoly th_x = (1 + Z(1) * X(1)) * (1 + Z(2) * X(1));
  LaurentPoly th_mx = (1 - Z(1) * X(1)) * (1 - Z(2) * X(1));
  LaurentPoly num = th_t * th_x - th_mt * th_mx;
  LaurentPoly q = exact_div(num, X(1) - T());
  CHECK(q * (X(1) - T()) == num);
  CHECK(exact_div(Z(1, -1) * (Z(1, 2) - Z(2, 2)), Z(1) + Z(2)) == Z(1, -1) * (Z(1) - Z(2)));
}

TEST_CASE("exact_div(a*b, b) = a") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 1000; ++it) {
    LaurentPoly a = random_poly(rng, 3, 4, true);
    LaurentPoly b = random_poly(rng, 3, 3, true);
    if (b.is_zero()) continue;
    REQUIRE(exact_div(a * b, b) == a);
  }
}

TEST_CASE("substitution") {
  LaurentPoly theta = (1 - Z(1) * X(1)) * (1 - Z(2) * X(1));
  LaurentPoly zz = LaurentPoly::variable(var::kZAux);
  Bindings b{{var::z(1), RationalFn(zz)}, {var::z(2), RationalFn(-zz)}};
  CHECK(substitute(theta, b).poly() == 1 - zz * zz * X(1, 2));
  CHECK(substitute(X(1, 3), {{var::x(1), RationalFn(zz).inverse()}}).poly() == LaurentPoly::variable(var::kZAux, -3));
  CHECK(substitute(Z(1) + Z(2), {{var::z(2), RationalFn(-Z(1))}}).is_zero());
  CHECK_THROWS(substitute(Z(1), {{var::z(1), RationalFn(0)}}));
  RationalFn r = substitute(Z(1, -1), {{var::z(1), RationalFn(1 + Z(2))}});
  CHECK(r * RationalFn(1 + Z(2)) == RationalFn(1));
}

TEST_CASE("rational functions") {
  RationalFn a(1 + Z(1), 1 - Z(2));
  RationalFn b(Z(2), 1 - Z(2));
  CHECK(a + b == RationalFn(1 + Z(1) + Z(2), 1 - Z(2)));
  CHECK((a * RationalFn(1 - Z(2))).is_poly());
  RationalFn c(Z(1, 2) - Z(2, 2), Z(1) - Z(2));
  CHECK(c.is_poly());
  CHECK(c.poly() == Z(1) + Z(2));
  CHECK((a / a) == RationalFn(1));
  CHECK(a - a == RationalFn(0));
}

TEST_CASE("series expansion") {
  RationalFn g(LaurentPoly(1), 1 - Z(1) * T());
  auto s = series_expand(g, var::kT, Point::Zero, 3);
  REQUIRE(s.size() == 4);
  for (int k = 0; k <= 3; ++k) CHECK(s[k] == Z(1, k));
  RationalFn h(Z(1) * T(), 1 - Z(1) * T());
  auto si = series_expand(h, var::kT, Point::Infinity, 3);
  CHECK(si[0] == LaurentPoly(-1));
  for (int k = 1; k <= 3; ++k) CHECK(si[-k] == -Z(1, -k));
  CHECK(si.size() == 4);
  auto s0 = series_expand(h, var::kT, Point::Zero, 2);
  CHECK(s0[1] == Z(1));
  CHECK_THROWS_AS(series_expand(RationalFn(LaurentPoly(1), Z(1) + Z(2) + T()), var::kT, Point::Zero, 2),
                  NotExpandable);
}

TEST_CASE("series round trip") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 100; ++it) {
    LaurentPoly num = random_poly(rng, 2, 3, true);
    LaurentPoly den = LaurentPoly(Mono::var_pow(var::z(1), 1), CycScalar(1)) + random_poly(rng, 2, 2, false) * T();
    if (num.is_zero()) continue;
    RationalFn f(num, den);
    const int K = 4;
    auto s = series_expand(f, var::kT, Point::Zero, K);
    LaurentPoly partial;
    for (auto& [k, c] : s) partial += c * T(k);
    LaurentPoly diff = partial * f.den() - f.num();
    for (auto& [m, c] : diff.terms()) REQUIRE(m[var::kT] > K);
  }
}
