#include <catch_amalgamated.hpp>

#include <random>

#include "qcycle/cycles.hpp"

using namespace qc;

namespace {

const CycScalar I = CycScalar::i_power(1);

WedgeElem tower_part(const std::map<int, WedgeElem>& t, int n) {
  auto it = t.find(n);
  return it == t.end() ? WedgeElem() : it->second;
}

Subset odd_run(int start, int l) {
  Subset s;
  for (int j = 0; j < l; ++j) s.push_back(start + 2 * j);
  return s;
}

}  // namespace

TEST_CASE("link examples") {
  auto r = link_check(WedgeElem::scalar(0, 1), WedgeElem::basis(2, {1}));
  CHECK(r.verified);
  auto bad = link_check(WedgeElem::scalar(0, 1), WedgeElem::basis(2, {0}));
  CHECK_FALSE(bad.verified);
  CHECK_FALSE(bad.witness.empty());

  InfCycle one = distinguished_cycle(1, 7);
  for (int n = 1; n + 2 <= 7; n += 2) {
    CycScalar c = CycScalar::zeta_power(3) * CycScalar(5);
    CHECK(link_check(one.component(n) * c, one.component(n + 2) * c).verified);
  }
}

TEST_CASE("zero paired with a minimal cycle is a link") {
  WedgeElem vdm = WedgeElem::basis(2, {0, 1}, RationalFn(zvar(1) + zvar(2)));
  CHECK(is_minimal(vdm).ok);
  CHECK(link_check(WedgeElem(0, 1), vdm).verified);
  WedgeElem tower = WedgeElem::basis(2, {1});
  CHECK_FALSE(is_minimal(tower).ok);
  CHECK_FALSE(link_check(WedgeElem(0, 0), tower).verified);
}

TEST_CASE("link lift extraction") {
  InfCycle one = distinguished_cycle(0, 6);
  for (int n = 0; n + 2 <= 6; n += 2) {
    LinkPair lp = link_check(one.component(n), one.component(n + 2));
    REQUIRE(lp.verified);
    LinkLift ps = extract_link_lift(lp);
    CHECK(ps.l == n / 2);
    CHECK(ps.poly.degree_range(var::x(ps.l + 1)).second <= n + 1);
  }
  LinkPair first = link_check(WedgeElem::scalar(0, 1), WedgeElem::basis(2, {1}));
  CHECK(extract_link_lift(first).poly == xvar(1));

  WedgeElem vdm = WedgeElem::basis(2, {0, 1}, RationalFn(zvar(1) + zvar(2)));
  LinkLift pure = extract_link_lift(link_check(WedgeElem(0, 1), vdm));
  CHECK(pure.poly.degree_range(var::x(2)).second <= 1);
}

TEST_CASE("minimality predicates") {
  for (int k = 1; k <= 2; ++k) {
    int n = 2 * k;
    LaurentPoly c(1);
    for (int j = 1; j <= n; ++j)
      for (int jj = j + 1; jj <= n; ++jj) c *= zvar(j) + zvar(jj);
    Subset s;
    for (int a = 0; a < 2 * k; ++a) s.push_back(a);
    WedgeElem p = WedgeElem::basis(n, s, RationalFn(c));
    CHECK(is_minimal(p).ok);
    CHECK(is_weakly_minimal(p).ok);
  }
  for (int m = 0; m <= 2; ++m)
    for (int l = 1; l <= 3; ++l) {
      WedgeElem p = WedgeElem::basis(m + 2 * l, odd_run(m + 1, l));
      CHECK(is_weakly_minimal(p).ok);
      CHECK_FALSE(is_minimal(p).ok);
    }
  CHECK(is_minimal(WedgeElem::scalar(3, 1)).ok);
  CHECK(is_weakly_minimal(WedgeElem::scalar(3, 1)).ok);
}

TEST_CASE("distinguished towers") {
  InfCycle one = distinguished_cycle(0, 6);
  CHECK(one.component(0) == WedgeElem::scalar(0, 1));
  CHECK(one.component(2) == WedgeElem::basis(2, {1}));
  CHECK(one.component(4) == WedgeElem::basis(4, {1, 3}));
  CHECK(one.component(6) == WedgeElem::basis(6, {1, 3, 5}));
  for (int m = 0; m <= 3; ++m) {
    InfCycle c = distinguished_cycle(m, m + 6);
    CHECK(c.weight() == m);
    CHECK(c.reverify());
    auto d = c.degree();
    REQUIRE(d);
    mpq_class expect(m * m, 4);
    expect.canonicalize();
    CHECK(*d == expect);
    for (const auto& [n, w] : c.components()) CHECK(w.weight() == m);
  }
}

TEST_CASE("extremal relations") {
  for (int m = 0; m <= 3; ++m) {
    InfCycle c = distinguished_cycle(m, m + 6);
    InfCycle up = act_on_cycle({{ModeKind::XPlus, m + 1}}, c);
    InfCycle target = distinguished_cycle(m + 2, m + 6);
    CycScalar sign((m + 1) % 2 ? -1 : 1);
    for (const auto& [n, w] : target.components()) CHECK(up.component(n) == w * sign);
    for (int k = 0; k <= m; ++k) {
      InfCycle z = act_on_cycle({{ModeKind::XPlus, k}}, c);
      for (const auto& [n, w] : z.components()) CHECK(w.is_zero());
    }
  }
}

TEST_CASE("x+_{-1} does not kill distinguished towers") {
  InfCycle c = distinguished_cycle(0, 4);
  InfCycle r = act_on_cycle({{ModeKind::XPlus, -1}}, c);
  bool nonzero = false;
  for (const auto& [n, w] : r.components()) nonzero = nonzero || !w.is_zero();
  CHECK(nonzero);
}

TEST_CASE("x-_1 on the vacuum tower") {
  InfCycle c = distinguished_cycle(0, 4);
  InfCycle r = act_on_cycle({{ModeKind::XMinus, 1}}, c);
  CHECK(r.component(2) == WedgeElem::basis(2, {0, 1}, RationalFn(elementary(2, 1))) * I);
  CHECK(r.weight() == -2);
  CHECK(r.reverify());
}

TEST_CASE("Schur formula towers") {
  SchurReport k1 = verify_schur_formula(1, 2);
  CHECK(k1.ok());
  for (const auto& [n, s] : k1.scalars) CHECK(s == CycScalar::zeta_power(1));
  SchurReport k2 = verify_schur_formula(2, 1);
  CHECK(k2.ok());
  for (const auto& [n, s] : k2.scalars) CHECK(s == CycScalar(-1));

  WedgeElem c22 = schur_component(1, 0);
  CHECK(c22 == WedgeElem::basis(2, {0, 1}, RationalFn(elementary(2, 1))) * CycScalar::zeta_power(1));
  WedgeElem c43 = schur_component(1, 1);
  WedgeElem expect = WedgeElem::basis(4, {0, 1, 3}, RationalFn(elementary(4, 1))) +
                     WedgeElem::basis(4, {1, 2, 3}, RationalFn(elementary(4, 3))) * CycScalar(-1);
  CHECK(c43 == expect * CycScalar::zeta_power(1));
}

TEST_CASE("current towers") {
  auto one = example_tower("identity", 8);
  auto jp = example_tower("jplus", 8);
  auto jm = example_tower("jminus", 8);
  CHECK(all_links(2, jp));
  CHECK(all_links(2, jm));
  for (int n = 2; n <= 8; n += 2) {
    WedgeElem a = apply_mode({ModeKind::XPlus, -1}, tower_part(one, n));
    CHECK(tower_part(jp, n) == -a);
    WedgeElem b = apply_mode({ModeKind::XPlus, 1}, tower_part(one, n));
    CHECK(tower_part(jm, n) == -b);
  }
}

TEST_CASE("T towers are not infinite cycles") {
  for (const char* name : {"Tz", "Tzbar"}) {
    std::string witness;
    CHECK_FALSE(all_links(0, example_tower(name, 6), &witness));
    CHECK_FALSE(witness.empty());
  }
  WedgeElem lhs = example_tower("Tz", 2).at(2);
  WedgeElem rhs = apply_word(parse_word("x-1 x+1"), WedgeElem::basis(2, {1}));
  CHECK(rhs.n() == 2);
  CHECK(lhs == -(rhs * (-I)));
}

TEST_CASE("random words preserve links") {
  std::mt19937_64 rng(20261017);
  const std::vector<std::string> modes = {"x-0", "x-1", "x-2", "x+0", "x+1", "x+2", "x+-1", "x+-2",
                                          "x--1", "a1", "a2", "t1"};
  int links = 0;
  for (int trial = 0; trial < 12; ++trial) {
    int m = static_cast<int>(rng() % 2);
    int len = 1 + static_cast<int>(rng() % 3);
    Word w;
    for (int i = 0; i < len; ++i) w.push_back(GenMode::parse(modes[rng() % modes.size()]));
    InfCycle c = act_on_cycle(w, distinguished_cycle(m, 6));
    CHECK(c.reverify());
    links += std::max(0, static_cast<int>(c.components().size()) - 1);
  }
  CHECK(links > 0);
}
