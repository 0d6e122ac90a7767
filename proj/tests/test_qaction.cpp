#include <catch_amalgamated.hpp>

#include <random>

#include "qcycle/qaction.hpp"

using namespace qc;

namespace {

const CycScalar I = CycScalar::i_power(1);

WedgeElem one(int n) { return WedgeElem::scalar(n, RationalFn(1)); }

WedgeElem random_elem(std::mt19937_64& rng, int n, int l, int terms = 2) {
  WedgeElem p(n, l);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    std::shuffle(all.begin(), all.end(), rng);
    Subset s(all.begin(), all.begin() + l);
    std::sort(s.begin(), s.end());
    LaurentPoly c = LaurentPoly(static_cast<long>(rng() % 5) - 2) + zvar(1 + rng() % n) * CycScalar(1 + rng() % 3);
    if (rng() % 2) c *= zvar(1 + rng() % n, -1);
    p += WedgeElem::basis(n, s, RationalFn(c));
  }
  return p;
}

}  // namespace

TEST_CASE("single modes on small inputs") {
  TruncSeries s = act_series(Family::XMinus, one(2), Point::Zero, 1);
  CHECK(s.coeffs.at(1) == WedgeElem::basis(2, {0}, RationalFn(elementary(2, 1))));
  TruncSeries sp = act_series(Family::XPlus, WedgeElem::basis(1, {0}), Point::Zero, 3);
  for (int k = 0; k <= 3; ++k) CHECK(sp.coeffs.at(k) == WedgeElem::scalar(1, RationalFn(zvar(1, k))));
  CHECK(act_series(Family::XPlus, one(3), Point::Zero, 3).coeffs.empty());
  CHECK(act_series(Family::XPlus2, WedgeElem::basis(3, {1}), Point::Zero, 3).coeffs.empty());
  for (int n = 1; n <= 4; ++n) {
    TruncSeries a = act_series(Family::APlus, one(n), Point::Zero, 4);
    for (int m = 1; m <= 4; ++m) CHECK(a.abstract_coeff(m) == one(n) * RationalFn(power_sum(n, m)));
    TruncSeries am = act_series(Family::AMinus, one(n), Point::Infinity, 3);
    for (int m = 1; m <= 3; ++m) CHECK(am.abstract_coeff(-m) == one(n) * RationalFn(power_sum(n, -m)));
  }
  CHECK(apply_mode(GenMode::parse("x-1"), WedgeElem::basis(2, {1})) ==
        WedgeElem::basis(2, {0, 1}, RationalFn(elementary(2, 1))) * I);
  CHECK(apply_mode(GenMode::parse("a3"), one(3)) == one(3) * RationalFn(power_sum(3, 3)));
  CHECK(apply_mode(GenMode::parse("x+0"), WedgeElem::basis(1, {0})) == one(1));
  CHECK_THROWS(mode_extract(act_series(Family::XMinus2, one(3), Point::Zero, 2), 1));
  CHECK_THROWS(mode_extract(act_series(Family::XMinus, one(3), Point::Zero, 1), 2));
}

TEST_CASE("odd a-modes are multiplication by power sums") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 10; ++it) {
    int n = 2 + rng() % 3, l = 1 + rng() % (n - 1);
    WedgeElem p = random_elem(rng, n, l);
    for (int m : {1, 3, -1, -3}) REQUIRE(apply_mode({ModeKind::ATilde, m}, p) == p * RationalFn(power_sum(n, m)));
  }
}

TEST_CASE("word composition") {
  std::mt19937_64 rng(19);
  WedgeElem p = random_elem(rng, 3, 1);
  CHECK(apply_word(parse_word("t1 t1^-1"), p) == p);
  WedgeElem r = apply_word(parse_word("x-1 x+1"), WedgeElem::basis(2, {1}));
  CHECK(r == WedgeElem::basis(2, {0}, RationalFn(elementary(2, 1))) * -I);
  CHECK(word_str(parse_word("x-^2_0 a-2 x+^2c_3")) == "x-^2_0 a-2 x+^2c_3");
}

TEST_CASE("series coefficients are linear over the rational functions") {
  std::mt19937_64 rng(23);
  for (Family f : {Family::XMinus, Family::XMinus2, Family::XPlus, Family::XPlus2, Family::APlus, Family::AMinus}) {
    for (Point at : {Point::Zero, Point::Infinity}) {
      if (f == Family::APlus && at == Point::Infinity) continue;
      if (f == Family::AMinus && at == Point::Zero) continue;
      int n = 3, l = (f == Family::XPlus2) ? 2 : 1;
      WedgeElem p = random_elem(rng, n, l);
      RationalFn g(zvar(1) + zvar(2, 2), zvar(3) + 1);
      TruncSeries a = act_series(f, p * g, at, 2), b = act_series(f, p, at, 2);
      for (int k = a.k_min(); k <= a.k_max(); ++k) REQUIRE(a.abstract_coeff(k) == b.abstract_coeff(k) * g);
      for (auto& [k, c] : b.coeffs) REQUIRE(c.weight() == p.weight() - 2 * (target_l(f, l) - l));
    }
  }
}

TEST_CASE("relation spot checks") {
  std::mt19937_64 rng(29);
  std::vector<WedgeElem> samples;
  for (int it = 0; it < 4; ++it) samples.push_back(random_elem(rng, 3, 1));
  samples.push_back(random_elem(rng, 2, 1));
  samples.push_back(random_elem(rng, 4, 2));
  for (std::string rel : {"t1-conjugation", "a-commutativity", "a-x-bracket", "ex-bracket-diagonal"}) {
    SpotReport rep = relation_spotcheck(rel, samples);
    INFO(rel << " failures: " << (rep.failures.empty() ? "" : rep.failures.front()));
    CHECK(rep.ok());
  }
  WedgeElem p = random_elem(rng, 3, 1);
  WedgeElem lhs = apply_word(parse_word("a2 x-0"), p) - apply_word(parse_word("x-0 a2"), p);
  CHECK(lhs == apply_word(parse_word("x-2"), p) * CycScalar(2));
}
