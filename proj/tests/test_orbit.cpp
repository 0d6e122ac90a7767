#include <catch_amalgamated.hpp>

#include <random>

#include "qcycle/fermion.hpp"
#include "qcycle/orbit.hpp"

using namespace qc;

namespace {

const CycScalar I = CycScalar::i_power(1);

bool same_basis(const GradedComponentBasis& a, const GradedComponentBasis& b) {
  if (a.dim() != b.dim()) return false;
  for (size_t k = 0; k < a.dim(); ++k)
    if (a.basis[k] != b.basis[k]) return false;
  return true;
}

}  // namespace

TEST_CASE("null span at l = 1 is the x0- line") {
  for (int n = 2; n <= 4; ++n) {
    NullSpan ns = null_span(n, 1);
    REQUIRE(ns.generators.size() == 1);
    WedgeElem line(n, 1);
    for (int a = 1; a <= n; ++a)
      line += WedgeElem::from_x_poly(n, g_basis(n, a)) * CycScalar((n - a) % 2 ? -1 : 1);
    CHECK(ns.generators[0] == line);
    CHECK(ns.rank == 1);
  }
  // n = 2: the line is spanned by (z1 + z2) X^1
  CHECK(in_null_span(null_span(2, 1), WedgeElem::basis(2, {1})));
  CHECK_FALSE(in_null_span(null_span(2, 1), WedgeElem::basis(2, {0})));
}

TEST_CASE("x0- images are null") {
  std::mt19937_64 rng(7);
  for (int n = 2; n <= 4; ++n)
    for (int l = 0; l + 1 <= n && l <= 2; ++l) {
      NullSpan ns = null_span(n, l + 1);
      for (int s = 0; s < 3; ++s) {
        WedgeElem p = random_wedge(n, l, rng);
        CHECK(in_null_span(ns, apply_mode({ModeKind::XMinus, 0}, p)));
        if (l + 2 <= n) CHECK(in_null_span(null_span(n, l + 2), apply_mode({ModeKind::XMinus2, 0}, p)));
      }
    }
}

TEST_CASE("vanishing at zero lies in the null span") {
  CHECK(vanishing_at_zero_in_null_span(1));
  CHECK(vanishing_at_zero_in_null_span(2));
}

TEST_CASE("null subspace is independent of generator order") {
  std::mt19937_64 rng(11);
  for (int deg0 = -1; deg0 <= 1; ++deg0) {
    GradedComponentBasis a = null_subspace(4, 2, deg0);
    GradedComponentBasis b = null_subspace(4, 2, deg0, &rng);
    CHECK(same_basis(a, b));
    for (const auto& w : a.basis) {
      CHECK(w.is_deformed_cycle());
      CHECK(in_null_span(null_span(4, 2), w));
    }
  }
  GradedComponentBasis low = null_subspace(2, 1, 0);
  REQUIRE(low.dim() == 1);
  CHECK(low.basis[0] == WedgeElem::basis(2, {1}, RationalFn(elementary(2, 1))));
}

TEST_CASE("membership modulo null") {
  WedgeElem p = WedgeElem::basis(3, {0, 2}, RationalFn(elementary(3, 2)));
  ModNullResult self = member_mod_null(p, p);
  CHECK(self.member);
  for (const auto& c : self.combination) CHECK(c.is_zero());
  WedgeElem q = p + apply_mode({ModeKind::XMinus, 0}, WedgeElem::basis(3, {1}, RationalFn(zvar(1) + zvar(2) + zvar(3))));
  CHECK(member_mod_null(q, p).member);
  CHECK_FALSE(member_mod_null(WedgeElem::basis(2, {0}), WedgeElem(2, 1)).member);
}

TEST_CASE("energy momentum towers modulo null") {
  auto one = example_tower("identity", 4);
  std::map<int, WedgeElem> hol, anti;
  for (const auto& [n, w] : one) {
    if (n == 0) continue;
    hol[n] = apply_word(parse_word("x-1 x+1"), w);
    anti[n] = apply_word(parse_word("x+-1 x--1"), w);
  }
  auto tz = example_tower("Tz", 4);
  auto tzb = example_tower("Tzbar", 4);
  CHECK(hol.at(2) == WedgeElem::basis(2, {0}, RationalFn(elementary(2, 1))) * (-I));
  for (int n = 2; n <= 4; n += 2) {
    CHECK(fit_scalar_mod_null(tz.at(n), hol.at(n)) == I);
    CHECK(fit_scalar_mod_null(tzb.at(n), anti.at(n)) == I);
  }
  TowerModNull plus = compare_mod_null(tz, hol, I);
  CHECK(plus.ok());
  CHECK(plus.exact.at(2));
  CHECK_FALSE(plus.exact.at(4));
  CHECK(compare_mod_null(tzb, anti, I).ok());
  CHECK_FALSE(compare_mod_null(tz, hol, -I).ok());
}

TEST_CASE("orbit of the unit element") {
  OrbitReport w0 = generate_W(0, 4);
  REQUIRE(w0.dims.size() == 1);
  CHECK(w0.dims.begin()->second == 1);

  OrbitReport w1 = generate_W(1, 4);
  CHECK(w1.complete);
  for (int d = 0; d <= 4; ++d) {
    CHECK(w1.dims[{d, 1}] == 1);
    CHECK(w1.dims[{d, -1}] == 1);
  }
  OrbitReport w2 = generate_W(2, 4);
  const int zero_weight[] = {1, 2, 3, 4, 5};
  const int side[] = {1, 1, 2, 2, 3};
  for (int d = 0; d <= 4; ++d) {
    CHECK(w2.dims[{d, 0}] == zero_weight[d]);
    CHECK(w2.dims[{d, 2}] == side[d]);
    CHECK(w2.dims[{d, -2}] == side[d]);
  }
  OrbitReport small = generate_W(2, 2);
  for (const auto& [bg, d] : small.dims) CHECK(w2.dims[bg] == d);
}

TEST_CASE("minimal cycles lift to towers") {
  auto [w, sign] = extremal_word(2);
  CHECK(word_str(w) == "x+1");
  CHECK(sign == CycScalar(-1));
  auto [w3, s3] = extremal_word(3);
  CHECK(word_str(w3) == "x+2");
  CHECK(s3 == CycScalar(1));
  for (int N = 0; N <= 2; ++N) {
    LiftReport r = verify_grW_iso(N, 3);
    CHECK(r.ok());
    for (const auto& f : r.failures) UNSCOPED_INFO(f);
  }
}
