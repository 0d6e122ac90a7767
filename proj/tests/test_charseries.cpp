#include <catch_amalgamated.hpp>

#include "qcycle/charseries.hpp"
#include "qcycle/orbit.hpp"

using namespace qc;

TEST_CASE("q-binomials and Pochhammer inverses") {
  CHECK(qbinom(2, 1) == QPoly{{0, 1}, {1, 1}});
  CHECK(qbinom(1, 2).empty());
  CHECK(qbinom(4, 2) == QPoly{{0, 1}, {1, 1}, {2, 2}, {3, 1}, {4, 1}});
  CHECK(qpoch_inv(-1, 5) == QPoly{{0, 1}, {1, 1}, {2, 2}, {3, 3}, {4, 5}, {5, 7}});
  CHECK(qpoch_inv(1, 3) == QPoly{{0, 1}, {1, 1}, {2, 1}, {3, 1}});
}

TEST_CASE("level one characters") {
  QZSeries c0 = level1_char(0, 12, 4);
  for (int e = 0; e <= 3; ++e) CHECK(c0.coeff(4 * e, 0) == QPoly{{0, 1}, {1, 1}, {2, 2}, {3, 3}}.at(e));
  CHECK(c0.coeff(0, 2) == 0);
  CHECK(c0.coeff(4, 2) == 1);
  QZSeries c1 = level1_char(1, 12, 4);
  CHECK(c1.coeff(1, 1) == 1);
  CHECK(c1.coeff(1, -1) == 1);
  CHECK(c1.coeff(0, 1) == 0);
}

TEST_CASE("finite characters") {
  QZSeries half = demazure_char(1, 1);
  CHECK(half.terms().size() == 2);
  CHECK(half.coeff(1, 1) == 1);
  CHECK(half.coeff(1, -1) == 1);
  QZSeries one = demazure_char(0, 2);
  CHECK(one.coeff(0, 0) == 1);
  CHECK(one.coeff(4, 0) == 1);
  CHECK(one.coeff(4, 2) == 1);
  CHECK(one.coeff(4, -2) == 1);
  CHECK(one.terms().size() == 4);
  CHECK_THROWS(demazure_char(0, 1));
  for (int two_l = 0; two_l <= 6; two_l += 2) {
    QZSeries d = demazure_char(0, two_l);
    for (const auto& [k, v] : d.terms()) CHECK(std::abs(k.second) <= two_l);
  }
}

TEST_CASE("finite characters stabilize to the level one character") {
  for (int i = 0; i <= 1; ++i) {
    StabilizationReport r = demazure_stabilization(i, 3, 2, 16);
    CHECK(r.stabilized);
    CHECK(r.matches_level1);
    CHECK_FALSE(r.matches_theta_only);
  }
}

TEST_CASE("sum identity") {
  for (int two_l = 0; two_l <= 4; ++two_l) {
    SeriesCheck r = verify_sum_identity(two_l, 8, 6);
    CHECK(r.ok);
    UNSCOPED_INFO(r.witness);
  }
}

TEST_CASE("per-N characters") {
  QZSeries c1 = unit_orbit_char(1, 1 + 16);
  for (int e = 0; e <= 4; ++e) {
    CHECK(c1.coeff(1 + 4 * e, 1) == 1);
    CHECK(c1.coeff(1 + 4 * e, -1) == 1);
  }
  QZSeries c0 = unit_orbit_char(0, 16);
  CHECK(c0.terms().size() == 1);
}

TEST_CASE("product formula") {
  CHECK(product_formula_level1_index(0, 0) == 0);
  CHECK(product_formula_level1_index(1, 1) == 0);
  for (auto [two_l, i] : {std::pair{0, 0}, {2, 0}, {1, 1}, {0, 1}, {1, 0}}) {
    SeriesCheck r = verify_product_formula(two_l, i, 24, 4, 6);
    CHECK(r.window_sufficient);
    CHECK(r.ok);
  }
  SeriesCheck short_window = verify_product_formula(2, 1, 24, 4, 5);
  CHECK_FALSE(short_window.window_sufficient);
}

TEST_CASE("measured characters") {
  for (int N = 0; N <= 2; ++N) {
    OrbitReport o = generate_W(N, 4);
    std::map<std::pair<int, int>, int> dims;
    for (const auto& [b, d] : o.dims) dims[{b.deg0, b.weight}] = d;
    std::string w;
    CHECK(agree_on_window(measured_char(dims, N, 4), unit_orbit_char(N, N * N + 16), N * N + 16, N, &w));
    UNSCOPED_INFO(w);
  }
}
