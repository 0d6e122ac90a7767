#include <catch_amalgamated.hpp>

#include <random>

#include "qcycle/scalar.hpp"

using qc::CycScalar;

namespace {

CycScalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  mpq_class c[4];
  for (auto& x : c) {
    x = mpq_class(num(rng), den(rng));
    x.canonicalize();
  }
  return CycScalar(c[0], c[1], c[2], c[3]);
}

}  // namespace

TEST_CASE("zeta arithmetic") {
  CycScalar i = CycScalar::zeta_power(2);
  CHECK(i * i == CycScalar(-1));
  CHECK(CycScalar::zeta_power(1) * CycScalar::zeta_power(1) == i);
  CHECK((CycScalar(1) + i) / (CycScalar(1) - i) == i);
  CHECK_THROWS_AS(CycScalar(1) / CycScalar(0), qc::DivisionByZero);
}

TEST_CASE("i_power") {
  CHECK(CycScalar::i_power(0) == CycScalar(1));
  CHECK(CycScalar::i_power(2) == CycScalar(-1));
  CHECK(CycScalar::i_power(-1) == -CycScalar::zeta_power(2));
  for (int k = 0; k <= 8; ++k) CHECK((CycScalar::zeta_power(k) * CycScalar::zeta_power(8 - k)).is_one());
}

TEST_CASE("division checked against a rational linear solve") {
  // (1 - i) x = 1 + i as a 4x4 rational system in the power basis
  CycScalar a = CycScalar(1) - CycScalar::zeta_power(2);
  CycScalar b = CycScalar(1) + CycScalar::zeta_power(2);
  // multiplication matrix of a: column j = a * w^j
  mpq_class m[4][5];
  for (int j = 0; j < 4; ++j) {
    CycScalar col = a * CycScalar::zeta_power(j);
    for (int r = 0; r < 4; ++r) m[r][j] = col[r];
  }
  for (int r = 0; r < 4; ++r) m[r][4] = b[r];
  for (int c = 0; c < 4; ++c) {
    int p = c;
    while (m[p][c] == 0) ++p;
    for (int k = 0; k < 5; ++k) std::swap(m[p][k], m[c][k]);
    for (int r = 0; r < 4; ++r) {
      if (r == c || m[r][c] == 0) continue;
      mpq_class f = m[r][c] / m[c][c];
      for (int k = 0; k < 5; ++k) m[r][k] -= f * m[c][k];
    }
  }
  CycScalar x(mpq_class(m[0][4] / m[0][0]), mpq_class(m[1][4] / m[1][1]), mpq_class(m[2][4] / m[2][2]),
              mpq_class(m[3][4] / m[3][3]));
  CHECK(x == b / a);
  CHECK(x == CycScalar::zeta_power(2));
}

TEST_CASE("text round trip") {
  CycScalar s = CycScalar::parse("3/2 - w + 2*w^3");
  CHECK(s[0] == mpq_class(3, 2));
  CHECK(s[1] == -1);
  CHECK(s[3] == 2);
  CHECK(CycScalar::parse(s.str()) == s);
  CHECK(CycScalar::parse("0") == CycScalar(0));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(20240611);
  for (int it = 0; it < 1000; ++it) {
    CycScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a + b == b + a);
    if (!a.is_zero()) REQUIRE((a * a.inverse()).is_one());
    REQUIRE(CycScalar::parse(a.str()) == a);
  }
}
