#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace qc {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

// Element c0 + c1 w + c2 w^2 + c3 w^3 of Q(w), w a primitive 8th root of unity (w^4 = -1).
class CycScalar {
 public:
  CycScalar() = default;
  CycScalar(long v) { c_[0] = v; }  // NOLINT
  CycScalar(const mpq_class& v) { c_[0] = v; }  // NOLINT
  CycScalar(long num, long den);
  CycScalar(mpq_class a, mpq_class b, mpq_class c, mpq_class d);

  static CycScalar zeta_power(long k);
  static CycScalar i_power(long k) { return zeta_power(2 * k); }
  static CycScalar imag() { return zeta_power(2); }

  const mpq_class& operator[](int j) const { return c_[j]; }
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  // number of nonzero components
  int weight() const;

  CycScalar operator-() const;
  CycScalar& operator+=(const CycScalar& o);
  CycScalar& operator-=(const CycScalar& o);
  CycScalar& operator*=(const CycScalar& o);
  CycScalar& operator/=(const CycScalar& o);
  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
  friend CycScalar operator*(const CycScalar& a, const CycScalar& b);
  friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }
  friend bool operator==(const CycScalar& a, const CycScalar& b) { return a.c_ == b.c_; }
  friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

  CycScalar inverse() const;
  // image under w -> w^k, k odd
  CycScalar galois(int k) const;
  // field norm down to Q
  mpq_class norm() const;

  std::string str() const;
  static CycScalar parse(const std::string& s);

 private:
  std::array<mpq_class, 4> c_;
};

CycScalar cyc_arith(const CycScalar& a, const CycScalar& b, char op);

}  // namespace qc
