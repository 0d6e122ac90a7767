#pragma once

#include "qcycle/poly.hpp"

#include <map>
#include <utility>
#include <vector>

namespace qc {

// Element of the fraction field; the denominator is kept as a product of normalized factors.
class RationalFn {
 public:
  using Factor = std::pair<LaurentPoly, int>;

  RationalFn() = default;
  RationalFn(const LaurentPoly& p) : num_(p) {}  // NOLINT
  RationalFn(const CycScalar& c) : num_(c) {}  // NOLINT
  RationalFn(long c) : num_(c) {}  // NOLINT
  RationalFn(LaurentPoly num, const LaurentPoly& den);
  RationalFn(LaurentPoly num, std::vector<Factor> den);

  const LaurentPoly& num() const { return num_; }
  const std::vector<Factor>& den_factors() const { return den_; }
  LaurentPoly den() const;
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.empty(); }
  // polynomial value; throws if a denominator survives
  const LaurentPoly& poly() const;

  RationalFn operator-() const;
  RationalFn& operator+=(const RationalFn& o);
  RationalFn& operator-=(const RationalFn& o);
  RationalFn& operator*=(const RationalFn& o);
  RationalFn& operator*=(const CycScalar& c);
  RationalFn& operator/=(const RationalFn& o);
  friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
  friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
  friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
  friend RationalFn operator*(RationalFn a, const CycScalar& c) { return a *= c; }
  friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }
  friend bool operator==(const RationalFn& a, const RationalFn& b);
  friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

  RationalFn inverse() const;
  // apply a monomial-level map (slot permutations, sign flips) to numerator and factors
  RationalFn map_polys(const std::function<LaurentPoly(const LaurentPoly&)>& f) const;
  // try to cancel each denominator factor against the numerator
  void cancel();

  std::string str() const;

 private:
  void add_factor(const LaurentPoly& f, int mult);
  LaurentPoly num_;
  std::vector<Factor> den_;
};

// slot -> replacement; replacements may be rational
using Bindings = std::map<int, RationalFn>;
RationalFn substitute(const LaurentPoly& p, const Bindings& b);
RationalFn substitute(const RationalFn& f, const Bindings& b);
// common case where every replacement is a Laurent polynomial and no inverse is needed
LaurentPoly substitute_poly(const LaurentPoly& p, const std::map<int, LaurentPoly>& b);

enum class Point { Zero, Infinity };

struct NotExpandable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// coefficients of slot^k, k up to order at 0 and down to -order at infinity
std::map<int, LaurentPoly> series_expand(const RationalFn& f, int slot, Point at, int order);

}  // namespace qc
