#pragma once

#include "qcycle/ratfn.hpp"
#include "qcycle/symfn.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace qc {

using Subset = std::vector<int>;
uint32_t subset_mask(const Subset& s);
Subset mask_subset(uint32_t mask);

// Element of the l-th exterior power of the span of X^0..X^{n-1} over the rational functions.
// Basis vector for S = {s_1 < ... < s_l} is det[X_i^{s_j}].
class WedgeElem {
 public:
  using Terms = std::map<uint32_t, RationalFn>;

  WedgeElem() = default;
  WedgeElem(int n, int l);
  static WedgeElem scalar(int n, const RationalFn& c);  // l = 0
  static WedgeElem basis(int n, const Subset& s, const RationalFn& c = RationalFn(1));
  // polynomial in X_1 (slot var::x(1)) viewed as an element with l = 1
  static WedgeElem from_x_poly(int n, const LaurentPoly& f);
  // antisymmetric polynomial in X_1..X_l; coefficient of S read off the sorted monomial
  static WedgeElem from_antisymmetric(int n, int l, const LaurentPoly& f);

  int n() const { return n_; }
  int l() const { return l_; }
  int weight() const { return n_ - 2 * l_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RationalFn coeff(const Subset& s) const;
  RationalFn coeff_mask(uint32_t mask) const;
  void add_term(uint32_t mask, const RationalFn& c);

  WedgeElem operator-() const;
  WedgeElem& operator+=(const WedgeElem& o);
  WedgeElem& operator-=(const WedgeElem& o);
  WedgeElem& operator*=(const RationalFn& c);
  WedgeElem& operator*=(const CycScalar& c);
  friend WedgeElem operator+(WedgeElem a, const WedgeElem& b) { return a += b; }
  friend WedgeElem operator-(WedgeElem a, const WedgeElem& b) { return a -= b; }
  friend WedgeElem operator*(WedgeElem a, const RationalFn& c) { return a *= c; }
  friend WedgeElem operator*(const RationalFn& c, WedgeElem a) { return a *= c; }
  friend WedgeElem operator*(WedgeElem a, const CycScalar& c) { return a *= c; }
  friend WedgeElem operator*(const CycScalar& c, WedgeElem a) { return a *= c; }
  friend bool operator==(const WedgeElem& a, const WedgeElem& b);
  friend bool operator!=(const WedgeElem& a, const WedgeElem& b) { return !(a == b); }

  // every coefficient a Laurent polynomial
  bool has_poly_coeffs() const;
  // deformed cycle: Laurent polynomial coefficients, symmetric in z_1..z_n
  bool is_deformed_cycle() const;
  WedgeElem map_coeffs(const std::function<RationalFn(const RationalFn&)>& f) const;
  // re-home the element into a different ambient variable count
  WedgeElem with_n(int n) const;

  std::string str() const;

 private:
  int n_ = 0, l_ = 0;
  Terms terms_;
};

// sign of merging two disjoint sorted subsets
int shuffle_sign(uint32_t a, uint32_t b);
WedgeElem wedge_mul(const WedgeElem& a, const WedgeElem& b);

// Polynomial in the X slots with rational coefficients, indexed by exponent vectors.
struct ExpandedPoly {
  int vars = 0;
  std::map<std::vector<int>, RationalFn> terms;
  void add(const std::vector<int>& e, const RationalFn& c);
  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const ExpandedPoly& a, const ExpandedPoly& b);
};

ExpandedPoly expand(const WedgeElem& p);
// Skew-symmetrization of an expanded polynomial in m variables.
WedgeElem skew(int n, const ExpandedPoly& f);
// Substitute a value into one X slot (1-based); the result keeps the remaining slots in order.
ExpandedPoly specialize_X(const WedgeElem& p, int slot, const RationalFn& value);

// P(X_1..X_{l-1}, w) = sum_e w^e Q_e with Q_e in l-1 slots.
std::map<int, WedgeElem> contract_last(const WedgeElem& p);
// P(X_1..X_{l-2}, a, b) = sum_{e,f} a^e b^f R_{e,f}.
std::map<std::pair<int, int>, WedgeElem> contract_last_two(const WedgeElem& p);

struct BiGrading {
  int weight = 0;
  std::optional<int> deg0;        // set when homogeneous
  std::map<int, WedgeElem> parts;  // homogeneous decomposition otherwise
};
// z-degree of a coefficient if homogeneous in z_1..z_12 and the auxiliary z
std::optional<int> z_degree(const RationalFn& c);
BiGrading bigrade(const WedgeElem& p);

// Theta_n(x) = prod (1 - z_j x), with x any Laurent polynomial.
LaurentPoly theta(int n, const LaurentPoly& x);
LaurentPoly theta2(int n, const LaurentPoly& x1, const LaurentPoly& x2);

// Kernel series: t-power -> polynomial in X slots (X_1 for the single kernel, X_1, X_2 for the double).
using KernelSeries = std::map<int, LaurentPoly>;
KernelSeries kernel_F_series(int n, Point at, int order);
KernelSeries kernel_F2_series(int n, Point at, int order);
// The same kernels as explicit rational functions in t and the X slots.
RationalFn kernel_F(int n);
RationalFn kernel_F2(int n);

// Cached symmetric functions; inverse = true uses z_j^{-1}.
const LaurentPoly& cached_e(int n, int k, bool inverse = false);
const LaurentPoly& cached_h(int n, int k, bool inverse = false);

inline LaurentPoly xvar(int a, int k = 1) { return LaurentPoly::variable(var::x(a), k); }
inline LaurentPoly tvar(int k = 1) { return LaurentPoly::variable(var::kT, k); }
inline LaurentPoly zvar(int j, int k = 1) { return LaurentPoly::variable(var::z(j), k); }
inline LaurentPoly zaux(int k = 1) { return LaurentPoly::variable(var::kZAux, k); }

}  // namespace qc
