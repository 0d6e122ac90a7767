#pragma once

#include "qcycle/linalg.hpp"
#include "qcycle/qaction.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace qc {

// Element of the Grassmann algebra on psi_1..psi_n over the rational functions.
// Key bit a-1 set means psi_a occurs; monomials are taken in increasing order.
class GrassmannElem {
 public:
  using Terms = std::map<uint32_t, RationalFn>;

  GrassmannElem() = default;
  explicit GrassmannElem(int n) : n_(n) {}
  static GrassmannElem monomial(int n, const Subset& s, const RationalFn& c = RationalFn(1));

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(uint32_t mask, const RationalFn& c);

  GrassmannElem& operator+=(const GrassmannElem& o);
  GrassmannElem& operator-=(const GrassmannElem& o);
  GrassmannElem& operator*=(const RationalFn& c);
  friend GrassmannElem operator+(GrassmannElem a, const GrassmannElem& b) { return a += b; }
  friend GrassmannElem operator-(GrassmannElem a, const GrassmannElem& b) { return a -= b; }
  friend GrassmannElem operator*(GrassmannElem a, const RationalFn& c) { return a *= c; }
  friend bool operator==(const GrassmannElem& a, const GrassmannElem& b);
  friend GrassmannElem operator*(const GrassmannElem& a, const GrassmannElem& b);

  std::string str() const;

 private:
  int n_ = 0;
  Terms terms_;
};

// Letter of a fermion word: +a is psi_a, -a is psi*_a.
using FWord = std::vector<int>;

// Operator on the Grassmann algebra: sum of normal-ordered words (all psi to the left of all psi*,
// each block increasing) with rational coefficients.
class FermionOp {
 public:
  using Terms = std::map<FWord, RationalFn>;

  FermionOp() = default;
  explicit FermionOp(int n) : n_(n) {}
  static FermionOp scalar(int n, const RationalFn& c);
  static FermionOp psi(int n, int a);
  static FermionOp psi_star(int n, int a);
  // arbitrary word, normal ordered on construction
  static FermionOp word(int n, const FWord& w, const RationalFn& c = RationalFn(1));
  // left multiplication by a Grassmann element
  static FermionOp from_grassmann(const GrassmannElem& e);

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  FermionOp& operator+=(const FermionOp& o);
  FermionOp& operator-=(const FermionOp& o);
  FermionOp& operator*=(const RationalFn& c);
  friend FermionOp operator+(FermionOp a, const FermionOp& b) { return a += b; }
  friend FermionOp operator-(FermionOp a, const FermionOp& b) { return a -= b; }
  friend FermionOp operator*(FermionOp a, const RationalFn& c) { return a *= c; }
  friend FermionOp operator*(const RationalFn& c, FermionOp a) { return a *= c; }
  friend FermionOp operator*(const FermionOp& a, const FermionOp& b);
  friend bool operator==(const FermionOp& a, const FermionOp& b);
  friend bool operator!=(const FermionOp& a, const FermionOp& b) { return !(a == b); }

  GrassmannElem apply(const GrassmannElem& e) const;
  FermionOp map_coeffs(const std::function<RationalFn(const RationalFn&)>& f) const;
  std::string str() const;

 private:
  int n_ = 0;
  Terms terms_;
};

// Normal form of a coefficient times a word.  With rng set, the reducible pair is chosen at random.
FermionOp::Terms normal_order(const FWord& w, const RationalFn& c, std::mt19937_64* rng = nullptr);

LaurentPoly g_basis(int n, int a);  // polynomial in X_1
WedgeElem grassmann_to_wedge(const GrassmannElem& e);
GrassmannElem wedge_to_grassmann(const WedgeElem& p);
// change of basis from psi-subsets of size l to X-subsets (columns indexed by psi-subsets)
RatMatrix iso_matrix(int n, int l);

// t-expanded operator series
using FermionSeries = std::map<int, FermionOp>;
FermionSeries expand_op(const FermionOp& op, Point at, int order);

// Limit half-currents as rational operators; l is the fermion number of the state acted on
// (only the psi* families depend on it).
FermionOp halfcurrent_rational(Family f, int n, int l, Point at);
FermionOp b_plus_even(int n);      // 2 b^(2)_+(t), even part, rational in t
FermionOp b_minus_even(int n);     // -beta of the above
// odd power-sum part of b_+ (at 0) or b_- (at infinity) truncated to the order
FermionSeries b_odd_series(int n, Point at, int order);
// abstract series of the generator family as computed by the oracle on states of fermion number l
FermionSeries fermion_halfcurrent(Family f, int n, int l, Point at, int order);

enum class FermionMap { Alpha, Beta };
FermionOp apply_map(FermionMap m, const FermionOp& op);
FermionOp t_operator(int n, bool inverse = false);
FermionOp sigma1(int n);
FermionOp sigma2(int n);

// Dictionary a(t) = i t d/dt b(t) + c * 2b^(2)(t) for the even modes; c is fitted.
struct CrossCheckReport {
  Family family;
  int n = 0;
  int samples = 0;
  int passed = 0;
  // oracle = scalar * qaction; slot 0 for the main series, slot 1 for the even modes of a+-
  std::map<int, CycScalar> scalars;
  bool constant = true;
  std::vector<std::string> failures;
  bool ok() const { return constant && samples == passed; }
};
// Random sparse wedge element with small integer polynomial coefficients.
WedgeElem random_wedge(int n, int l, std::mt19937_64& rng, int max_terms = 2);
CrossCheckReport cross_check(Family f, int n, int samples, int order, std::mt19937_64& rng,
                             const std::map<int, CycScalar>& expect = {});

bool kernel_identity_single(int n);
bool kernel_identity_double(int n);

// phi_a = psi_a - psi_{2l} (a < 2l), phi_{2l} = psi_{2l}; checks the two sigma decompositions
bool sigma_phi_decomposition(int l);
// multiplication by the reduced sigma_2 on 2l-2 phi generators from degree l-2 to l is injective
bool reduced_sigma2_injective(int l);

}  // namespace qc
