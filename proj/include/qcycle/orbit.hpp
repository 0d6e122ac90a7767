#pragma once

#include "qcycle/cycles.hpp"
#include "qcycle/linalg.hpp"

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace qc {

// Coordinates of wedge elements with Laurent polynomial coefficients: (subset mask, z-monomial) -> index.
class CoordIndex {
 public:
  SparseVec encode(const WedgeElem& p);
  // only reads existing coordinates; nullopt if p uses a new one
  std::optional<SparseVec> encode_existing(const WedgeElem& p) const;
  WedgeElem decode(int n, int l, const SparseVec& v) const;
  int size() const { return static_cast<int>(keys_.size()); }

 private:
  struct KeyLess {
    bool operator()(const std::pair<uint32_t, Mono>& a, const std::pair<uint32_t, Mono>& b) const {
      if (a.first != b.first) return a.first < b.first;
      return a.second.e < b.second.e;
    }
  };
  std::map<std::pair<uint32_t, Mono>, int, KeyLess> index_;
  std::vector<std::pair<uint32_t, Mono>> keys_;
};

// Basis of one bigraded piece, stored canonically.
struct GradedComponentBasis {
  int n = 0, l = 0;
  int deg0 = 0;
  int weight() const { return n - 2 * l; }
  std::vector<WedgeElem> basis;  // reduced echelon order
  std::size_t dim() const { return basis.size(); }
};

// The span over K_n of x0-.A_{n,l-1} and (x0-)^(2).A_{n,l-2}, realized through Sigma_1 and Sigma_2.
struct NullSpan {
  int n = 0, l = 0;
  std::vector<WedgeElem> generators;
  RatMatrix matrix;  // column j = coordinates of generators[j] in the X^S basis
  int rank = 0;
};
// shuffle_rng permutes the generator order (for order-independence checks)
NullSpan null_span(int n, int l, std::mt19937_64* shuffle_rng = nullptr);
bool in_null_span(const NullSpan& ns, const WedgeElem& p);

// elements of the null span with symmetric polynomial coefficients of the given bidegree
GradedComponentBasis null_subspace(int n, int l, int deg0, std::mt19937_64* shuffle_rng = nullptr);

struct ModNullResult {
  bool member = false;
  std::vector<RationalFn> combination;  // coefficients on NullSpan::generators
  std::vector<WedgeElem> generators;
};
ModNullResult member_mod_null(const WedgeElem& p, const WedgeElem& target);

// {P in A_{2l,l} : P(X_1..X_{l-1},0)=0} lies in the null span.
bool vanishing_at_zero_in_null_span(int l);

// Scalar c with lhs - c*rhs in the null span at every component, if one exists.
struct TowerModNull {
  std::map<int, bool> exact;        // n -> lhs == c*rhs with the reported scalar
  std::map<int, bool> member;       // n -> lhs - c*rhs in the null span
  std::optional<CycScalar> scalar;  // c
  bool ok() const;
};
TowerModNull compare_mod_null(const std::map<int, WedgeElem>& lhs, const std::map<int, WedgeElem>& rhs,
                              const CycScalar& c);
// the c making lhs - c*rhs null at the lowest nonzero component, when lhs, rhs are collinear there mod null
std::optional<CycScalar> fit_scalar_mod_null(const WedgeElem& lhs, const WedgeElem& rhs);

struct Bigrade {
  int deg0 = 0, weight = 0;
  friend bool operator<(const Bigrade& a, const Bigrade& b) {
    return a.deg0 != b.deg0 ? a.deg0 < b.deg0 : a.weight < b.weight;
  }
};

struct OrbitElement {
  Word word;  // element = word . 1
  WedgeElem value;
};

struct OrbitReport {
  int N = 0, D = 0, K = 0;
  std::map<Bigrade, int> dims;
  std::map<Bigrade, std::vector<OrbitElement>> spanning;
  bool complete = true;  // false when the mode cutoff is below the degree cutoff
  int rounds = 0;
};
// generator modes used for the orbit of the unit element
std::vector<GenMode> positive_generators(int K);
OrbitReport generate_W(int N, int D, int K = -1);

struct LiftReport {
  int N = 0, D = 0;
  int checked = 0, passed = 0;
  std::vector<std::string> failures;
  bool ok() const { return checked > 0 && checked == passed; }
};
// word carrying 1_i to 1_N through the extremal relations, with its sign folded into the scalar
std::pair<Word, CycScalar> extremal_word(int N);
LiftReport verify_grW_iso(int N, int D);

}  // namespace qc
