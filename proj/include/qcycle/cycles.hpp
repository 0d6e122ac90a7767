#pragma once

#include "qcycle/qaction.hpp"

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

namespace qc {

// Full polynomial sum_S c_S det[X_i^{s_j}] in the slots X_1..X_l; coefficients must be Laurent polynomials.
LaurentPoly to_full_poly(const WedgeElem& p);
// Sum over permutations of X_1..X_k of sign * f(permuted slots).
LaurentPoly skew_full(const LaurentPoly& f, int k);

struct LinkPair {
  WedgeElem low;   // (n, l)
  WedgeElem high;  // (n + 2, l + 1)
  bool verified = false;
  std::string witness;  // leading term of the defect when not verified
};
LinkPair link_check(const WedgeElem& low, const WedgeElem& high);

// Polynomial in X_1..X_{l+1}, z_1..z_n and the auxiliary z.
struct LinkLift {
  int n = 0, l = 0;
  LaurentPoly poly;
};
LinkLift extract_link_lift(const LinkPair& link);

struct MinimalityResult {
  bool ok = true;
  std::string witness;
};
MinimalityResult is_weakly_minimal(const WedgeElem& p);
MinimalityResult is_minimal(const WedgeElem& p);

struct LinkFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Tower (P_{n,l}) with n - 2l = weight on a finite window of n.
class InfCycle {
 public:
  InfCycle() = default;
  // verifies every consecutive pair; throws LinkFailure otherwise
  InfCycle(int weight, std::map<int, WedgeElem> components);

  int weight() const { return weight_; }
  int n_min() const { return comps_.empty() ? 0 : comps_.begin()->first; }
  int n_max() const { return comps_.empty() ? -1 : comps_.rbegin()->first; }
  const std::map<int, WedgeElem>& components() const { return comps_; }
  const WedgeElem& component(int n) const { return comps_.at(n); }
  // common value of n^2/4 + deg0 over nonzero components, when homogeneous and consistent
  std::optional<mpq_class> degree() const;
  // re-run every link certificate from the raw data
  bool reverify() const;

 private:
  int weight_ = 0;
  std::map<int, WedgeElem> comps_;
};

// components of a tower of the given weight, zero where absent, on n_min..n_max in steps of 2
std::map<int, WedgeElem> normalize_components(int weight, std::map<int, WedgeElem> comps);
// true when every consecutive pair is a link
bool all_links(int weight, const std::map<int, WedgeElem>& comps, std::string* witness = nullptr);

InfCycle distinguished_cycle(int m, int n_max);
InfCycle act_on_cycle(const Word& w, const InfCycle& p);

// closed form component (2k+2l, 2k+l) including the i^{k^2/2} prefactor
WedgeElem schur_component(int k, int l);
struct SchurReport {
  int k = 0;
  std::map<int, CycScalar> scalars;  // n -> computed / closed form
  bool proportional = true;
  bool constant = true;
  bool ok() const { return proportional && constant && !scalars.empty(); }
};
SchurReport verify_schur_formula(int k, int l_max);

// identity | jplus | jminus | Tz | Tzbar
std::map<int, WedgeElem> example_tower(const std::string& name, int n_max);
int example_tower_weight(const std::string& name);

}  // namespace qc
