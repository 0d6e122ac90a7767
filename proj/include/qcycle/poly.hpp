#pragma once

#include "qcycle/scalar.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qc {

// Fixed variable slots shared by every polynomial in the library.
// z1..z12 are the spectral variables, then the auxiliary z, t, u and the X slots.
namespace var {
constexpr int kMaxZ = 12;
constexpr int kZAux = 12;
constexpr int kT = 13;
constexpr int kU = 14;
constexpr int kMaxX = 8;
constexpr int kCount = 23;
inline int z(int j) { return j - 1; }
inline int x(int a) { return 14 + a; }
std::string name(int slot);
int from_name(const std::string& s);
bool is_laurent(int slot);
}  // namespace var

struct Mono {
  // e[kCount] caches the total degree
  std::array<int16_t, 24> e{};

  int deg() const { return e[var::kCount]; }
  int operator[](int v) const { return e[v]; }
  void set(int v, int k) {
    e[var::kCount] = static_cast<int16_t>(e[var::kCount] + k - e[v]);
    e[v] = static_cast<int16_t>(k);
  }
  Mono operator*(const Mono& o) const {
    Mono r;
    for (int i = 0; i < 24; ++i) r.e[i] = static_cast<int16_t>(e[i] + o.e[i]);
    return r;
  }
  Mono operator/(const Mono& o) const {
    Mono r;
    for (int i = 0; i < 24; ++i) r.e[i] = static_cast<int16_t>(e[i] - o.e[i]);
    return r;
  }
  bool is_one() const {
    for (int i = 0; i < var::kCount; ++i)
      if (e[i]) return false;
    return true;
  }
  bool divides(const Mono& o) const {
    for (int i = 0; i < var::kCount; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
  friend bool operator!=(const Mono& a, const Mono& b) { return a.e != b.e; }
  static Mono var_pow(int v, int k) {
    Mono m;
    m.set(v, k);
    return m;
  }
  std::size_t hash() const;
  std::string str() const;
};

// graded lexicographic; true when a is greater than b
inline bool mono_greater(const Mono& a, const Mono& b) {
  if (a.e[var::kCount] != b.e[var::kCount]) return a.e[var::kCount] > b.e[var::kCount];
  for (int i = 0; i < var::kCount; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
  return false;
}

struct MonoHash {
  std::size_t operator()(const Mono& m) const { return m.hash(); }
};

struct NonDivisible : std::runtime_error {
  explicit NonDivisible(std::string witness)
      : std::runtime_error("polynomial not divisible; remainder leading term " + witness),
        remainder_witness(std::move(witness)) {}
  std::string remainder_witness;
};

class LaurentPoly {
 public:
  using Term = std::pair<Mono, CycScalar>;

  LaurentPoly() = default;
  LaurentPoly(const CycScalar& c);  // NOLINT
  LaurentPoly(long c) : LaurentPoly(CycScalar(c)) {}  // NOLINT
  LaurentPoly(const Mono& m, const CycScalar& c);

  static LaurentPoly variable(int slot, int power = 1);
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  const Term& leading() const { return terms_.front(); }
  CycScalar constant_term() const;
  CycScalar coefficient(const Mono& m) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const CycScalar& c);
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const CycScalar& c) { return a *= c; }
  friend LaurentPoly operator*(const CycScalar& c, LaurentPoly a) { return a *= c; }
  friend LaurentPoly operator*(LaurentPoly a, long c) { return a *= CycScalar(c); }
  friend LaurentPoly operator*(long c, LaurentPoly a) { return a *= CycScalar(c); }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly mul_mono(const Mono& m) const;
  LaurentPoly pow(int k) const;

  // min and max exponent of a slot over all terms (0,0 for the zero polynomial)
  std::pair<int, int> degree_range(int slot) const;
  int total_degree_max() const;
  bool uses(int slot) const;
  // smallest exponent per slot (monomial content)
  Mono min_exponents() const;
  // coefficients with respect to one slot: exponent -> polynomial free of that slot
  std::map<int, LaurentPoly> split(int slot) const;
  // substitute slot -> +-(monomial) in place, or rename slots
  LaurentPoly map_monomials(const std::function<std::pair<Mono, bool>(const Mono&)>& f) const;
  LaurentPoly swap_slots(int a, int b) const;
  LaurentPoly negate_slot(int slot) const;
  LaurentPoly rename_slot(int from, int to) const;
  // substitute slot -> 1/slot
  LaurentPoly invert_slot(int slot) const;
  bool is_polynomial() const;

  std::string str() const;

 private:
  void normalize();  // sort and merge
  std::vector<Term> terms_;  // descending graded lex, no zeros
};

// exact quotient a / b or NonDivisible
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);
std::optional<LaurentPoly> try_exact_div(const LaurentPoly& a, const LaurentPoly& b);

// polynomial (non-Laurent) division with remainder in graded lex; only used internally
std::pair<LaurentPoly, LaurentPoly> divide_with_remainder(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly poly_arith(const LaurentPoly& a, const LaurentPoly& b, char op);

}  // namespace qc
