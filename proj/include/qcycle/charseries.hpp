#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qc {

// Polynomial or truncated power series in q with integer exponents.
using QPoly = std::map<int, mpq_class>;

QPoly qbinom(int m, int n);
// 1/(q)_n up to q^qmax; n < 0 means the infinite product
QPoly qpoch_inv(int n, int qmax);
QPoly qpoly_mul(const QPoly& a, const QPoly& b, int qmax);
// q -> 1/q
QPoly qpoly_invert(const QPoly& a);

// Truncated series in q^{1/4} and z.  Keys are (4 * q-exponent, z-exponent); terms outside
// q4 <= qmax4, |z| <= zmax are never stored.
class QZSeries {
 public:
  QZSeries() = default;
  QZSeries(int qmax4, int zmax) : qmax4_(qmax4), zmax_(zmax) {}

  int qmax4() const { return qmax4_; }
  int zmax() const { return zmax_; }
  const std::map<std::pair<int, int>, mpq_class>& terms() const { return c_; }
  mpq_class coeff(int q4, int z) const;
  void add(int q4, int z, const mpq_class& v);

  QZSeries& operator+=(const QZSeries& o);
  // product window is the smaller of the two windows
  friend QZSeries operator*(const QZSeries& a, const QZSeries& b);
  // multiply by q^{q4/4} z^z and keep the window
  QZSeries shifted(int q4, int z) const;
  QZSeries restricted(int qmax4, int zmax) const;

  std::string str() const;

 private:
  int qmax4_ = 0, zmax_ = 0;
  std::map<std::pair<int, int>, mpq_class> c_;
};

// true when both agree on every key with q4 <= qmax4 and |z| <= zmax
bool agree_on_window(const QZSeries& a, const QZSeries& b, int qmax4, int zmax, std::string* witness = nullptr);

// level one character sum_{m = i mod 2} q^{m^2/4} z^m / (q)_inf, q-exponent up to qmax4/4
QZSeries level1_char(int i, int qmax4, int zmax);
// finite character with parameter L = two_l/2; requires i = two_l mod 2
QZSeries demazure_char(int i, int two_l);

struct StabilizationReport {
  int i = 0;
  int qmax = 0, mmax = 0;
  std::vector<int> two_ls;
  bool stabilized = false;            // the last two L agree on the window
  bool matches_level1 = false;        // limit equals the full character (with 1/(q)_inf)
  bool matches_theta_only = false;    // limit equals sum q^{m^2/4} z^m without 1/(q)_inf
  int first_stable_two_l = -1;
};
StabilizationReport demazure_stabilization(int i, int qmax, int mmax, int two_l_max);

struct SeriesCheck {
  std::string name;
  bool ok = false;
  bool window_sufficient = true;
  std::string witness;
};
// sum_l (q^{l+1}z)_inf/(q)_l q^{l(l-2L)} z^l against sum_s qbinom(2L,s)|_{q->1/q} z^s
SeriesCheck verify_sum_identity(int two_l, int qmax, int zmax);

// q^{N^2/4} (q)_N^{-1} sum_l qbinom(N,l) z^{N-2l}, q-exponents up to qmax4/4
QZSeries unit_orbit_char(int N, int qmax4);
// sum over N = i mod 2, N <= n_max, of the shifted characters against the level one times finite product
SeriesCheck verify_product_formula(int two_l, int i, int qmax4, int zmax, int n_max);
// the parity label of the level one factor paired with the N = i mod 2 sum
int product_formula_level1_index(int two_l, int i);

// sum over bigrades of dim q^{N^2/4 + deg0} z^{weight}, truncated at deg0 <= D
QZSeries measured_char(const std::map<std::pair<int, int>, int>& dims, int N, int D);

}  // namespace qc
