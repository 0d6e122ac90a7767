#include "qcycle/charseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qc {

namespace {

void trim(QPoly& p) {
  for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
}

// (z; q)-type product prod_{j >= 1} (1 - q^{a+j} z) on a window, as a two-variable table
QZSeries shifted_z_pochhammer(int a, int qmax, int zmax) {
  QZSeries r(4 * qmax, zmax);
  r.add(0, 0, 1);
  for (int j = 1; a + j <= qmax; ++j) {
    QZSeries f(4 * qmax, zmax);
    f.add(0, 0, 1);
    f.add(4 * (a + j), 1, -1);
    r = r * f;
  }
  return r;
}

}  // namespace

QPoly qbinom(int m, int n) {
  QPoly out;
  if (n < 0 || m < n) return out;
  // Pascal rule: [m,n] = [m-1,n-1] + q^n [m-1,n]
  std::vector<QPoly> row{QPoly{{0, 1}}};
  for (int r = 1; r <= m; ++r) {
    std::vector<QPoly> next(r + 1);
    for (int k = 0; k <= r; ++k) {
      if (k >= 1) next[k] = row[k - 1];
      if (k < r)
        for (const auto& [e, c] : row[k]) next[k][e + k] += c;
      trim(next[k]);
    }
    row = std::move(next);
  }
  return row[n];
}

QPoly qpoch_inv(int n, int qmax) {
  QPoly p{{0, 1}};
  int top = n < 0 ? qmax : std::min(n, qmax);
  for (int j = 1; j <= top; ++j)
    // multiply by 1/(1-q^j) = sum_k q^{jk}
    for (int e = j; e <= qmax; ++e) {
      auto it = p.find(e - j);
      if (it != p.end()) p[e] += it->second;
    }
  trim(p);
  return p;
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b, int qmax) {
  QPoly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b)
      if (ea + eb <= qmax) r[ea + eb] += ca * cb;
  trim(r);
  return r;
}

QPoly qpoly_invert(const QPoly& a) {
  QPoly r;
  for (const auto& [e, c] : a) r[-e] = c;
  return r;
}

mpq_class QZSeries::coeff(int q4, int z) const {
  auto it = c_.find({q4, z});
  return it == c_.end() ? mpq_class(0) : it->second;
}

void QZSeries::add(int q4, int z, const mpq_class& v) {
  if (q4 > qmax4_ || z > zmax_ || z < -zmax_ || v == 0) return;
  auto [it, fresh] = c_.emplace(std::make_pair(q4, z), v);
  if (!fresh) {
    it->second += v;
    if (it->second == 0) c_.erase(it);
  }
}

QZSeries& QZSeries::operator+=(const QZSeries& o) {
  qmax4_ = std::min(qmax4_, o.qmax4_);
  zmax_ = std::min(zmax_, o.zmax_);
  *this = restricted(qmax4_, zmax_);
  for (const auto& [k, v] : o.c_) add(k.first, k.second, v);
  return *this;
}

QZSeries operator*(const QZSeries& a, const QZSeries& b) {
  QZSeries r(std::min(a.qmax4_, b.qmax4_), std::min(a.zmax_, b.zmax_));
  for (const auto& [ka, va] : a.c_)
    for (const auto& [kb, vb] : b.c_) r.add(ka.first + kb.first, ka.second + kb.second, va * vb);
  return r;
}

QZSeries QZSeries::shifted(int q4, int z) const {
  QZSeries r(qmax4_, zmax_);
  for (const auto& [k, v] : c_) r.add(k.first + q4, k.second + z, v);
  return r;
}

QZSeries QZSeries::restricted(int qmax4, int zmax) const {
  QZSeries r(qmax4, zmax);
  for (const auto& [k, v] : c_) r.add(k.first, k.second, v);
  return r;
}

std::string QZSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : c_) {
    if (!first) os << " + ";
    first = false;
    os << v.get_str() << "*q^(" << k.first << "/4)*z^" << k.second;
  }
  if (first) os << "0";
  return os.str();
}

bool agree_on_window(const QZSeries& a, const QZSeries& b, int qmax4, int zmax, std::string* witness) {
  auto check = [&](const QZSeries& x, const QZSeries& y) {
    for (const auto& [k, v] : x.terms()) {
      if (k.first > qmax4 || std::abs(k.second) > zmax) continue;
      if (y.coeff(k.first, k.second) != v) {
        if (witness)
          *witness = "q^(" + std::to_string(k.first) + "/4) z^" + std::to_string(k.second) + ": " + v.get_str() +
                     " vs " + y.coeff(k.first, k.second).get_str();
        return false;
      }
    }
    return true;
  };
  return check(a, b) && check(b, a);
}

QZSeries level1_char(int i, int qmax4, int zmax) {
  QZSeries theta(qmax4, zmax);
  for (int m = -zmax; m <= zmax; ++m)
    if (((m % 2) + 2) % 2 == i && m * m <= qmax4) theta.add(m * m, m, 1);
  QZSeries inv(qmax4, zmax);
  for (const auto& [e, c] : qpoch_inv(-1, qmax4 / 4)) inv.add(4 * e, 0, c);
  return theta * inv;
}

QZSeries demazure_char(int i, int two_l) {
  if (two_l < 0 || two_l % 2 != i) throw std::invalid_argument("finite character: parity of i and 2L differ");
  QZSeries r(1 << 20, 1 << 10);
  for (int m = -two_l; m <= two_l; m += 2)
    for (const auto& [e, c] : qbinom(two_l, (two_l + m) / 2)) r.add(4 * e + m * m, m, c);
  return r;
}

StabilizationReport demazure_stabilization(int i, int qmax, int mmax, int two_l_max) {
  StabilizationReport rep;
  rep.i = i;
  rep.qmax = qmax;
  rep.mmax = mmax;
  QZSeries full = level1_char(i, 4 * qmax, mmax);
  QZSeries theta(4 * qmax, mmax);
  for (int m = -mmax; m <= mmax; ++m)
    if (((m % 2) + 2) % 2 == i && m * m <= 4 * qmax) theta.add(m * m, m, 1);
  std::vector<QZSeries> seen;
  for (int two_l = i; two_l <= two_l_max; two_l += 2) {
    rep.two_ls.push_back(two_l);
    seen.push_back(demazure_char(i, two_l).restricted(4 * qmax, mmax));
  }
  if (seen.size() >= 2) {
    const QZSeries& last = seen.back();
    rep.stabilized = agree_on_window(seen[seen.size() - 2], last, 4 * qmax, mmax);
    for (size_t k = 0; k < seen.size(); ++k) {
      bool same = true;
      for (size_t kk = k; kk < seen.size() && same; ++kk) same = agree_on_window(seen[kk], last, 4 * qmax, mmax);
      if (same) {
        rep.first_stable_two_l = rep.two_ls[k];
        break;
      }
    }
    rep.matches_level1 = agree_on_window(last, full, 4 * qmax, mmax);
    rep.matches_theta_only = agree_on_window(last, theta, 4 * qmax, mmax);
  }
  return rep;
}

SeriesCheck verify_sum_identity(int two_l, int qmax, int zmax) {
  SeriesCheck rep;
  rep.name = "sum-identity 2L=" + std::to_string(two_l);
  QZSeries lhs(4 * qmax, zmax);
  for (int l = 0; l <= zmax; ++l) {
    int base = l * l - l * two_l;  // q^{l(l-2L)}
    int room = qmax - base;         // the rest of the term has nonnegative q-degree
    if (room < 0) continue;
    QZSeries term = shifted_z_pochhammer(l, room, zmax - l);
    QZSeries inv(4 * room, zmax - l);
    for (const auto& [e, c] : qpoch_inv(l, room)) inv.add(4 * e, 0, c);
    term = term * inv;
    for (const auto& [k, v] : term.terms()) lhs.add(k.first + 4 * base, k.second + l, v);
  }
  QZSeries rhs(4 * qmax, zmax);
  for (int s = 0; s <= two_l; ++s)
    for (const auto& [e, c] : qpoly_invert(qbinom(two_l, s))) rhs.add(4 * e, s, c);
  rep.ok = agree_on_window(lhs, rhs, 4 * qmax, zmax, &rep.witness);
  return rep;
}

QZSeries unit_orbit_char(int N, int qmax4) {
  QZSeries r(qmax4, N);
  int room = (qmax4 - N * N) / 4;
  if (qmax4 < N * N) return r;
  QPoly inv = qpoch_inv(N, room);
  for (int l = 0; l <= N; ++l)
    for (const auto& [e, c] : qpoly_mul(inv, qbinom(N, l), room)) r.add(N * N + 4 * e, N - 2 * l, c);
  return r;
}

int product_formula_level1_index(int two_l, int i) { return (i + two_l) % 2; }

SeriesCheck verify_product_formula(int two_l, int i, int qmax4, int zmax, int n_max) {
  SeriesCheck rep;
  rep.name = "product-formula 2L=" + std::to_string(two_l) + " i=" + std::to_string(i);
  // in the q -> 1/q form: sum_N q^{N^2/4 - N L} ch(W_N) against chi_{i'}(q,z) chi_j(1/q,z;L)
  QZSeries lhs(qmax4, zmax);
  for (int N = i; N <= n_max; N += 2) {
    int shift4 = -2 * N * two_l;  // 4 * (-N L)
    QZSeries t = unit_orbit_char(N, qmax4 - shift4);
    for (const auto& [k, v] : t.terms()) lhs.add(k.first + shift4, k.second, v);
  }
  // first omitted N whose lowest term could land in the window
  for (int N = n_max + 1; N <= n_max + 2 + 2 * two_l + 8; ++N) {
    if (N % 2 != i) continue;
    if (N * N - 2 * N * two_l <= qmax4 && (N % 2) <= zmax) rep.window_sufficient = false;
  }
  int j = two_l % 2;
  QZSeries fin = demazure_char(j, two_l);
  QZSeries fin_inv(1 << 20, 1 << 10);
  for (const auto& [k, v] : fin.terms()) fin_inv.add(-k.first, k.second, v);
  // lowest q-power of the finite factor is -L^2
  QZSeries chi = level1_char(product_formula_level1_index(two_l, i), qmax4 + two_l * two_l, zmax + two_l);
  QZSeries rhs = (chi * fin_inv).restricted(qmax4, zmax);
  rep.ok = agree_on_window(lhs, rhs, qmax4, zmax, &rep.witness) && rep.window_sufficient;
  return rep;
}

QZSeries measured_char(const std::map<std::pair<int, int>, int>& dims, int N, int D) {
  QZSeries r(N * N + 4 * D, N);
  for (const auto& [bg, d] : dims)
    if (bg.first <= D) r.add(N * N + 4 * bg.first, bg.second, d);
  return r;
}

}  // namespace qc
