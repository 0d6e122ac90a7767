#include "qcycle/qaction.hpp"

#include <bit>
#include <mutex>
#include <sstream>

namespace qc {

std::string family_name(Family f) {
  switch (f) {
    case Family::XMinus: return "xminus";
    case Family::XMinus2: return "xminus2";
    case Family::XPlus: return "xplus";
    case Family::XPlus2: return "xplus2";
    case Family::APlus: return "aplus";
    case Family::AMinus: return "aminus";
  }
  return "?";
}

Family family_from_name(const std::string& s) {
  for (Family f : {Family::XMinus, Family::XMinus2, Family::XPlus, Family::XPlus2, Family::APlus, Family::AMinus})
    if (family_name(f) == s) return f;
  throw std::invalid_argument("unknown family " + s);
}

CycScalar family_prefactor(Family f, Point at, int n) {
  bool inf = at == Point::Infinity;
  switch (f) {
    case Family::XMinus: return CycScalar(inf ? -1 : 1);
    case Family::XMinus2: return CycScalar::i_power(3) * CycScalar(4);  // -4i
    case Family::XPlus: {
      CycScalar c = CycScalar::i_power(1 - n);
      return inf ? -c : c;
    }
    case Family::XPlus2: return CycScalar::i_power(1) * CycScalar(n % 2 ? 1 : -1);
    case Family::APlus:
    case Family::AMinus: return CycScalar(1);
  }
  return CycScalar(1);
}

int target_l(Family f, int l) {
  switch (f) {
    case Family::XMinus: return l + 1;
    case Family::XMinus2: return l + 2;
    case Family::XPlus: return l - 1;
    case Family::XPlus2: return l - 2;
    default: return l;
  }
}

int TruncSeries::k_min() const {
  if (point == Point::Zero) {
    switch (family) {
      case Family::XMinus:
      case Family::APlus: return 1;
      case Family::XMinus2: return 1;
      default: return 0;
    }
  }
  return -order;
}

int TruncSeries::k_max() const {
  if (point == Point::Zero) return order;
  switch (family) {
    case Family::XPlus:
    case Family::XPlus2:
    case Family::AMinus: return -1;
    default: return 0;
  }
}

WedgeElem TruncSeries::abstract_coeff(int k) const {
  if (k < k_min() || k > k_max()) throw std::out_of_range("series coefficient outside the family range");
  auto it = coeffs.find(k);
  if (it == coeffs.end()) return WedgeElem(n, std::max(0, target_l(family, l)));
  return it->second * prefactor.inverse();
}

namespace {

LaurentPoly e_inv_monomial(int n) {
  Mono m;
  for (int j = 1; j <= n; ++j) m.set(var::z(j), -1);
  return LaurentPoly(m, CycScalar(1));
}

// 1/Theta_n(t) coefficients: at 0 t^k -> h_k; at infinity t^{-n-k} -> (-1)^n e_n^{-1} h_k(z^{-1})
std::map<int, LaurentPoly> inv_theta_series(int n, Point at, int order) {
  std::map<int, LaurentPoly> r;
  if (at == Point::Zero) {
    for (int k = 0; k <= order; ++k) r[k] = cached_h(n, k);
  } else {
    LaurentPoly pre = e_inv_monomial(n) * CycScalar(n % 2 ? -1 : 1);
    for (int k = 0; n + k <= order; ++k) r[-n - k] = pre * cached_h(n, k, true);
  }
  return r;
}

WedgeElem poly_wedge(int n, const KernelSeries& ks, int k, int l) {
  auto it = ks.find(k);
  if (it == ks.end()) return WedgeElem(n, l);
  return l == 1 ? WedgeElem::from_x_poly(n, it->second) : WedgeElem::from_antisymmetric(n, 2, it->second);
}

TruncSeries xminus_series(Family f, const WedgeElem& p, Point at, int order, std::optional<int> only_k) {
  TruncSeries s{f, at, order, p.n(), p.l(), {}, family_prefactor(f, at, p.n())};
  int n = p.n();
  int dl = f == Family::XMinus ? 1 : 2;
  if (p.l() + dl > n) return s;
  KernelSeries ks = f == Family::XMinus ? kernel_F_series(n, at, order) : kernel_F2_series(n, at, order);
  for (const auto& [k, c] : ks) {
    if (only_k && k != *only_k) continue;
    WedgeElem w = wedge_mul(poly_wedge(n, ks, k, dl), p);
    if (!w.is_zero()) s.coeffs.emplace(k, std::move(w));
  }
  return s;
}

TruncSeries xplus_series(const WedgeElem& p, Point at, int order, std::optional<int> only_k) {
  TruncSeries s{Family::XPlus, at, order, p.n(), p.l(), {}, family_prefactor(Family::XPlus, at, p.n())};
  int n = p.n();
  if (p.l() == 0 || p.is_zero()) return s;
  auto parts = contract_last(p);
  // at 0 only h_0..h_order enter; at infinity the expansion starts at t^{-n}
  int reach = at == Point::Zero ? (only_k ? *only_k : order) : order + n;
  auto inv = inv_theta_series(n, at, reach);
  // [t^k] = sum_e inv[k - e] Q_e
  int kmin = at == Point::Zero ? 0 : -order, kmax = at == Point::Zero ? order : -1;
  for (int k = kmin; k <= kmax; ++k) {
    if (only_k && k != *only_k) continue;
    WedgeElem acc(n, p.l() - 1);
    for (const auto& [e, q] : parts) {
      auto it = inv.find(k - e);
      if (it != inv.end()) acc += q * RationalFn(it->second);
    }
    if (!acc.is_zero()) s.coeffs.emplace(k, std::move(acc));
  }
  return s;
}

LaurentPoly vandermonde_sq(int n, int skip) {
  LaurentPoly v(1);
  for (int b = 1; b <= n; ++b)
    for (int c = b + 1; c <= n; ++c)
      if (b != skip && c != skip) v *= zvar(b, 2) - zvar(c, 2);
  return v;
}

TruncSeries xplus2_series(const WedgeElem& p, Point at, int order, std::optional<int> only_k) {
  TruncSeries s{Family::XPlus2, at, order, p.n(), p.l(), {}, family_prefactor(Family::XPlus2, at, p.n())};
  int n = p.n();
  if (p.l() <= 1 || p.is_zero()) return s;
  // P(.., u, -u) = sum_{e,f} (-1)^f u^{e+f} R_{e,f}
  std::map<int, WedgeElem> byu;
  for (auto& [ef, r] : contract_last_two(p)) {
    auto it = byu.try_emplace(ef.first + ef.second, n, p.l() - 2).first;
    it->second += ef.second % 2 ? -r : r;
  }
  // terms_a = (-1)^{a-1} z_a^{2n-2} V^{(a)} P(.., 1/z_a, -1/z_a)
  std::vector<WedgeElem> terms(n + 1, WedgeElem(n, p.l() - 2));
  for (int a = 1; a <= n; ++a) {
    WedgeElem pa(n, p.l() - 2);
    for (auto& [d, w] : byu) pa += w * RationalFn(zvar(a, -d));
    LaurentPoly pre = vandermonde_sq(n, a) * zvar(a, 2 * n - 2) * CycScalar((a - 1) % 2 ? -1 : 1);
    terms[a] = pa * RationalFn(pre);
  }
  LaurentPoly V = vandermonde_sq(n, 0);
  CycScalar half(1, 2);
  int kmin = at == Point::Zero ? 0 : -order, kmax = at == Point::Zero ? order : -1;
  for (int k = kmin; k <= kmax; ++k) {
    if (only_k && k != *only_k) continue;
    WedgeElem acc(n, p.l() - 2);
    for (int a = 1; a <= n; ++a) acc += terms[a] * RationalFn(zvar(a, k) * CycScalar(k >= 0 ? 1 : -1));
    WedgeElem out(n, p.l() - 2);
    for (const auto& [mask, c] : acc.terms()) {
      RationalFn q;
      if (c.is_poly()) {
        auto d = try_exact_div(c.num(), V);
        q = d ? RationalFn(*d) : RationalFn(c.num(), V);
      } else {
        q = c / RationalFn(V);
      }
      out.add_term(mask, q * half);
    }
    if (!out.is_zero()) s.coeffs.emplace(k, std::move(out));
  }
  return s;
}

// D_j(t, X) = (Theta(X) t^j - Theta(t) X^j) / (X - t)
const LaurentPoly& onebody_numerator(int n, int j) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, LaurentPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, j);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  LaurentPoly t = tvar(), X = xvar(1);
  LaurentPoly num = theta(n, X) * tvar(j) - theta(n, t) * xvar(1, j);
  return cache.emplace(key, exact_div(num, X - t)).first->second;
}

// one-body operator images: j -> (t-power -> polynomial in X)
std::vector<std::map<int, LaurentPoly>> onebody_images(int n, Family f, int order) {
  std::vector<std::map<int, LaurentPoly>> img(n);
  bool plus = f == Family::APlus;
  auto inv = inv_theta_series(n, plus ? Point::Zero : Point::Infinity, order + 2 * n + 2);
  for (int j = 0; j < n; ++j) {
    // a+: t D_j / Theta(t); a-: D_{j+1} / Theta(t)
    const LaurentPoly& d = onebody_numerator(n, plus ? j : j + 1);
    std::map<int, LaurentPoly> series;
    for (auto& [e, c] : d.split(var::kT)) {
      int ee = plus ? e + 1 : e;
      for (auto& [k, h] : inv) {
        int pw = ee + k;
        if (plus ? (pw > order) : (pw < -order)) continue;
        series[pw] += c * h;
      }
    }
    for (auto& [pw, c] : series) {
      if (pw % 2 != 0 || c.is_zero()) continue;
      if (!plus && pw >= 0) {
        // nonnegative powers must cancel in the expansion at infinity
        throw std::logic_error("a_-(t): nonnegative t-power survived");
      }
      img[j][pw] = c * CycScalar(plus ? 2 : -2);
    }
  }
  return img;
}

TruncSeries a_series(Family f, const WedgeElem& p, Point at, int order, std::optional<int> only_k) {
  bool plus = f == Family::APlus;
  if ((plus && at != Point::Zero) || (!plus && at != Point::Infinity))
    throw std::invalid_argument("a_+ expands at 0 and a_- at infinity");
  TruncSeries s{f, at, order, p.n(), p.l(), {}, CycScalar(1)};
  int n = p.n();
  auto img = onebody_images(n, f, order);
  for (int m = 1; m <= order; ++m) {
    int k = plus ? m : -m;
    if (only_k && k != *only_k) continue;
    WedgeElem acc = p * RationalFn(power_sum(n, k));
    for (const auto& [mask, c] : p.terms()) {
      Subset sset = mask_subset(mask);
      for (size_t pos = 0; pos < sset.size(); ++pos) {
        auto it = img[sset[pos]].find(k);
        if (it == img[sset[pos]].end()) continue;
        uint32_t rest = mask & ~(1u << sset[pos]);
        for (auto& [e, cx] : it->second.split(var::x(1))) {
          if (rest & (1u << e)) continue;
          int inv = 0;
          for (size_t i = 0; i < sset.size(); ++i) {
            if (i < pos && sset[i] > e) ++inv;
            if (i > pos && sset[i] < e) ++inv;
          }
          RationalFn v = c * RationalFn(cx);
          acc.add_term(rest | (1u << e), inv % 2 ? -v : v);
        }
      }
    }
    if (!acc.is_zero()) s.coeffs.emplace(k, std::move(acc));
  }
  return s;
}

}  // namespace

TruncSeries act_series(Family f, const WedgeElem& p, Point at, int order, std::optional<int> only_k) {
  if (order < 0) throw std::invalid_argument("negative order");
  switch (f) {
    case Family::XMinus:
    case Family::XMinus2: return xminus_series(f, p, at, order, only_k);
    case Family::XPlus: return xplus_series(p, at, order, only_k);
    case Family::XPlus2: return xplus2_series(p, at, order, only_k);
    case Family::APlus:
    case Family::AMinus: return a_series(f, p, at, order, only_k);
  }
  throw std::logic_error("unreachable");
}

WedgeElem mode_extract(const TruncSeries& s, int k) {
  if (std::abs(k) > s.order) throw std::out_of_range("mode index beyond series order");
  switch (s.family) {
    case Family::XMinus:
    case Family::XPlus: return s.abstract_coeff(k) * CycScalar::i_power(k);
    case Family::APlus:
    case Family::AMinus: return s.abstract_coeff(k);
    case Family::XMinus2:
      if (k != 0 || s.point != Point::Infinity) throw std::invalid_argument("only the k = 0 divided mode is exposed");
      return s.abstract_coeff(0);
    case Family::XPlus2:
      if (k != 0 || s.point != Point::Zero) throw std::invalid_argument("only the k = 0 divided mode is exposed");
      return s.abstract_coeff(0);
  }
  throw std::logic_error("unreachable");
}

std::string GenMode::str() const {
  switch (kind) {
    case ModeKind::XPlus: return "x+" + std::to_string(k);
    case ModeKind::XMinus: return "x-" + std::to_string(k);
    case ModeKind::XPlus2: return "x+^2_" + std::to_string(k);
    case ModeKind::XMinus2: return "x-^2_" + std::to_string(k);
    case ModeKind::XPlus2Series: return "x+^2c_" + std::to_string(k);
    case ModeKind::XMinus2Series: return "x-^2c_" + std::to_string(k);
    case ModeKind::ATilde: return "a" + std::to_string(k);
    case ModeKind::T1: return k > 0 ? "t1" : "t1^-1";
  }
  return "?";
}

GenMode GenMode::parse(const std::string& s) {
  auto num = [&](size_t pos) {
    size_t used = 0;
    int v = std::stoi(s.substr(pos), &used);
    if (pos + used != s.size()) throw std::invalid_argument("malformed mode " + s);
    return v;
  };
  if (s == "t1") return {ModeKind::T1, 1};
  if (s == "t1^-1") return {ModeKind::T1, -1};
  if (s.rfind("x+^2c_", 0) == 0) return {ModeKind::XPlus2Series, num(6)};
  if (s.rfind("x-^2c_", 0) == 0) return {ModeKind::XMinus2Series, num(6)};
  if (s.rfind("x+^2_", 0) == 0) return {ModeKind::XPlus2, num(5)};
  if (s.rfind("x-^2_", 0) == 0) return {ModeKind::XMinus2, num(5)};
  if (s.rfind("x+", 0) == 0) return {ModeKind::XPlus, num(2)};
  if (s.rfind("x-", 0) == 0) return {ModeKind::XMinus, num(2)};
  if (s.rfind("a", 0) == 0) return {ModeKind::ATilde, num(1)};
  throw std::invalid_argument("malformed mode " + s);
}

int GenMode::weight_shift() const {
  switch (kind) {
    case ModeKind::XPlus: return 2;
    case ModeKind::XMinus: return -2;
    case ModeKind::XPlus2:
    case ModeKind::XPlus2Series: return 4;
    case ModeKind::XMinus2:
    case ModeKind::XMinus2Series: return -4;
    default: return 0;
  }
}

int GenMode::degree_shift() const {
  switch (kind) {
    case ModeKind::XPlus2:
    case ModeKind::XMinus2: return 2 * k;
    case ModeKind::T1: return 0;
    default: return k;
  }
}

Word parse_word(const std::string& s) {
  Word w;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) w.push_back(GenMode::parse(tok));
  return w;
}

std::string word_str(const Word& w) {
  std::string s;
  for (const auto& g : w) s += (s.empty() ? "" : " ") + g.str();
  return s;
}

WedgeElem apply_mode(const GenMode& g, const WedgeElem& p) {
  int k = g.k;
  switch (g.kind) {
    case ModeKind::T1: return p * CycScalar::i_power(k > 0 ? p.weight() : -p.weight());
    case ModeKind::XMinus: {
      Point at = k >= 1 ? Point::Zero : Point::Infinity;
      return mode_extract(act_series(Family::XMinus, p, at, std::abs(k), k), k);
    }
    case ModeKind::XPlus: {
      Point at = k >= 0 ? Point::Zero : Point::Infinity;
      return mode_extract(act_series(Family::XPlus, p, at, std::abs(k), k), k);
    }
    case ModeKind::XMinus2:
      if (k != 0) throw std::invalid_argument("only (x-_0)^(2) is available");
      return mode_extract(act_series(Family::XMinus2, p, Point::Infinity, 0, 0), 0);
    case ModeKind::XPlus2:
      if (k != 0) throw std::invalid_argument("only (x+_0)^(2) is available");
      return mode_extract(act_series(Family::XPlus2, p, Point::Zero, 0, 0), 0);
    case ModeKind::XMinus2Series: {
      Point at = k >= 1 ? Point::Zero : Point::Infinity;
      return act_series(Family::XMinus2, p, at, std::abs(k), k).abstract_coeff(k);
    }
    case ModeKind::XPlus2Series: {
      Point at = k >= 0 ? Point::Zero : Point::Infinity;
      return act_series(Family::XPlus2, p, at, std::abs(k), k).abstract_coeff(k);
    }
    case ModeKind::ATilde: {
      if (k == 0) throw std::invalid_argument("a_0 is not a generator");
      Family f = k > 0 ? Family::APlus : Family::AMinus;
      return mode_extract(act_series(f, p, k > 0 ? Point::Zero : Point::Infinity, std::abs(k), k), k);
    }
  }
  throw std::logic_error("unreachable");
}

WedgeElem apply_word(const Word& w, const WedgeElem& p) {
  WedgeElem r = p;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = apply_mode(*it, r);
  return r;
}

SpotReport relation_spotcheck(const std::string& relation, const std::vector<WedgeElem>& samples) {
  SpotReport rep;
  rep.relation = relation;
  auto check = [&](bool ok, const std::string& what) {
    ++rep.samples;
    if (ok) ++rep.passed;
    else rep.failures.push_back(what);
  };
  for (const auto& p : samples) {
    if (relation == "t1-conjugation") {
      for (int k : {-1, 0, 1, 2}) {
        GenMode x{ModeKind::XMinus, k};
        WedgeElem lhs = apply_word({{ModeKind::T1, 1}, x, {ModeKind::T1, -1}}, p);
        check(lhs == -apply_mode(x, p), "t1 x-_" + std::to_string(k) + " t1^-1");
        GenMode y{ModeKind::XPlus, k};
        WedgeElem lhs2 = apply_word({{ModeKind::T1, 1}, y, {ModeKind::T1, -1}}, p);
        check(lhs2 == -apply_mode(y, p), "t1 x+_" + std::to_string(k) + " t1^-1");
      }
    } else if (relation == "a-commutativity") {
      for (auto [m1, m2] : {std::pair{2, 4}, std::pair{1, 2}, std::pair{-2, 2}, std::pair{-1, 3}}) {
        GenMode a{ModeKind::ATilde, m1}, b{ModeKind::ATilde, m2};
        check(apply_word({a, b}, p) == apply_word({b, a}, p), "[a" + std::to_string(m1) + ", a" + std::to_string(m2) + "]");
      }
    } else if (relation == "a-x-bracket") {
      for (auto [m, k] : {std::pair{2, 0}, std::pair{1, 0}, std::pair{2, 1}, std::pair{-2, 1}, std::pair{1, -1}}) {
        for (int sign : {1, -1}) {
          ModeKind xk = sign > 0 ? ModeKind::XPlus : ModeKind::XMinus;
          GenMode a{ModeKind::ATilde, m}, x{xk, k}, xs{xk, k + m};
          WedgeElem lhs = apply_word({a, x}, p) - apply_word({x, a}, p);
          CycScalar c = (CycScalar::i_power(m) + CycScalar::i_power(-m)) * CycScalar(sign);
          WedgeElem rhs = apply_mode(xs, p) * c;
          check(lhs == rhs, "[a" + std::to_string(m) + ", " + x.str() + "]");
        }
      }
    } else if (relation == "ex-bracket-diagonal") {
      GenMode xp{ModeKind::XPlus, 0}, xm{ModeKind::XMinus, 0};
      WedgeElem lhs = apply_word({xp, xm}, p) - apply_word({xm, xp}, p);
      // (t1 - t1^{-1}) / (q - q^{-1}) at q = i
      CycScalar c = (CycScalar::i_power(p.weight()) - CycScalar::i_power(-p.weight())) /
                    (CycScalar::i_power(1) - CycScalar::i_power(-1));
      check(lhs == p * c, "[x+_0, x-_0]");
    } else {
      throw std::invalid_argument("unknown relation " + relation);
    }
  }
  return rep;
}

}  // namespace qc
