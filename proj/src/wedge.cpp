#include "qcycle/wedge.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <sstream>

namespace qc {

uint32_t subset_mask(const Subset& s) {
  uint32_t m = 0;
  for (int x : s) {
    if (x < 0 || x > 30) throw std::invalid_argument("subset element out of range");
    if (m & (1u << x)) throw std::invalid_argument("repeated subset element");
    m |= 1u << x;
  }
  return m;
}

Subset mask_subset(uint32_t mask) {
  Subset s;
  while (mask) {
    s.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return s;
}

WedgeElem::WedgeElem(int n, int l) : n_(n), l_(l) {
  if (n < 0 || l < 0) throw std::invalid_argument("negative shape");
}

WedgeElem WedgeElem::scalar(int n, const RationalFn& c) {
  WedgeElem w(n, 0);
  w.add_term(0, c);
  return w;
}

WedgeElem WedgeElem::basis(int n, const Subset& s, const RationalFn& c) {
  WedgeElem w(n, static_cast<int>(s.size()));
  Subset sorted = s;
  std::sort(sorted.begin(), sorted.end());
  for (int x : sorted)
    if (x >= n) throw std::invalid_argument("basis exponent exceeds n-1");
  // reorder sign for an unsorted request
  int inv = 0;
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (s[i] > s[j]) ++inv;
  w.add_term(subset_mask(sorted), inv % 2 ? -c : c);
  return w;
}

WedgeElem WedgeElem::from_x_poly(int n, const LaurentPoly& f) {
  WedgeElem w(n, 1);
  for (auto& [e, c] : f.split(var::x(1))) {
    if (e < 0 || e >= n) throw std::invalid_argument("X-degree out of range for n = " + std::to_string(n));
    w.add_term(1u << e, RationalFn(c));
  }
  return w;
}

WedgeElem WedgeElem::from_antisymmetric(int n, int l, const LaurentPoly& f) {
  std::map<uint32_t, std::vector<LaurentPoly::Term>> acc;
  for (const auto& [m, c] : f.terms()) {
    bool increasing = true;
    uint32_t mask = 0;
    for (int a = 1; a <= l; ++a) {
      int e = m[var::x(a)];
      if (e >= n || e < 0) throw std::invalid_argument("X-degree out of range");
      if (a > 1 && e <= m[var::x(a - 1)]) increasing = false;
      mask |= 1u << e;
    }
    if (!increasing) continue;
    Mono rest = m;
    for (int a = 1; a <= l; ++a) rest.set(var::x(a), 0);
    acc[mask].emplace_back(rest, c);
  }
  WedgeElem w(n, l);
  for (auto& [mask, ts] : acc) w.add_term(mask, RationalFn(LaurentPoly::from_terms(std::move(ts))));
  return w;
}

RationalFn WedgeElem::coeff(const Subset& s) const {
  Subset sorted = s;
  std::sort(sorted.begin(), sorted.end());
  return coeff_mask(subset_mask(sorted));
}

RationalFn WedgeElem::coeff_mask(uint32_t mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? RationalFn() : it->second;
}

void WedgeElem::add_term(uint32_t mask, const RationalFn& c) {
  if (c.is_zero()) return;
  if (std::popcount(mask) != l_) throw std::invalid_argument("subset size does not match wedge degree");
  if (mask >> n_) throw std::invalid_argument("basis exponent exceeds n-1");
  auto it = terms_.find(mask);
  if (it == terms_.end()) {
    terms_.emplace(mask, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

WedgeElem WedgeElem::operator-() const {
  WedgeElem r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

WedgeElem& WedgeElem::operator+=(const WedgeElem& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  if (n_ != o.n_ || l_ != o.l_) throw std::invalid_argument("shape mismatch in wedge addition");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

WedgeElem& WedgeElem::operator-=(const WedgeElem& o) { return *this += -o; }

WedgeElem& WedgeElem::operator*=(const RationalFn& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

WedgeElem& WedgeElem::operator*=(const CycScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

bool operator==(const WedgeElem& a, const WedgeElem& b) {
  if (a.is_zero() && b.is_zero()) return true;
  if (a.n_ != b.n_ || a.l_ != b.l_ || a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [m, c] : a.terms_) {
    if (it->first != m || !(it->second == c)) return false;
    ++it;
  }
  return true;
}

bool WedgeElem::has_poly_coeffs() const {
  for (const auto& [m, c] : terms_)
    if (!c.is_poly()) return false;
  return true;
}

bool WedgeElem::is_deformed_cycle() const {
  for (const auto& [m, c] : terms_) {
    if (!c.is_poly()) return false;
    const LaurentPoly& p = c.poly();
    for (const auto& [mono, v] : p.terms())
      for (int s = var::kZAux; s < var::kCount; ++s)
        if (mono[s]) return false;
    if (!is_symmetric(p, n_)) return false;
  }
  return true;
}

WedgeElem WedgeElem::map_coeffs(const std::function<RationalFn(const RationalFn&)>& f) const {
  WedgeElem r(n_, l_);
  for (const auto& [m, c] : terms_) r.add_term(m, f(c));
  return r;
}

WedgeElem WedgeElem::with_n(int n) const {
  WedgeElem r(n, l_);
  for (const auto& [m, c] : terms_) r.add_term(m, c);
  return r;
}

std::string WedgeElem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*X^{";
    Subset s = mask_subset(m);
    for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << "}";
  }
  return os.str();
}

int shuffle_sign(uint32_t a, uint32_t b) {
  // number of pairs (i in a, j in b) with i > j
  int inv = 0;
  uint32_t bb = b;
  while (bb) {
    int j = std::countr_zero(bb);
    bb &= bb - 1;
    inv += std::popcount(a >> (j + 1));
  }
  return inv % 2 ? -1 : 1;
}

WedgeElem wedge_mul(const WedgeElem& a, const WedgeElem& b) {
  if (a.n() != b.n()) throw std::invalid_argument("wedge of different n");
  WedgeElem r(a.n(), a.l() + b.l());
  if (a.l() + b.l() > a.n()) return r;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      RationalFn c = ca * cb;
      if (shuffle_sign(ma, mb) < 0) c = -c;
      r.add_term(ma | mb, c);
    }
  return r;
}

void ExpandedPoly::add(const std::vector<int>& e, const RationalFn& c) {
  if (c.is_zero()) return;
  auto it = terms.find(e);
  if (it == terms.end()) {
    terms.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

bool operator==(const ExpandedPoly& a, const ExpandedPoly& b) {
  if (a.terms.size() != b.terms.size()) return false;
  auto it = b.terms.begin();
  for (const auto& [e, c] : a.terms) {
    if (it->first != e || !(it->second == c)) return false;
    ++it;
  }
  return true;
}

ExpandedPoly expand(const WedgeElem& p) {
  ExpandedPoly r;
  r.vars = p.l();
  for (const auto& [mask, c] : p.terms()) {
    Subset s = mask_subset(mask);
    std::vector<int> perm(s.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    do {
      int inv = 0;
      for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
          if (perm[i] > perm[j]) ++inv;
      std::vector<int> e(s.size());
      for (size_t i = 0; i < perm.size(); ++i) e[i] = s[perm[i]];
      r.add(e, inv % 2 ? -c : c);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return r;
}

WedgeElem skew(int n, const ExpandedPoly& f) {
  WedgeElem r(n, f.vars);
  for (const auto& [e, c] : f.terms) {
    for (int x : e)
      if (x < 0 || x >= n) throw std::invalid_argument("skew: X-degree exceeds n-1");
    std::vector<int> s = e;
    int inv = 0;
    for (size_t i = 0; i < s.size(); ++i)
      for (size_t j = i + 1; j < s.size(); ++j) {
        if (s[i] == s[j]) inv = -1;
        if (inv >= 0 && s[i] > s[j]) ++inv;
      }
    if (inv < 0) continue;
    std::sort(s.begin(), s.end());
    r.add_term(subset_mask(s), inv % 2 ? -c : c);
  }
  return r;
}

ExpandedPoly specialize_X(const WedgeElem& p, int slot, const RationalFn& value) {
  if (p.l() < 1 || slot < 1 || slot > p.l()) throw std::invalid_argument("specialize_X: slot out of range");
  ExpandedPoly full = expand(p);
  ExpandedPoly r;
  r.vars = p.l() - 1;
  std::vector<RationalFn> pw{RationalFn(1)};
  for (const auto& [e, c] : full.terms) {
    int k = e[slot - 1];
    while (static_cast<int>(pw.size()) <= k) pw.push_back(pw.back() * value);
    std::vector<int> rest = e;
    rest.erase(rest.begin() + (slot - 1));
    r.add(rest, c * pw[k]);
  }
  return r;
}

std::map<int, WedgeElem> contract_last(const WedgeElem& p) {
  if (p.l() < 1) throw std::invalid_argument("contract_last needs l >= 1");
  std::map<int, WedgeElem> out;
  int l = p.l();
  for (const auto& [mask, c] : p.terms()) {
    Subset s = mask_subset(mask);
    for (int j = 1; j <= l; ++j) {
      int e = s[j - 1];
      auto it = out.try_emplace(e, p.n(), l - 1).first;
      it->second.add_term(mask & ~(1u << e), (l + j) % 2 ? -c : c);
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

std::map<std::pair<int, int>, WedgeElem> contract_last_two(const WedgeElem& p) {
  std::map<std::pair<int, int>, WedgeElem> out;
  for (const auto& [f, q] : contract_last(p))
    for (const auto& [e, r] : contract_last(q)) out.emplace(std::make_pair(e, f), r);
  return out;
}

std::optional<int> z_degree(const RationalFn& c) {
  auto poly_deg = [](const LaurentPoly& p) -> std::optional<int> {
    std::optional<int> d;
    for (const auto& [m, v] : p.terms()) {
      int s = 0;
      for (int v2 = 0; v2 <= var::kZAux; ++v2) s += m[v2];
      if (d && *d != s) return std::nullopt;
      d = s;
    }
    return d ? d : std::optional<int>(0);
  };
  auto dn = poly_deg(c.num());
  if (!dn) return std::nullopt;
  int d = *dn;
  for (const auto& [f, k] : c.den_factors()) {
    auto df = poly_deg(f);
    if (!df) return std::nullopt;
    d -= k * *df;
  }
  return d;
}

BiGrading bigrade(const WedgeElem& p) {
  BiGrading g;
  g.weight = p.weight();
  for (const auto& [mask, c] : p.terms()) {
    int xs = 0;
    for (int s : mask_subset(mask)) xs += s;
    if (c.is_poly()) {
      std::map<int, std::vector<LaurentPoly::Term>> byd;
      for (const auto& [m, v] : c.num().terms()) {
        int s = 0;
        for (int v2 = 0; v2 <= var::kZAux; ++v2) s += m[v2];
        byd[s - xs].emplace_back(m, v);
      }
      for (auto& [d, ts] : byd) {
        auto it = g.parts.try_emplace(d, p.n(), p.l()).first;
        it->second.add_term(mask, RationalFn(LaurentPoly::from_terms(std::move(ts))));
      }
    } else {
      auto zd = z_degree(c);
      if (!zd) throw std::invalid_argument("bigrade: inhomogeneous rational coefficient");
      auto it = g.parts.try_emplace(*zd - xs, p.n(), p.l()).first;
      it->second.add_term(mask, c);
    }
  }
  if (g.parts.size() == 1) g.deg0 = g.parts.begin()->first;
  if (p.is_zero()) g.deg0 = 0;
  return g;
}

LaurentPoly theta(int n, const LaurentPoly& x) {
  LaurentPoly r(1);
  for (int j = 1; j <= n; ++j) r *= 1 - zvar(j) * x;
  return r;
}

LaurentPoly theta2(int n, const LaurentPoly& x1, const LaurentPoly& x2) {
  return theta(n, x1) * theta(n, x2) - theta(n, -x1) * theta(n, -x2);
}

namespace {

std::mutex cache_mutex;
std::map<std::tuple<int, int, bool, bool>, LaurentPoly> sym_cache;

LaurentPoly invert_z(const LaurentPoly& p) {
  LaurentPoly r = p;
  for (int j = 1; j <= var::kMaxZ; ++j)
    if (r.uses(var::z(j))) r = r.invert_slot(var::z(j));
  return r;
}

}  // namespace

const LaurentPoly& cached_e(int n, int k, bool inverse) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto key = std::make_tuple(n, k, inverse, true);
  auto it = sym_cache.find(key);
  if (it != sym_cache.end()) return it->second;
  LaurentPoly e;
  if (k >= 0 && k <= n) {
    // e_k by the product recursion
    std::vector<LaurentPoly> es(n + 1);
    es[0] = LaurentPoly(1);
    for (int j = 1; j <= n; ++j)
      for (int i = j; i >= 1; --i) es[i] += es[i - 1] * zvar(j, inverse ? -1 : 1);
    e = es[k];
  }
  return sym_cache.emplace(key, e).first->second;
}

const LaurentPoly& cached_h(int n, int k, bool inverse) {
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = sym_cache.find(std::make_tuple(n, k, inverse, false));
    if (it != sym_cache.end()) return it->second;
  }
  LaurentPoly h;
  if (k == 0) h = LaurentPoly(1);
  else if (k > 0 && n > 0) {
    // h_k = sum_{i=1..k} (-1)^{i-1} e_i h_{k-i}
    for (int i = 1; i <= std::min(k, n); ++i) {
      LaurentPoly term = cached_e(n, i, inverse) * cached_h(n, k - i, inverse);
      if (i % 2) h += term;
      else h -= term;
    }
  }
  std::lock_guard<std::mutex> lock(cache_mutex);
  return sym_cache.emplace(std::make_tuple(n, k, inverse, false), h).first->second;
}

namespace {

// Theta_n(x) = sum_k (-1)^k e_k x^k, with x a single slot variable
LaurentPoly theta_slot(int n, int slot, bool negate) {
  LaurentPoly r;
  for (int k = 0; k <= n; ++k) {
    LaurentPoly term = cached_e(n, k) * LaurentPoly::variable(slot, k);
    if (!negate && k % 2) r -= term;
    else r += term;
  }
  return r;
}

// coefficients of r(t) = Theta(-t)/Theta(t) at 0, or of (-1)^n prod(1+s/z)/prod(1-s/z) at infinity
std::vector<LaurentPoly> ratio_series(int n, Point at, int order) {
  bool inv = at == Point::Infinity;
  std::vector<LaurentPoly> r(order + 1);
  for (int k = 0; k <= order; ++k) {
    for (int a = 0; a <= std::min(k, n); ++a) r[k] += cached_e(n, a, inv) * cached_h(n, k - a, inv);
    if (inv && n % 2) r[k] = -r[k];
  }
  return r;
}

// g_k(X) = [t^k] (Theta(-X) - Theta(X) r(t))
std::vector<LaurentPoly> g_series(int n, Point at, int order, int slot) {
  LaurentPoly thp = theta_slot(n, slot, false), thm = theta_slot(n, slot, true);
  std::vector<LaurentPoly> r = ratio_series(n, at, order);
  std::vector<LaurentPoly> g(order + 1);
  for (int k = 0; k <= order; ++k) {
    g[k] = -(thp * r[k]);
    if (k == 0) g[k] += thm;
  }
  return g;
}

// single kernel in the given X slot, as t-power -> coefficient
KernelSeries kernel_F_slot(int n, Point at, int order, int slot) {
  KernelSeries out;
  CycScalar half(1, 2);
  LaurentPoly X = LaurentPoly::variable(slot);
  if (at == Point::Zero) {
    if (order < 1) return out;
    std::vector<LaurentPoly> g = g_series(n, at, order - 1, slot);
    LaurentPoly prev;
    for (int k = 0; k <= order - 1; ++k) {
      LaurentPoly hk = exact_div(g[k] + prev, X);
      if (!hk.is_zero()) out[k + 1] = hk * half;
      prev = std::move(hk);
    }
  } else {
    std::vector<LaurentPoly> g = g_series(n, at, order, slot);
    LaurentPoly f;
    for (int k = 0; k <= order; ++k) {
      f = X * f + g[k];
      auto [lo, hi] = f.degree_range(slot);
      if (!f.is_zero() && hi > n - 1) throw std::logic_error("kernel_F at infinity: X-degree overflow");
      if (!f.is_zero()) out[-k] = f * (-half);
    }
  }
  return out;
}

}  // namespace

KernelSeries kernel_F_series(int n, Point at, int order) { return kernel_F_slot(n, at, order, var::x(1)); }

KernelSeries kernel_F2_series(int n, Point at, int order) {
  LaurentPoly X1 = xvar(1), X2 = xvar(2);
  // Theta(X1, X2)/(X1 + X2) = -2 sum_{a+b odd} e_a e_b X1^a X2^b / (X1 + X2)
  LaurentPoly th12;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b)
      if ((a + b) % 2) th12 += cached_e(n, a) * cached_e(n, b) * xvar(1, a) * xvar(2, b);
  th12 = exact_div(th12 * CycScalar(-2), X1 + X2);
  LaurentPoly lead = (X1 - X2) * th12;
  LaurentPoly thm1 = theta_slot(n, var::x(1), true), thm2 = theta_slot(n, var::x(2), true);
  KernelSeries out;
  if (at == Point::Zero) {
    // F2 = t^2 B / ((X1 + t)(X2 + t)), B = lead + (X1+t) Theta(-X2) hh(X1) - (X2+t) Theta(-X1) hh(X2)
    int m = order - 2;
    if (m < 0) return out;
    KernelSeries f1 = kernel_F_slot(n, at, m + 1, var::x(1)), f2 = kernel_F_slot(n, at, m + 1, var::x(2));
    auto hh = [&](KernelSeries& f, int k) {
      auto it = f.find(k + 1);
      return it == f.end() ? LaurentPoly() : it->second * CycScalar(2);
    };
    std::vector<LaurentPoly> B(m + 1);
    for (int k = 0; k <= m; ++k) {
      B[k] = thm2 * (X1 * hh(f1, k)) - thm1 * (X2 * hh(f2, k));
      if (k >= 1) B[k] += thm2 * hh(f1, k - 1) - thm1 * hh(f2, k - 1);
      if (k == 0) B[k] += lead;
    }
    LaurentPoly cprev, hprev;
    for (int k = 0; k <= m; ++k) {
      LaurentPoly c = exact_div(B[k] - cprev, X1);
      LaurentPoly h = exact_div(c - hprev, X2);
      if (!h.is_zero()) out[k + 2] = h;
      cprev = std::move(c);
      hprev = std::move(h);
    }
  } else {
    KernelSeries f1 = kernel_F_slot(n, at, order, var::x(1)), f2 = kernel_F_slot(n, at, order, var::x(2));
    auto F = [](KernelSeries& f, int k) {
      auto it = f.find(-k);
      return it == f.end() ? LaurentPoly() : it->second * CycScalar(2);
    };
    LaurentPoly cprev, hprev;
    for (int k = 0; k <= order; ++k) {
      LaurentPoly b = thm2 * F(f1, k) - thm1 * F(f2, k);
      if (k >= 1) b += thm2 * (X1 * F(f1, k - 1)) - thm1 * (X2 * F(f2, k - 1));
      if (k == 0) b += lead;
      LaurentPoly c = b - X1 * cprev;
      LaurentPoly h = c - X2 * hprev;
      if (!h.is_zero()) {
        if (h.degree_range(var::x(1)).second > n - 1 || h.degree_range(var::x(2)).second > n - 1)
          throw std::logic_error("kernel_F2 at infinity: X-degree overflow");
        out[-k] = h;
      }
      cprev = std::move(c);
      hprev = std::move(h);
    }
  }
  return out;
}

RationalFn kernel_F(int n) {
  LaurentPoly t = tvar(), X = xvar(1);
  LaurentPoly d = exact_div(theta2(n, t, -X), X - t);
  return RationalFn(t * d, theta(n, t) * CycScalar(2));
}

RationalFn kernel_F2(int n) {
  LaurentPoly t = tvar(), X1 = xvar(1), X2 = xvar(2);
  LaurentPoly th12 = exact_div(theta2(n, X1, X2), X1 + X2);
  LaurentPoly d1 = exact_div(theta2(n, t, -X1), X1 - t);
  LaurentPoly d2 = exact_div(theta2(n, t, -X2), X2 - t);
  LaurentPoly num = t * t *
                    ((X1 - X2) * th12 * theta(n, t) + (X1 + t) * theta(n, -X2) * d1 - (X2 + t) * theta(n, -X1) * d2);
  std::vector<RationalFn::Factor> den{{X1 + t, 1}, {X2 + t, 1}, {theta(n, t), 1}};
  RationalFn r(num, den);
  return r;
}

}  // namespace qc
