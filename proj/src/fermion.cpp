#include "qcycle/fermion.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <mutex>

namespace qc {

namespace {

int below_parity(uint32_t mask, int a) {
  return std::popcount(mask & ((1u << (a - 1)) - 1)) & 1;
}

uint32_t subset_bits(const Subset& s) {
  uint32_t m = 0;
  for (int a : s) m |= 1u << (a - 1);
  return m;
}

void add_to(FermionOp::Terms& t, const FWord& w, const RationalFn& c) {
  if (c.is_zero()) return;
  auto it = t.find(w);
  if (it == t.end()) {
    t.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

bool reducible(int x, int y) {
  if (x > 0 && y > 0) return x >= y;
  if (x < 0 && y < 0) return -x >= -y;
  return x < 0 && y > 0;
}

}  // namespace

GrassmannElem GrassmannElem::monomial(int n, const Subset& s, const RationalFn& c) {
  GrassmannElem e(n);
  Subset sorted = s;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return e;
  // sign of sorting the given order
  int inv = 0;
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (s[i] > s[j]) ++inv;
  e.add_term(subset_bits(sorted), inv % 2 ? -c : c);
  return e;
}

void GrassmannElem::add_term(uint32_t mask, const RationalFn& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(mask);
  if (it == terms_.end()) {
    terms_.emplace(mask, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GrassmannElem& GrassmannElem::operator+=(const GrassmannElem& o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GrassmannElem& GrassmannElem::operator-=(const GrassmannElem& o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

GrassmannElem& GrassmannElem::operator*=(const RationalFn& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

bool operator==(const GrassmannElem& a, const GrassmannElem& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (const auto& [m, c] : a.terms_) {
    auto it = b.terms_.find(m);
    if (it == b.terms_.end() || it->second != c) return false;
  }
  return true;
}

GrassmannElem operator*(const GrassmannElem& a, const GrassmannElem& b) {
  GrassmannElem r(std::max(a.n_, b.n_));
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      if (ma & mb) continue;
      int s = shuffle_sign(ma, mb);
      RationalFn c = ca * cb;
      r.add_term(ma | mb, s > 0 ? c : -c);
    }
  return r;
}

std::string GrassmannElem::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")";
    for (int a = 1; a <= n_; ++a)
      if (m & (1u << (a - 1))) s += "*psi" + std::to_string(a);
  }
  return s;
}

FermionOp::Terms normal_order(const FWord& w, const RationalFn& c, std::mt19937_64* rng) {
  FermionOp::Terms out;
  std::deque<std::pair<FWord, RationalFn>> work;
  work.emplace_back(w, c);
  while (!work.empty()) {
    auto [word, coef] = std::move(work.front());
    work.pop_front();
    std::vector<size_t> spots;
    for (size_t i = 0; i + 1 < word.size(); ++i)
      if (reducible(word[i], word[i + 1])) {
        spots.push_back(i);
        if (!rng) break;
      }
    if (spots.empty()) {
      add_to(out, word, coef);
      continue;
    }
    size_t i = spots[rng ? std::uniform_int_distribution<size_t>(0, spots.size() - 1)(*rng) : 0];
    int x = word[i], y = word[i + 1];
    if ((x > 0) == (y > 0)) {
      if (x == y) continue;
      std::swap(word[i], word[i + 1]);
      work.emplace_back(std::move(word), -coef);
      continue;
    }
    // psi*_a psi_b = -psi_b psi*_a + delta_ab
    if (-x == y) {
      FWord shorter = word;
      shorter.erase(shorter.begin() + i, shorter.begin() + i + 2);
      work.emplace_back(std::move(shorter), coef);
    }
    std::swap(word[i], word[i + 1]);
    work.emplace_back(std::move(word), -coef);
  }
  return out;
}

FermionOp FermionOp::scalar(int n, const RationalFn& c) {
  FermionOp o(n);
  add_to(o.terms_, {}, c);
  return o;
}

FermionOp FermionOp::psi(int n, int a) { return word(n, {a}); }
FermionOp FermionOp::psi_star(int n, int a) { return word(n, {-a}); }

FermionOp FermionOp::word(int n, const FWord& w, const RationalFn& c) {
  for (int x : w)
    if (x == 0 || std::abs(x) > n) throw std::invalid_argument("fermion index out of range");
  FermionOp o(n);
  o.terms_ = normal_order(w, c);
  return o;
}

FermionOp FermionOp::from_grassmann(const GrassmannElem& e) {
  FermionOp o(e.n());
  for (const auto& [m, c] : e.terms()) {
    FWord w;
    for (int a = 1; a <= e.n(); ++a)
      if (m & (1u << (a - 1))) w.push_back(a);
    add_to(o.terms_, w, c);
  }
  return o;
}

FermionOp& FermionOp::operator+=(const FermionOp& o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto& [w, c] : o.terms_) add_to(terms_, w, c);
  return *this;
}

FermionOp& FermionOp::operator-=(const FermionOp& o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto& [w, c] : o.terms_) add_to(terms_, w, -c);
  return *this;
}

FermionOp& FermionOp::operator*=(const RationalFn& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

FermionOp operator*(const FermionOp& a, const FermionOp& b) {
  FermionOp r(std::max(a.n_, b.n_));
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      FWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      for (const auto& [v, c] : normal_order(w, ca * cb)) add_to(r.terms_, v, c);
    }
  return r;
}

bool operator==(const FermionOp& a, const FermionOp& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (const auto& [w, c] : a.terms_) {
    auto it = b.terms_.find(w);
    if (it == b.terms_.end() || it->second != c) return false;
  }
  return true;
}

GrassmannElem FermionOp::apply(const GrassmannElem& e) const {
  GrassmannElem r(std::max(n_, e.n()));
  for (const auto& [w, c] : terms_)
    for (const auto& [m0, c0] : e.terms()) {
      uint32_t m = m0;
      int sign = 1;
      bool dead = false;
      for (auto it = w.rbegin(); it != w.rend() && !dead; ++it) {
        int a = std::abs(*it);
        uint32_t bit = 1u << (a - 1);
        bool occupied = m & bit;
        if ((*it > 0) == occupied) {
          dead = true;
          break;
        }
        if (below_parity(m, a)) sign = -sign;
        m ^= bit;
      }
      if (dead) continue;
      RationalFn v = c * c0;
      r.add_term(m, sign > 0 ? v : -v);
    }
  return r;
}

FermionOp FermionOp::map_coeffs(const std::function<RationalFn(const RationalFn&)>& f) const {
  FermionOp r(n_);
  for (const auto& [w, c] : terms_) add_to(r.terms_, w, f(c));
  return r;
}

std::string FermionOp::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")";
    for (int x : w) s += x > 0 ? "*psi" + std::to_string(x) : "*psi*" + std::to_string(-x);
  }
  return s;
}

LaurentPoly g_basis(int n, int a) {
  if (a < 1 || a > n) throw std::invalid_argument("g_basis index out of range");
  LaurentPoly g(1);
  LaurentPoly X = xvar(1);
  for (int j = 1; j <= n; ++j) {
    if (j < a) g *= LaurentPoly(1) + zvar(j) * X;
    if (j > a) g *= LaurentPoly(1) - zvar(j) * X;
  }
  return g;
}

namespace {

std::mutex g_cache_mutex;
std::map<std::pair<int, uint32_t>, WedgeElem> g_wedge_cache;
std::map<std::pair<int, int>, std::vector<GrassmannElem>> g_inverse_cache;

WedgeElem g_wedge(int n, uint32_t mask) {
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_wedge_cache.find({n, mask});
    if (it != g_wedge_cache.end()) return it->second;
  }
  WedgeElem w = WedgeElem::scalar(n, RationalFn(1));
  for (int a = 1; a <= n; ++a)
    if (mask & (1u << (a - 1))) w = wedge_mul(w, WedgeElem::from_x_poly(n, g_basis(n, a)));
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  g_wedge_cache.emplace(std::make_pair(n, mask), w);
  return w;
}

std::vector<uint32_t> masks_of_size(int n, int l) {
  std::vector<uint32_t> out;
  for (uint32_t m = 0; m < (1u << n); ++m)
    if (std::popcount(m) == l) out.push_back(m);
  return out;
}

}  // namespace

WedgeElem grassmann_to_wedge(const GrassmannElem& e) {
  int n = e.n();
  std::optional<int> l;
  WedgeElem r;
  for (const auto& [m, c] : e.terms()) {
    int lm = std::popcount(m);
    if (l && *l != lm) throw std::invalid_argument("grassmann_to_wedge needs a homogeneous element");
    l = lm;
    r += g_wedge(n, m) * c;
  }
  if (!l) return WedgeElem(n, 0);
  if (r.is_zero()) return WedgeElem(n, *l);
  return r;
}

RatMatrix iso_matrix(int n, int l) {
  std::vector<uint32_t> ms = masks_of_size(n, l);
  RatMatrix m(ms.size(), std::vector<RationalFn>(ms.size()));
  for (size_t c = 0; c < ms.size(); ++c) {
    WedgeElem g = g_wedge(n, ms[c]);
    for (size_t r = 0; r < ms.size(); ++r) m[r][c] = g.coeff_mask(ms[r]);
  }
  return m;
}

GrassmannElem wedge_to_grassmann(const WedgeElem& p) {
  int n = p.n(), l = p.l();
  std::vector<uint32_t> ms = masks_of_size(n, l);
  std::vector<GrassmannElem> inv;
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_inverse_cache.find({n, l});
    if (it != g_inverse_cache.end()) inv = it->second;
  }
  if (inv.empty()) {
    RatMatrix m = iso_matrix(n, l);
    for (size_t r = 0; r < ms.size(); ++r) {
      std::vector<RationalFn> b(ms.size(), RationalFn(0));
      b[r] = RationalFn(1);
      auto x = kn_solve(m, b);
      if (!x) throw std::logic_error("G-basis change is singular");
      GrassmannElem e(n);
      for (size_t c = 0; c < ms.size(); ++c) e.add_term(ms[c], (*x)[c]);
      inv.push_back(e);
    }
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_inverse_cache.emplace(std::make_pair(n, l), inv);
  }
  GrassmannElem out(n);
  for (size_t r = 0; r < ms.size(); ++r) {
    RationalFn c = p.coeff_mask(ms[r]);
    if (!c.is_zero()) out += inv[r] * c;
  }
  return out;
}

FermionSeries expand_op(const FermionOp& op, Point at, int order) {
  FermionSeries out;
  for (const auto& [w, c] : op.terms()) {
    for (const auto& [k, v] : series_expand(c, var::kT, at, order)) {
      auto it = out.find(k);
      if (it == out.end()) it = out.emplace(k, FermionOp(op.n())).first;
      it->second += FermionOp::word(op.n(), w, RationalFn(v));
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

namespace {

LaurentPoly one_minus(int j, long sign = -1) { return LaurentPoly(1) + zvar(j) * tvar() * sign; }

// prod_{lo < j < hi} (1 + z_j t)/(1 - z_j t) as numerator and factor list
void string_factor(int lo, int hi, LaurentPoly& num, std::vector<RationalFn::Factor>& den) {
  for (int j = lo + 1; j < hi; ++j) {
    num *= one_minus(j, 1);
    den.emplace_back(one_minus(j), 1);
  }
}

RationalFn coeff_A(int n, int a) {
  LaurentPoly num = zvar(a) * tvar();
  std::vector<RationalFn::Factor> den{{one_minus(a), 1}};
  string_factor(a, n + 1, num, den);
  return RationalFn(num, den);
}

RationalFn coeff_C(int a, int b) {
  LaurentPoly num = zvar(a) * zvar(b) * tvar(2);
  std::vector<RationalFn::Factor> den{{one_minus(a), 1}, {one_minus(b), 1}};
  string_factor(a, b, num, den);
  return RationalFn(num, den);
}

RationalFn coeff_plus(int a) {
  LaurentPoly num(1);
  std::vector<RationalFn::Factor> den{{one_minus(a), 1}};
  string_factor(0, a, num, den);
  return RationalFn(num, den);
}

RationalFn coeff_plus2(int a, int b) {
  LaurentPoly num(1);
  std::vector<RationalFn::Factor> den{{one_minus(a), 1}, {one_minus(b), 1}};
  string_factor(a, b, num, den);
  return RationalFn(num, den);
}

RationalFn even_part(const RationalFn& f) {
  RationalFn g = f.map_polys([](const LaurentPoly& p) { return p.negate_slot(var::kT); });
  return (f + g) * CycScalar(1, 2);
}

// z_a -> z_{n+1-a}^{+-1}; t -> t^{-1} when invert
LaurentPoly reverse_z(const LaurentPoly& p, int n, bool invert) {
  return p.map_monomials([n, invert](const Mono& m) {
    Mono r = m;
    for (int a = 1; a <= n; ++a) r.set(var::z(n + 1 - a), invert ? -m[var::z(a)] : m[var::z(a)]);
    if (invert) r.set(var::kT, -m[var::kT]);
    return std::make_pair(r, false);
  });
}

}  // namespace

FermionOp halfcurrent_rational(Family f, int n, int l, Point at) {
  FermionOp op(n);
  const CycScalar I = CycScalar::i_power(1);
  switch (f) {
    case Family::XMinus:
      for (int a = 1; a <= n; ++a) op += FermionOp::psi(n, a) * coeff_A(n, a);
      if (at == Point::Infinity) op *= RationalFn(-1);
      return op;
    case Family::XMinus2:
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) op += FermionOp::word(n, {a, b}, coeff_C(a, b) * I);
      return op;
    case Family::XPlus: {
      CycScalar c = -CycScalar::i_power(n - 2 * l - 1);
      if (at == Point::Infinity) c = -c;
      for (int a = 1; a <= n; ++a) op += FermionOp::psi_star(n, a) * (coeff_plus(a) * c);
      return op;
    }
    case Family::XPlus2: {
      CycScalar c = I * CycScalar(n % 2 ? -1 : 1);
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) op += FermionOp::word(n, {-a, -b}, coeff_plus2(a, b) * c);
      return op;
    }
    case Family::APlus: return b_plus_even(n);
    case Family::AMinus: return b_minus_even(n);
  }
  throw std::logic_error("unreachable");
}

FermionOp b_plus_even(int n) {
  FermionOp r(n);
  for (int a = 1; a <= n; ++a) {
    RationalFn c(zvar(a) * tvar(), one_minus(a, 1));
    // sigma^z_a = 1 - 2 psi_a psi*_a
    r += (FermionOp::scalar(n, 1) - FermionOp::word(n, {a, -a}, RationalFn(2))) * c;
  }
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      LaurentPoly num = zvar(a) * tvar() * CycScalar(-4);
      std::vector<RationalFn::Factor> den{{one_minus(a, 1), 1}, {one_minus(b, 1), 1}};
      for (int j = a + 1; j < b; ++j) {
        num *= one_minus(j);
        den.emplace_back(one_minus(j, 1), 1);
      }
      r += FermionOp::word(n, {a, -b}, RationalFn(num, den));
    }
  return r.map_coeffs(even_part);
}

FermionOp b_minus_even(int n) {
  FermionOp r = apply_map(FermionMap::Beta, b_plus_even(n));
  return r * RationalFn(-1);
}

FermionSeries b_odd_series(int n, Point at, int order) {
  FermionSeries out;
  for (int m = 1; m <= order; m += 2) {
    int k = at == Point::Zero ? m : -m;
    out[k] = FermionOp::scalar(n, RationalFn(power_sum(n, k)));
  }
  return out;
}

FermionSeries fermion_halfcurrent(Family f, int n, int l, Point at, int order) {
  FermionSeries s = expand_op(halfcurrent_rational(f, n, l, at), at, order);
  if (f == Family::APlus || f == Family::AMinus) {
    for (auto it = s.begin(); it != s.end();) it = (it->first % 2) ? s.erase(it) : std::next(it);
    for (auto& [k, op] : b_odd_series(n, at, order)) s[k] = op;
  }
  return s;
}

FermionOp apply_map(FermionMap m, const FermionOp& op) {
  int n = op.n();
  FermionOp r(n);
  bool beta = m == FermionMap::Beta;
  for (const auto& [w, c] : op.terms()) {
    RationalFn coef = c.map_polys([n, beta](const LaurentPoly& p) { return reverse_z(p, n, beta); });
    FWord out;
    LaurentPoly scale(1);
    auto image = [&](int x) {
      int a = std::abs(x), b = n + 1 - a;
      if (beta) {
        if (a % 2 == 0) scale = -scale;
        return x > 0 ? -b : b;
      }
      scale *= x > 0 ? zvar(b, -1) : zvar(b);
      return x > 0 ? -b : b;
    };
    if (beta)
      for (int x : w) out.push_back(image(x));
    else
      for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(image(*it));
    r += FermionOp::word(n, out, coef * RationalFn(scale));
  }
  return r;
}

FermionOp t_operator(int n, bool inverse) {
  FermionOp r = FermionOp::scalar(n, 1);
  CycScalar c = CycScalar::i_power(inverse ? -1 : 1);
  for (int a = 1; a <= n; ++a)
    r = r * ((FermionOp::scalar(n, 1) - FermionOp::word(n, {a, -a}, RationalFn(2))) * RationalFn(c));
  return r;
}

FermionOp sigma1(int n) {
  FermionOp r(n);
  for (int a = 1; a <= n; ++a) r += FermionOp::psi(n, a) * RationalFn((n - a) % 2 ? -1 : 1);
  return r;
}

FermionOp sigma2(int n) {
  FermionOp r(n);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) r += FermionOp::word(n, {a, b}, RationalFn((a + b) % 2 ? -1 : 1));
  return r;
}

WedgeElem random_wedge(int n, int l, std::mt19937_64& rng, int max_terms) {
  WedgeElem w(n, l);
  std::vector<uint32_t> ms = masks_of_size(n, l);
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<size_t> pick(0, ms.size() - 1);
  std::uniform_int_distribution<int> coef(-3, 3), expo(0, 2), zi(1, std::max(1, n));
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    LaurentPoly c;
    int mt = nterms(rng);
    for (int j = 0; j < mt; ++j) {
      int v = coef(rng);
      if (v == 0) v = 1;
      LaurentPoly mono(v);
      if (n > 0) mono *= zvar(zi(rng), expo(rng));
      c += mono;
    }
    w.add_term(ms[pick(rng)], RationalFn(c));
  }
  if (w.is_zero()) w.add_term(ms[0], RationalFn(1));
  return w;
}

namespace {

std::pair<int, int> l_range(Family f, int n) {
  switch (f) {
    case Family::XMinus: return {0, n - 1};
    case Family::XMinus2: return {0, n - 2};
    case Family::XPlus: return {1, n};
    case Family::XPlus2: return {2, n};
    default: return {0, n};
  }
}

// scalar r with a = r * b, if one exists
std::optional<CycScalar> proportional(const WedgeElem& a, const WedgeElem& b) {
  if (b.is_zero()) return std::nullopt;
  const auto& [mask, cb] = *b.terms().begin();
  RationalFn r = a.coeff_mask(mask) / cb;
  if (!r.is_poly() || !(r.poly().is_constant() || r.is_zero())) return std::nullopt;
  CycScalar s = r.is_zero() ? CycScalar(0) : r.poly().constant_term();
  if (a != b * s) return std::nullopt;
  return s;
}

}  // namespace

CrossCheckReport cross_check(Family f, int n, int samples, int order, std::mt19937_64& rng,
                             const std::map<int, CycScalar>& expect) {
  CrossCheckReport rep;
  rep.family = f;
  rep.n = n;
  auto [lo, hi] = l_range(f, n);
  if (lo > hi) return rep;
  std::vector<Point> points;
  if (f != Family::AMinus) points.push_back(Point::Zero);
  if (f != Family::APlus) points.push_back(Point::Infinity);
  std::uniform_int_distribution<int> lpick(lo, hi);
  bool split_parity = f == Family::APlus || f == Family::AMinus;
  for (int s = 0; s < samples; ++s) {
    int l = lpick(rng);
    WedgeElem p = random_wedge(n, l, rng);
    GrassmannElem e = wedge_to_grassmann(p);
    bool good = true;
    for (Point at : points) {
      TruncSeries ts = act_series(f, p, at, order);
      FermionSeries fs = fermion_halfcurrent(f, n, l, at, order);
      for (int k = ts.k_min(); k <= ts.k_max(); ++k) {
        WedgeElem q = ts.abstract_coeff(k);
        auto it = fs.find(k);
        WedgeElem o = it == fs.end() ? WedgeElem(n, q.l()) : grassmann_to_wedge(it->second.apply(e));
        std::string where = family_name(f) + " n=" + std::to_string(n) + " l=" + std::to_string(l) +
                            (at == Point::Zero ? " at 0" : " at inf") + " k=" + std::to_string(k);
        if (q.is_zero() && o.is_zero()) continue;
        auto r = proportional(o, q);
        if (!r || r->is_zero()) {
          good = false;
          rep.failures.push_back(where + ": not proportional");
          continue;
        }
        int slot = split_parity && k % 2 == 0 ? 1 : 0;
        auto sc = rep.scalars.find(slot);
        if (sc == rep.scalars.end()) {
          rep.scalars.emplace(slot, *r);
        } else if (sc->second != *r) {
          rep.constant = false;
          good = false;
          rep.failures.push_back(where + ": scalar " + r->str() + " differs from " + sc->second.str());
        }
        auto ex = expect.find(slot);
        if (ex != expect.end() && ex->second != *r) {
          good = false;
          rep.failures.push_back(where + ": scalar " + r->str() + " differs from expected " + ex->second.str());
        }
      }
    }
    ++rep.samples;
    if (good) ++rep.passed;
  }
  return rep;
}

bool kernel_identity_single(int n) {
  RationalFn lhs(0);
  for (int a = 1; a <= n; ++a) lhs += coeff_A(n, a) * RationalFn(g_basis(n, a));
  return lhs == kernel_F(n);
}

bool kernel_identity_double(int n) {
  RationalFn lhs(0);
  auto at = [n](int a, int slot) { return g_basis(n, a).rename_slot(var::x(1), var::x(slot)); };
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      lhs += coeff_C(a, b) * RationalFn((at(a, 1) * at(b, 2) - at(b, 1) * at(a, 2)) * CycScalar(4));
  return lhs == kernel_F2(n);
}

namespace {

GrassmannElem phi(int l, int a) {
  int n = 2 * l;
  GrassmannElem e = GrassmannElem::monomial(n, {a});
  if (a < n) e -= GrassmannElem::monomial(n, {n});
  return e;
}

}  // namespace

bool sigma_phi_decomposition(int l) {
  int n = 2 * l;
  GrassmannElem s1(n), s2(n), st(n);
  for (int a = 1; a <= n; ++a) s1 += GrassmannElem::monomial(n, {a}, RationalFn((n - a) % 2 ? -1 : 1));
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) s2 += GrassmannElem::monomial(n, {a, b}, RationalFn((a + b) % 2 ? -1 : 1));
  GrassmannElem s1phi(n);
  for (int a = 1; a < n; ++a) s1phi += phi(l, a) * RationalFn(a % 2 ? -1 : 1);
  for (int a = 1; a <= n - 2; ++a)
    for (int b = a + 1; b <= n - 2; ++b) st += (phi(l, a) * phi(l, b)) * RationalFn((a + b) % 2 ? -1 : 1);
  GrassmannElem rhs2 = st - s1 * (phi(l, n - 1) - phi(l, n));
  return s1 == s1phi && s2 == rhs2;
}

bool reduced_sigma2_injective(int l) {
  // exterior algebra on m = 2l-2 generators; phi-monomials play the role of basis vectors
  int m = 2 * l - 2;
  GrassmannElem st(m);
  for (int a = 1; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b) st += GrassmannElem::monomial(m, {a, b}, RationalFn((a + b) % 2 ? -1 : 1));
  std::vector<uint32_t> src = masks_of_size(m, l - 2);
  EchelonBasis basis;
  for (uint32_t s : src) {
    GrassmannElem x(m);
    x.add_term(s, RationalFn(1));
    GrassmannElem img = st * x;
    SparseVec v;
    for (const auto& [mask, c] : img.terms()) v[static_cast<int>(mask)] = c.poly().constant_term();
    basis.insert(v);
  }
  return basis.rank() == src.size();
}

}  // namespace qc
