#include "qcycle/ratfn.hpp"

#include <algorithm>

namespace qc {

namespace {

Mono laurent_content(const LaurentPoly& p) {
  Mono m = p.min_exponents();
  for (int v = var::kU + 1; v < var::kCount; ++v) m.set(v, 0);
  return m;
}

}  // namespace

RationalFn::RationalFn(LaurentPoly num, const LaurentPoly& den) : num_(std::move(num)) {
  if (den.is_zero()) throw DivisionByZero();
  add_factor(den, 1);
  cancel();
}

RationalFn::RationalFn(LaurentPoly num, std::vector<Factor> den) : num_(std::move(num)) {
  for (auto& [f, k] : den) {
    if (f.is_zero()) throw DivisionByZero();
    add_factor(f, k);
  }
  cancel();
}

void RationalFn::add_factor(const LaurentPoly& f, int mult) {
  if (mult == 0) return;
  // strip the unit part: Laurent monomial content and leading coefficient
  Mono c = laurent_content(f);
  LaurentPoly g = f.mul_mono(Mono() / c);
  CycScalar lc = g.leading().second;
  if (!lc.is_one()) g *= lc.inverse();
  // num / (unit * g)^mult = (num * unit^-mult) / g^mult
  for (int i = 0; i < mult; ++i) {
    num_ = num_.mul_mono(Mono() / c);
    num_ *= lc.inverse();
  }
  if (g.is_constant()) return;
  for (auto& [h, k] : den_)
    if (h == g) {
      k += mult;
      return;
    }
  den_.emplace_back(std::move(g), mult);
}

void RationalFn::cancel() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto& [f, k] : den_) {
    while (k > 0) {
      auto q = try_exact_div(num_, f);
      if (!q) break;
      num_ = std::move(*q);
      --k;
    }
  }
  den_.erase(std::remove_if(den_.begin(), den_.end(), [](const Factor& x) { return x.second == 0; }), den_.end());
}

LaurentPoly RationalFn::den() const {
  LaurentPoly d(1);
  for (const auto& [f, k] : den_) d *= f.pow(k);
  return d;
}

const LaurentPoly& RationalFn::poly() const {
  if (!den_.empty()) throw std::runtime_error("rational function is not a Laurent polynomial: " + str());
  return num_;
}

RationalFn RationalFn::operator-() const {
  RationalFn r = *this;
  r.num_ = -r.num_;
  return r;
}

namespace {

// multiplicity of each factor in the least common multiple, and the cofactors
struct LcmPlan {
  std::vector<RationalFn::Factor> lcm;
  LaurentPoly cof_a{1}, cof_b{1};
};

LcmPlan plan_lcm(const std::vector<RationalFn::Factor>& a, const std::vector<RationalFn::Factor>& b) {
  LcmPlan p;
  std::vector<bool> used(b.size(), false);
  for (const auto& [f, ka] : a) {
    int kb = 0;
    for (size_t j = 0; j < b.size(); ++j)
      if (!used[j] && b[j].first == f) {
        kb = b[j].second;
        used[j] = true;
        break;
      }
    int k = std::max(ka, kb);
    p.lcm.emplace_back(f, k);
    if (k > ka) p.cof_a *= f.pow(k - ka);
    if (k > kb) p.cof_b *= f.pow(k - kb);
  }
  for (size_t j = 0; j < b.size(); ++j)
    if (!used[j]) {
      p.lcm.push_back(b[j]);
      p.cof_a *= b[j].first.pow(b[j].second);
    }
  return p;
}

}  // namespace

RationalFn& RationalFn::operator+=(const RationalFn& o) {
  if (o.is_zero()) return *this;
  if (den_.empty() && o.den_.empty()) {
    num_ += o.num_;
    return *this;
  }
  if (is_zero()) return *this = o;
  LcmPlan p = plan_lcm(den_, o.den_);
  num_ = num_ * p.cof_a + o.num_ * p.cof_b;
  den_ = std::move(p.lcm);
  cancel();
  return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& o) { return *this += -o; }

RationalFn& RationalFn::operator*=(const RationalFn& o) {
  if (is_zero() || o.is_zero()) {
    num_ = LaurentPoly();
    den_.clear();
    return *this;
  }
  num_ *= o.num_;
  if (o.den_.empty()) {
    if (!den_.empty()) cancel();
    return *this;
  }
  for (const auto& [f, k] : o.den_) {
    bool found = false;
    for (auto& [g, m] : den_)
      if (g == f) {
        m += k;
        found = true;
        break;
      }
    if (!found) den_.emplace_back(f, k);
  }
  cancel();
  return *this;
}

RationalFn& RationalFn::operator*=(const CycScalar& c) {
  num_ *= c;
  if (num_.is_zero()) den_.clear();
  return *this;
}

RationalFn RationalFn::inverse() const {
  if (is_zero()) throw DivisionByZero();
  RationalFn r;
  r.num_ = LaurentPoly(1);
  for (const auto& [f, k] : den_) r.num_ *= f.pow(k);
  r.add_factor(num_, 1);
  r.cancel();
  return r;
}

RationalFn& RationalFn::operator/=(const RationalFn& o) {
  if (o.is_poly() && o.num_.is_monomial()) {
    const auto& [m, c] = o.num_.leading();
    bool unit = true;
    for (int v = var::kU + 1; v < var::kCount; ++v)
      if (m[v]) unit = false;
    if (unit) {
      num_ = num_.mul_mono(Mono() / m);
      num_ *= c.inverse();
      return *this;
    }
  }
  return *this *= o.inverse();
}

bool operator==(const RationalFn& a, const RationalFn& b) {
  if (a.den_.empty() && b.den_.empty()) return a.num_ == b.num_;
  return a.num_ * b.den() == b.num_ * a.den();
}

RationalFn RationalFn::map_polys(const std::function<LaurentPoly(const LaurentPoly&)>& f) const {
  std::vector<Factor> d;
  d.reserve(den_.size());
  for (const auto& [g, k] : den_) d.emplace_back(f(g), k);
  return RationalFn(f(num_), std::move(d));
}

std::string RationalFn::str() const {
  if (den_.empty()) return num_.str();
  std::string s = "(" + num_.str() + ")/(";
  bool first = true;
  for (const auto& [f, k] : den_) {
    if (!first) s += "*";
    s += "(" + f.str() + ")";
    if (k != 1) s += "^" + std::to_string(k);
    first = false;
  }
  return s + ")";
}

namespace {

struct PowerCache {
  RationalFn base;
  std::vector<RationalFn> pw{RationalFn(1)};
  const RationalFn& get(int k) {
    while (static_cast<int>(pw.size()) <= k) pw.push_back(pw.back() * base);
    return pw[k];
  }
};

}  // namespace

RationalFn substitute(const LaurentPoly& p, const Bindings& b) {
  if (b.empty() || p.is_zero()) return RationalFn(p);
  // Monomial replacements on Laurent slots stay polynomial; others are handled by clearing.
  std::map<int, PowerCache> caches;
  std::map<int, PowerCache> inv_caches;
  for (const auto& [slot, val] : b) {
    if (val.is_zero() && var::is_laurent(slot))
      throw std::domain_error("substituting zero into Laurent variable " + var::name(slot));
    caches[slot].base = val;
  }
  RationalFn acc;
  // group terms by their bound-slot exponent pattern
  std::map<std::vector<int>, std::vector<LaurentPoly::Term>> groups;
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> key;
    Mono rest = m;
    for (const auto& [slot, val] : b) {
      key.push_back(m[slot]);
      rest.set(slot, 0);
    }
    groups[key].emplace_back(rest, c);
  }
  for (auto& [key, terms] : groups) {
    RationalFn factor(1);
    size_t i = 0;
    for (const auto& [slot, val] : b) {
      int e = key[i++];
      if (e > 0)
        factor *= caches[slot].get(e);
      else if (e < 0) {
        auto& ic = inv_caches[slot];
        if (ic.pw.size() == 1) ic.base = val.inverse();
        factor *= ic.get(-e);
      }
    }
    acc += factor * RationalFn(LaurentPoly::from_terms(std::move(terms)));
  }
  return acc;
}

RationalFn substitute(const RationalFn& f, const Bindings& b) {
  RationalFn r = substitute(f.num(), b);
  for (const auto& [g, k] : f.den_factors()) {
    RationalFn d = substitute(g, b);
    if (d.is_zero()) throw DivisionByZero();
    for (int i = 0; i < k; ++i) r /= d;
  }
  return r;
}

LaurentPoly substitute_poly(const LaurentPoly& p, const std::map<int, LaurentPoly>& b) {
  Bindings rb;
  for (const auto& [k, v] : b) rb[k] = RationalFn(v);
  return substitute(p, rb).poly();
}

std::map<int, LaurentPoly> series_expand(const RationalFn& f, int slot, Point at, int order) {
  RationalFn g = f;
  if (at == Point::Infinity) g = f.map_polys([slot](const LaurentPoly& p) { return p.invert_slot(slot); });
  std::map<int, LaurentPoly> nparts = g.num().split(slot);
  std::map<int, LaurentPoly> dparts = g.den().split(slot);
  std::map<int, LaurentPoly> out;
  if (nparts.empty()) return out;
  int nlo = nparts.begin()->first, dlo = dparts.begin()->first;
  const LaurentPoly& d0 = dparts.begin()->second;
  if (!d0.is_monomial()) throw NotExpandable("denominator is not a unit at the expansion point");
  for (int v = var::kU + 1; v < var::kCount; ++v)
    if (d0.leading().first[v]) throw NotExpandable("denominator is not a unit at the expansion point");
  int shift = nlo - dlo;
  int kmax = order - shift;
  std::vector<LaurentPoly> c;
  for (int k = 0; k <= kmax; ++k) {
    LaurentPoly acc;
    auto it = nparts.find(nlo + k);
    if (it != nparts.end()) acc = it->second;
    for (int i = 1; i <= k; ++i) {
      auto jt = dparts.find(dlo + i);
      if (jt != dparts.end() && !c[k - i].is_zero()) acc -= jt->second * c[k - i];
    }
    c.push_back(exact_div(acc, d0));
    if (!c.back().is_zero()) out[at == Point::Zero ? shift + k : -(shift + k)] = c.back();
  }
  return out;
}

}  // namespace qc
