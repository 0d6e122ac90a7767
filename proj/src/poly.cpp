#include "qcycle/poly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace qc {

namespace var {

std::string name(int slot) {
  if (slot < kMaxZ) return "z" + std::to_string(slot + 1);
  if (slot == kZAux) return "z";
  if (slot == kT) return "t";
  if (slot == kU) return "u";
  return "X" + std::to_string(slot - 14);
}

int from_name(const std::string& s) {
  if (s == "z") return kZAux;
  if (s == "t") return kT;
  if (s == "u") return kU;
  if (s.size() > 1 && (s[0] == 'z' || s[0] == 'X')) {
    int k = std::stoi(s.substr(1));
    if (s[0] == 'z' && k >= 1 && k <= kMaxZ) return z(k);
    if (s[0] == 'X' && k >= 1 && k <= kMaxX) return x(k);
  }
  throw std::invalid_argument("unknown variable " + s);
}

bool is_laurent(int slot) { return slot <= kU; }

}  // namespace var

std::size_t Mono::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (int i = 0; i < var::kCount; ++i) {
    h ^= static_cast<uint16_t>(e[i]);
    h *= 1099511628211ull;
  }
  return h;
}

std::string Mono::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < var::kCount; ++i) {
    if (!e[i]) continue;
    if (!first) os << '*';
    os << var::name(i);
    if (e[i] != 1) os << '^' << e[i];
    first = false;
  }
  return first ? "1" : os.str();
}

LaurentPoly::LaurentPoly(const CycScalar& c) {
  if (!c.is_zero()) terms_.emplace_back(Mono{}, c);
}

LaurentPoly::LaurentPoly(const Mono& m, const CycScalar& c) {
  if (!c.is_zero()) terms_.emplace_back(m, c);
}

LaurentPoly LaurentPoly::variable(int slot, int power) {
  return LaurentPoly(Mono::var_pow(slot, power), CycScalar(1));
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  LaurentPoly p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void LaurentPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return mono_greater(a.first, b.first); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else {
      if (!out.empty() && out.back().second.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second.is_zero()) out.pop_back();
  terms_ = std::move(out);
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

CycScalar LaurentPoly::constant_term() const { return coefficient(Mono{}); }

CycScalar LaurentPoly::coefficient(const Mono& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Mono& k) { return mono_greater(t.first, k); });
  if (it != terms_.end() && it->first == m) return it->second;
  return CycScalar();
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

template <bool Sub>
std::vector<LaurentPoly::Term> merge_terms(const std::vector<LaurentPoly::Term>& a,
                                           const std::vector<LaurentPoly::Term>& b) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && mono_greater(a[i].first, b[j].first))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || mono_greater(b[j].first, a[i].first)) {
      out.emplace_back(b[j].first, Sub ? -b[j].second : b[j].second);
      ++j;
    } else {
      CycScalar c = Sub ? a[i].second - b[j].second : a[i].second + b[j].second;
      if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  LaurentPoly r;
  r.terms_ = merge_terms<false>(a.terms_, b.terms_);
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) return a;
  LaurentPoly r;
  r.terms_ = merge_terms<true>(a.terms_, b.terms_);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  terms_ = merge_terms<false>(terms_, o.terms_);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  terms_ = merge_terms<true>(terms_, o.terms_);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  if (a.size() == 1 || b.size() == 1) {
    const LaurentPoly& big = a.size() == 1 ? b : a;
    const LaurentPoly::Term& m = a.size() == 1 ? a.terms_[0] : b.terms_[0];
    r.terms_.reserve(big.size());
    for (const auto& t : big.terms_) r.terms_.emplace_back(t.first * m.first, t.second * m.second);
    // multiplying by a monomial keeps the order
    return r;
  }
  std::unordered_map<Mono, CycScalar, MonoHash> acc;
  acc.reserve(a.size() * b.size() * 2);
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) {
      auto [it, fresh] = acc.try_emplace(x.first * y.first);
      if (fresh)
        it->second = x.second * y.second;
      else
        it->second += x.second * y.second;
    }
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) r.terms_.emplace_back(m, std::move(c));
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const LaurentPoly::Term& p, const LaurentPoly::Term& q) { return mono_greater(p.first, q.first); });
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const CycScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& t : terms_) t.second *= c;
  return *this;
}

LaurentPoly LaurentPoly::mul_mono(const Mono& m) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.first = t.first * m;
  return r;
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power of a polynomial");
  LaurentPoly r(1), b = *this;
  while (k) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

std::pair<int, int> LaurentPoly::degree_range(int slot) const {
  if (terms_.empty()) return {0, 0};
  int lo = terms_[0].first[slot], hi = lo;
  for (const auto& t : terms_) {
    lo = std::min<int>(lo, t.first[slot]);
    hi = std::max<int>(hi, t.first[slot]);
  }
  return {lo, hi};
}

int LaurentPoly::total_degree_max() const { return terms_.empty() ? 0 : terms_[0].first.deg(); }

bool LaurentPoly::uses(int slot) const {
  for (const auto& t : terms_)
    if (t.first[slot]) return true;
  return false;
}

Mono LaurentPoly::min_exponents() const {
  Mono m;
  if (terms_.empty()) return m;
  for (int v = 0; v < var::kCount; ++v) {
    int lo = terms_[0].first[v];
    for (const auto& t : terms_) lo = std::min<int>(lo, t.first[v]);
    m.set(v, lo);
  }
  return m;
}

std::map<int, LaurentPoly> LaurentPoly::split(int slot) const {
  std::map<int, std::vector<Term>> parts;
  for (const auto& t : terms_) {
    Mono m = t.first;
    int k = m[slot];
    m.set(slot, 0);
    parts[k].emplace_back(m, t.second);
  }
  std::map<int, LaurentPoly> out;
  for (auto& [k, v] : parts) out[k] = LaurentPoly::from_terms(std::move(v));
  return out;
}

LaurentPoly LaurentPoly::map_monomials(const std::function<std::pair<Mono, bool>(const Mono&)>& f) const {
  std::vector<Term> v;
  v.reserve(terms_.size());
  for (const auto& t : terms_) {
    auto [m, neg] = f(t.first);
    v.emplace_back(m, neg ? -t.second : t.second);
  }
  return from_terms(std::move(v));
}

LaurentPoly LaurentPoly::swap_slots(int a, int b) const {
  return map_monomials([a, b](const Mono& m) {
    Mono r = m;
    int ea = m[a], eb = m[b];
    r.set(a, eb);
    r.set(b, ea);
    return std::make_pair(r, false);
  });
}

LaurentPoly LaurentPoly::negate_slot(int slot) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_)
    if (t.first[slot] & 1) t.second = -t.second;
  return r;
}

LaurentPoly LaurentPoly::rename_slot(int from, int to) const {
  if (from == to) return *this;
  return map_monomials([from, to](const Mono& m) {
    Mono r = m;
    int k = m[from];
    r.set(from, 0);
    r.set(to, r[to] + k);
    return std::make_pair(r, false);
  });
}

LaurentPoly LaurentPoly::invert_slot(int slot) const {
  return map_monomials([slot](const Mono& m) {
    Mono r = m;
    r.set(slot, -m[slot]);
    return std::make_pair(r, false);
  });
}

bool LaurentPoly::is_polynomial() const {
  for (const auto& t : terms_)
    for (int v = 0; v < var::kCount; ++v)
      if (t.first[v] < 0) return false;
  return true;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string cs = c.str();
    bool simple = c.is_rational();
    bool neg = simple && sgn(c[0]) < 0;
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    std::string body = simple ? mpq_class(abs(c[0])).get_str() : "(" + cs + ")";
    if (m.is_one())
      os << body;
    else if (simple && abs(c[0]) == 1)
      os << m.str();
    else
      os << body << '*' << m.str();
    first = false;
  }
  return os.str();
}

namespace {

bool polynomial_slots_ok(const Mono& m) {
  for (int v = var::kU + 1; v < var::kCount; ++v)
    if (m[v] < 0) return false;
  return true;
}

// a and b are genuine polynomials and no variable divides every term of b
LaurentPoly poly_exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  auto cmp = [](const Mono& x, const Mono& y) { return mono_greater(x, y); };
  std::map<Mono, CycScalar, decltype(cmp)> rem(cmp);
  for (const auto& t : a.terms()) rem.emplace(t.first, t.second);
  const auto& [lb, lc] = b.leading();
  CycScalar lc_inv = lc.inverse();
  std::vector<LaurentPoly::Term> q;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lb.divides(it->first)) throw NonDivisible(it->first.str());
    Mono qm = it->first / lb;
    CycScalar qc = it->second * lc_inv;
    for (const auto& t : b.terms()) {
      Mono m = t.first * qm;
      CycScalar c = t.second * qc;
      auto [jt, fresh] = rem.try_emplace(m);
      if (fresh)
        jt->second = -c;
      else {
        jt->second -= c;
        if (jt->second.is_zero()) rem.erase(jt);
      }
    }
    q.emplace_back(qm, std::move(qc));
  }
  return LaurentPoly::from_terms(std::move(q));
}

}  // namespace

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return LaurentPoly();
  if (b.is_monomial()) {
    const auto& [bm, bc] = b.leading();
    CycScalar inv = bc.inverse();
    std::vector<LaurentPoly::Term> v;
    v.reserve(a.size());
    for (const auto& t : a.terms()) {
      Mono m = t.first / bm;
      if (!polynomial_slots_ok(m)) throw NonDivisible(t.first.str());
      v.emplace_back(m, t.second * inv);
    }
    return LaurentPoly::from_terms(std::move(v));
  }
  Mono ma = a.min_exponents(), mb = b.min_exponents();
  LaurentPoly q = poly_exact_div(a.mul_mono(Mono() / ma), b.mul_mono(Mono() / mb));
  Mono shift = ma / mb;
  q = q.mul_mono(shift);
  for (const auto& t : q.terms())
    if (!polynomial_slots_ok(t.first)) throw NonDivisible(t.first.str());
  return q;
}

std::optional<LaurentPoly> try_exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  try {
    return exact_div(a, b);
  } catch (const NonDivisible&) {
    return std::nullopt;
  }
}

std::pair<LaurentPoly, LaurentPoly> divide_with_remainder(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  auto cmp = [](const Mono& x, const Mono& y) { return mono_greater(x, y); };
  std::map<Mono, CycScalar, decltype(cmp)> rem(cmp);
  for (const auto& t : a.terms()) rem.emplace(t.first, t.second);
  const auto& [lb, lc] = b.leading();
  CycScalar lc_inv = lc.inverse();
  std::vector<LaurentPoly::Term> q, r;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lb.divides(it->first)) {
      r.emplace_back(it->first, it->second);
      rem.erase(it);
      continue;
    }
    Mono qm = it->first / lb;
    CycScalar qc = it->second * lc_inv;
    for (const auto& t : b.terms()) {
      auto [jt, fresh] = rem.try_emplace(t.first * qm);
      CycScalar c = t.second * qc;
      if (fresh)
        jt->second = -c;
      else {
        jt->second -= c;
        if (jt->second.is_zero()) rem.erase(jt);
      }
    }
    q.emplace_back(qm, std::move(qc));
  }
  return {LaurentPoly::from_terms(std::move(q)), LaurentPoly::from_terms(std::move(r))};
}

LaurentPoly poly_arith(const LaurentPoly& a, const LaurentPoly& b, char op) {
  switch (op) {
    case '+': return a + b;
    case '-': return a - b;
    case '*': return a * b;
  }
  throw std::invalid_argument("unknown polynomial operation");
}

}  // namespace qc
