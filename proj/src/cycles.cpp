#include "qcycle/cycles.hpp"

#include <algorithm>
#include <numeric>

namespace qc {

namespace {

LaurentPoly x_mono(const std::vector<int>& e) {
  Mono m;
  for (size_t i = 0; i < e.size(); ++i) m.set(var::x(static_cast<int>(i) + 1), e[i]);
  return LaurentPoly(m, CycScalar(1));
}

std::string witness_of(const LaurentPoly& d) {
  if (d.is_zero()) return "";
  const auto& [m, c] = d.leading();
  return c.str() + "*" + m.str();
}

int perm_sign(const std::vector<int>& p) {
  int inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

// monomial substitution: each listed slot goes to sign * (aux z)^power per unit exponent
struct SlotRule {
  int slot;
  int aux_power;  // X -> z^{-1} is -1, z_j -> +-z is +1
  bool negate;
};

LaurentPoly apply_rules(const LaurentPoly& p, const std::vector<SlotRule>& rules) {
  return p.map_monomials([&rules](const Mono& m) {
    Mono r = m;
    bool neg = false;
    for (const auto& rule : rules) {
      int e = m[rule.slot];
      if (!e) continue;
      r.set(rule.slot, 0);
      r.set(var::kZAux, r[var::kZAux] + rule.aux_power * e);
      if (rule.negate && (e & 1)) neg = !neg;
    }
    return std::make_pair(r, neg);
  });
}

LaurentPoly one_minus_xz(int a) {
  return LaurentPoly(1) - xvar(a, 2) * zaux(2);
}

}  // namespace

LaurentPoly to_full_poly(const WedgeElem& p) {
  LaurentPoly r;
  for (const auto& [e, c] : expand(p).terms) r += x_mono(e) * c.poly();
  return r;
}

LaurentPoly skew_full(const LaurentPoly& f, int k) {
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 1);
  LaurentPoly r;
  do {
    LaurentPoly g = f.map_monomials([&perm, k](const Mono& m) {
      Mono o = m;
      for (int a = 1; a <= k; ++a) o.set(var::x(perm[a - 1]), m[var::x(a)]);
      return std::make_pair(o, false);
    });
    r += perm_sign(perm) > 0 ? g : -g;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return r;
}

namespace {

// sum_e z^{-e} sign^e Q_e with coefficient rules applied
WedgeElem specialize_last(const std::map<int, WedgeElem>& parts, int n, int l, bool negate,
                          const std::vector<SlotRule>& rules) {
  WedgeElem out(n, l);
  for (const auto& [e, q] : parts) {
    LaurentPoly f = zaux(-e) * CycScalar(negate && (e & 1) ? -1 : 1);
    for (const auto& [mask, c] : q.terms()) out.add_term(mask, RationalFn(apply_rules(c.poly(), rules) * f));
  }
  return out;
}

std::string wedge_witness(const WedgeElem& d) {
  if (d.is_zero()) return "";
  const auto& [mask, c] = *d.terms().begin();
  std::string s = "X^{";
  for (int x : mask_subset(mask)) s += std::to_string(x) + ",";
  s.back() = '}';
  if (mask == 0) s = "1";
  return s + ": " + witness_of(c.poly());
}

}  // namespace

LinkPair link_check(const WedgeElem& low, const WedgeElem& high) {
  if (high.n() != low.n() + 2 || high.l() != low.l() + 1)
    throw std::invalid_argument("link_check: shapes (n, l) and (n+2, l+1) expected");
  int n = low.n(), l = low.l();
  LinkPair lp{low, high, false, ""};
  if (!low.has_poly_coeffs() || !high.has_poly_coeffs()) throw std::invalid_argument("link_check: rational coefficients");
  WedgeElem lhs = high.is_zero() ? WedgeElem(n + 2, l)
                                 : specialize_last(contract_last(high), n + 2, l, false,
                                                   {{var::z(n + 1), 1, false}, {var::z(n + 2), 1, true}});
  // z^{-n-1} prod_a (1 - X_a^2 z^2) P_low: add 2 to r of the exponents, weight (-z^2)^r
  WedgeElem rhs(n + 2, l);
  for (const auto& [mask, c] : low.terms()) {
    Subset s = mask_subset(mask);
    for (uint32_t t = 0; t < (1u << l); ++t) {
      Subset e = s;
      int r = 0;
      for (int j = 0; j < l; ++j)
        if (t & (1u << j)) {
          e[j] += 2;
          ++r;
        }
      Subset sorted = e;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
      LaurentPoly f = zaux(2 * r - n - 1) * CycScalar(r % 2 ? -1 : 1);
      rhs += WedgeElem::basis(n + 2, e, c * RationalFn(f));
    }
  }
  WedgeElem d = lhs - rhs;
  lp.verified = d.is_zero();
  lp.witness = wedge_witness(d);
  return lp;
}

LinkLift extract_link_lift(const LinkPair& link) {
  if (!link.verified) throw std::invalid_argument("extract_link_lift needs a verified link");
  int n = link.low.n(), l = link.low.l();
  LaurentPoly low = to_full_poly(link.low);
  LaurentPoly high = apply_rules(to_full_poly(link.high), {{var::z(n + 1), 1, false}, {var::z(n + 2), 1, true}});
  LaurentPoly prod_l(1);
  for (int a = 1; a <= l; ++a) prod_l *= one_minus_xz(a);
  LaurentPoly tower = xvar(l + 1, n + 1) * low;
  mpz_class lfact = 1;
  for (int a = 2; a <= l; ++a) lfact *= a;
  CycScalar inv_lfact(mpq_class(1, 1) / mpq_class(lfact));
  LaurentPoly rest = high - skew_full(tower * prod_l, l + 1) * inv_lfact;
  LaurentPoly q = exact_div(rest, prod_l * one_minus_xz(l + 1));
  LinkLift ps{n, l, tower + one_minus_xz(l + 1) * q * CycScalar(1, l + 1)};
  // post-checks
  if (skew_full(prod_l * ps.poly, l + 1) * inv_lfact != high)
    throw std::logic_error("link lift does not reproduce the upper component");
  LaurentPoly spec = apply_rules(ps.poly, {{var::x(l + 1), -1, false}});
  if (spec != low * zaux(-n - 1)) throw std::logic_error("link lift does not specialize to the lower component");
  return ps;
}

MinimalityResult is_weakly_minimal(const WedgeElem& p) {
  int n = p.n(), l = p.l();
  if (l < 2 || n < 2 || p.is_zero()) return {};
  std::vector<SlotRule> rules{{var::z(n - 1), 1, false}, {var::z(n), 1, true}};
  WedgeElem out(n, l - 2);
  for (const auto& [ef, r] : contract_last_two(p)) {
    auto [e, f] = ef;
    LaurentPoly g = zaux(-e - f) * CycScalar(f % 2 ? -1 : 1);
    for (const auto& [mask, c] : r.terms()) out.add_term(mask, RationalFn(apply_rules(c.poly(), rules) * g));
  }
  return {out.is_zero(), wedge_witness(out)};
}

MinimalityResult is_minimal(const WedgeElem& p) {
  int n = p.n(), l = p.l();
  if (l < 1 || n < 2 || p.is_zero()) return {};
  WedgeElem out = specialize_last(contract_last(p), n, l - 1, false, {{var::z(n - 1), 1, false}, {var::z(n), 1, true}});
  return {out.is_zero(), wedge_witness(out)};
}

std::map<int, WedgeElem> normalize_components(int weight, std::map<int, WedgeElem> comps) {
  std::map<int, WedgeElem> out;
  for (auto& [n, c] : comps) {
    if ((n - weight) % 2 != 0 || n < 0) throw std::invalid_argument("component index has the wrong parity");
    int l = (n - weight) / 2;
    if (l < 0 || l > n) {
      if (!c.is_zero()) throw std::invalid_argument("nonzero component outside the admissible range");
      continue;
    }
    if (c.is_zero())
      out.emplace(n, WedgeElem(n, l));
    else if (c.n() != n || c.l() != l)
      throw std::invalid_argument("component shape does not match its index");
    else
      out.emplace(n, std::move(c));
  }
  return out;
}

bool all_links(int weight, const std::map<int, WedgeElem>& comps, std::string* witness) {
  (void)weight;
  for (auto it = comps.begin(); it != comps.end(); ++it) {
    auto nx = std::next(it);
    if (nx == comps.end()) break;
    if (nx->first != it->first + 2) continue;
    LinkPair lp = link_check(it->second, nx->second);
    if (!lp.verified) {
      if (witness) *witness = "n=" + std::to_string(it->first) + ": " + lp.witness;
      return false;
    }
  }
  return true;
}

InfCycle::InfCycle(int weight, std::map<int, WedgeElem> components)
    : weight_(weight), comps_(normalize_components(weight, std::move(components))) {
  for (auto it = comps_.begin(); it != comps_.end(); ++it) {
    if (!it->second.is_deformed_cycle() && !it->second.is_zero())
      throw LinkFailure("component n=" + std::to_string(it->first) + " is not a deformed cycle");
    auto nx = std::next(it);
    if (nx != comps_.end() && nx->first != it->first + 2) throw std::invalid_argument("window has a gap");
  }
  std::string w;
  if (!all_links(weight_, comps_, &w)) throw LinkFailure("link certificate failed at " + w);
}

std::optional<mpq_class> InfCycle::degree() const {
  std::optional<mpq_class> d;
  for (const auto& [n, c] : comps_) {
    if (c.is_zero()) continue;
    BiGrading g = bigrade(c);
    if (!g.deg0) return std::nullopt;
    mpq_class v = mpq_class(n * n, 4) + *g.deg0;
    v.canonicalize();
    if (d && *d != v) return std::nullopt;
    d = v;
  }
  return d;
}

bool InfCycle::reverify() const {
  for (const auto& [n, c] : comps_)
    if (!c.is_zero() && !c.is_deformed_cycle()) return false;
  return all_links(weight_, comps_);
}

InfCycle distinguished_cycle(int m, int n_max) {
  if (m < 0) throw std::invalid_argument("distinguished cycles need m >= 0");
  std::map<int, WedgeElem> comps;
  for (int n = m; n <= n_max; n += 2) {
    int l = (n - m) / 2;
    Subset s;
    for (int j = 1; j <= l; ++j) s.push_back(m + 2 * j - 1);
    comps.emplace(n, l == 0 ? WedgeElem::scalar(n, RationalFn(1)) : WedgeElem::basis(n, s));
  }
  return InfCycle(m, std::move(comps));
}

InfCycle act_on_cycle(const Word& w, const InfCycle& p) {
  int shift = 0;
  for (const auto& g : w) shift += g.weight_shift();
  int weight = p.weight() + shift;
  std::map<int, WedgeElem> comps;
  for (const auto& [n, c] : p.components()) {
    int l = (n - weight) / 2;
    if (l < 0 || l > n) continue;
    WedgeElem r = c.is_zero() ? WedgeElem(n, l) : apply_word(w, c);
    comps.emplace(n, r.is_zero() ? WedgeElem(n, l) : r);
  }
  return InfCycle(weight, std::move(comps));
}

WedgeElem schur_component(int k, int l) {
  int n = 2 * k + 2 * l, half = k + l;
  WedgeElem w(n, k);
  // sum over a_1 < ... < a_k < half of S_(2(k-1),...,0 | 2a_k,...,2a_1) X^{2a_1} ^ ... ^ X^{2a_k}
  std::vector<int> arms;
  for (int r = k - 1; r >= 0; --r) arms.push_back(2 * r);
  for (uint32_t mask = 0; mask < (1u << half); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    Subset a = mask_subset(mask);
    std::vector<int> legs;
    for (auto it = a.rbegin(); it != a.rend(); ++it) legs.push_back(2 * *it);
    Subset xs;
    for (int x : a) xs.push_back(2 * x);
    w += WedgeElem::basis(n, xs, RationalFn(schur_frobenius(n, arms, legs)));
  }
  if ((k * (k - 1) / 2) % 2) w = -w;
  Subset odd;
  for (int j = 1; j <= half; ++j) odd.push_back(2 * j - 1);
  WedgeElem tail = WedgeElem::basis(n, odd);
  return wedge_mul(w, tail) * CycScalar::zeta_power(k * k);
}

SchurReport verify_schur_formula(int k, int l_max) {
  SchurReport rep;
  rep.k = k;
  Word word;
  // applied right to left: x-_1 acts first
  for (int j = k; j >= 1; --j) word.push_back({ModeKind::XMinus, 2 * j - 1});
  InfCycle one = distinguished_cycle(0, 2 * k + 2 * l_max);
  InfCycle out = act_on_cycle(word, one);
  std::optional<CycScalar> first;
  for (int l = 0; l <= l_max; ++l) {
    int n = 2 * k + 2 * l;
    WedgeElem closed = schur_component(k, l);
    const WedgeElem& got = out.component(n);
    if (closed.is_zero() || got.is_zero()) {
      rep.proportional = false;
      continue;
    }
    const auto& [mask, c] = *closed.terms().begin();
    RationalFn r = got.coeff_mask(mask) / c;
    if (!r.is_poly() || !r.poly().is_constant() || got != closed * r.poly().constant_term()) {
      rep.proportional = false;
      continue;
    }
    CycScalar s = r.poly().constant_term();
    rep.scalars.emplace(n, s);
    if (first && *first != s) rep.constant = false;
    if (!first) first = s;
  }
  return rep;
}

int example_tower_weight(const std::string& name) {
  if (name == "identity" || name == "Tz" || name == "Tzbar") return 0;
  if (name == "jplus" || name == "jminus") return 2;
  throw std::invalid_argument("unknown tower: " + name);
}

std::map<int, WedgeElem> example_tower(const std::string& name, int n_max) {
  std::map<int, WedgeElem> out;
  if (name == "identity") return distinguished_cycle(0, n_max).components();
  auto prod_inv = [](int n) {
    Mono m;
    for (int j = 1; j <= n; ++j) m.set(var::z(j), -1);
    return LaurentPoly(m, CycScalar(1));
  };
  if (name == "jplus" || name == "jminus") {
    for (int n = 2; n <= n_max; n += 2) {
      int l = (n - 2) / 2;
      Subset s;
      if (name == "jplus") {
        for (int j = 1; j <= l; ++j) s.push_back(2 * j - 1);
        out.emplace(n, WedgeElem::basis(n, s, RationalFn(prod_inv(n) * CycScalar(l % 2 ? -1 : 1))));
      } else {
        for (int j = 1; j <= l; ++j) s.push_back(2 * j + 1);
        out.emplace(n, WedgeElem::basis(n, s));
      }
    }
    return out;
  }
  if (name == "Tz" || name == "Tzbar") {
    for (int n = 2; n <= n_max; n += 2) {
      int l = n / 2;
      Subset s{0};
      if (name == "Tz") {
        for (int j = 2; j <= l; ++j) s.push_back(2 * j - 1);
        out.emplace(n, WedgeElem::basis(n, s, RationalFn(power_sum(n, 1))));
      } else {
        for (int j = 1; j <= l - 1; ++j) s.push_back(2 * j - 1);
        LaurentPoly c = prod_inv(n) * power_sum(n, -1) * CycScalar(l % 2 ? 1 : -1);
        out.emplace(n, WedgeElem::basis(n, s, RationalFn(c)));
      }
    }
    return out;
  }
  throw std::invalid_argument("unknown tower: " + name);
}

}  // namespace qc
