#include "qcycle/orbit.hpp"

#include "qcycle/fermion.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace qc {

SparseVec CoordIndex::encode(const WedgeElem& p) {
  SparseVec v;
  for (const auto& [mask, c] : p.terms())
    for (const auto& [m, s] : c.poly().terms()) {
      auto key = std::make_pair(mask, m);
      auto it = index_.find(key);
      if (it == index_.end()) {
        it = index_.emplace(key, static_cast<int>(keys_.size())).first;
        keys_.push_back(key);
      }
      v[it->second] += s;
    }
  for (auto it = v.begin(); it != v.end();) it = it->second.is_zero() ? v.erase(it) : std::next(it);
  return v;
}

std::optional<SparseVec> CoordIndex::encode_existing(const WedgeElem& p) const {
  SparseVec v;
  for (const auto& [mask, c] : p.terms())
    for (const auto& [m, s] : c.poly().terms()) {
      auto it = index_.find(std::make_pair(mask, m));
      if (it == index_.end()) return std::nullopt;
      v[it->second] += s;
    }
  return v;
}

WedgeElem CoordIndex::decode(int n, int l, const SparseVec& v) const {
  WedgeElem w(n, l);
  for (const auto& [i, s] : v) {
    const auto& [mask, m] = keys_.at(i);
    w.add_term(mask, RationalFn(LaurentPoly(m, s)));
  }
  return w;
}

namespace {

std::vector<uint32_t> masks_of_size(int n, int l) {
  std::vector<uint32_t> out;
  if (l < 0 || l > n) return out;
  for (uint32_t m = 0; m < (1u << n); ++m)
    if (std::popcount(m) == l) out.push_back(m);
  return out;
}

std::vector<RationalFn> column(const WedgeElem& p, const std::vector<uint32_t>& rows) {
  std::vector<RationalFn> c;
  c.reserve(rows.size());
  for (uint32_t m : rows) c.push_back(p.coeff_mask(m));
  return c;
}

// subsets of {1..n} of size k, as psi index lists
std::vector<Subset> psi_subsets(int n, int k) {
  std::vector<Subset> out;
  for (uint32_t m : masks_of_size(n, k)) {
    Subset s;
    for (int a : mask_subset(m)) s.push_back(a + 1);
    out.push_back(s);
  }
  return out;
}

}  // namespace

NullSpan null_span(int n, int l, std::mt19937_64* shuffle_rng) {
  NullSpan ns;
  ns.n = n;
  ns.l = l;
  if (l >= 1) {
    FermionOp s1 = sigma1(n);
    for (const auto& s : psi_subsets(n, l - 1)) {
      WedgeElem g = grassmann_to_wedge(s1.apply(GrassmannElem::monomial(n, s)));
      if (!g.is_zero()) ns.generators.push_back(g);
    }
  }
  if (l >= 2) {
    FermionOp s2 = sigma2(n);
    for (const auto& s : psi_subsets(n, l - 2)) {
      WedgeElem g = grassmann_to_wedge(s2.apply(GrassmannElem::monomial(n, s)));
      if (!g.is_zero()) ns.generators.push_back(g);
    }
  }
  if (shuffle_rng) std::shuffle(ns.generators.begin(), ns.generators.end(), *shuffle_rng);
  std::vector<uint32_t> rows = masks_of_size(n, l);
  ns.matrix.assign(rows.size(), std::vector<RationalFn>(ns.generators.size()));
  for (size_t j = 0; j < ns.generators.size(); ++j) {
    auto c = column(ns.generators[j], rows);
    for (size_t i = 0; i < rows.size(); ++i) ns.matrix[i][j] = c[i];
  }
  ns.rank = ns.generators.empty() ? 0 : kn_rank(ns.matrix);
  return ns;
}

bool in_null_span(const NullSpan& ns, const WedgeElem& p) {
  if (p.is_zero()) return true;
  if (ns.generators.empty()) return false;
  return kn_solve(ns.matrix, column(p, masks_of_size(ns.n, ns.l))).has_value();
}

GradedComponentBasis null_subspace(int n, int l, int deg0, std::mt19937_64* shuffle_rng) {
  GradedComponentBasis out;
  out.n = n;
  out.l = l;
  out.deg0 = deg0;
  NullSpan ns = null_span(n, l, shuffle_rng);
  std::vector<uint32_t> rows = masks_of_size(n, l);

  // unknowns: symmetric monomial times X^S with total degree deg0
  std::vector<WedgeElem> unknowns;
  for (uint32_t mask : rows) {
    int e = deg0;
    for (int s : mask_subset(mask)) e += s;
    for (const auto& lam : partitions(e, n))
      unknowns.push_back(WedgeElem::basis(n, mask_subset(mask), RationalFn(monomial_symmetric(n, lam))));
  }
  if (unknowns.empty()) return out;

  // annihilators of the span
  std::vector<std::vector<LaurentPoly>> ann;
  if (ns.generators.empty()) {
    for (size_t i = 0; i < rows.size(); ++i) {
      std::vector<LaurentPoly> y(rows.size());
      y[i] = LaurentPoly(1);
      ann.push_back(y);
    }
  } else {
    ann = kn_nullspace(transpose(ns.matrix));
  }

  std::vector<SparseVec> eqs;
  for (const auto& y : ann) {
    std::map<std::array<int16_t, 24>, SparseVec> by_mono;
    for (size_t u = 0; u < unknowns.size(); ++u) {
      LaurentPoly val;
      for (size_t i = 0; i < rows.size(); ++i) {
        const RationalFn& c = unknowns[u].coeff_mask(rows[i]);
        if (!c.is_zero() && !y[i].is_zero()) val += y[i] * c.poly();
      }
      for (const auto& [m, s] : val.terms()) by_mono[m.e][static_cast<int>(u)] += s;
    }
    for (auto& [m, row] : by_mono) {
      for (auto it = row.begin(); it != row.end();) it = it->second.is_zero() ? row.erase(it) : std::next(it);
      if (!row.empty()) eqs.push_back(std::move(row));
    }
  }
  std::vector<SparseVec> sol = scalar_nullspace(eqs, static_cast<int>(unknowns.size()));

  // canonical form in monomial coordinates, fixed by the unknown order
  CoordIndex idx;
  for (const auto& u : unknowns) idx.encode(u);
  EchelonBasis eb;
  for (const auto& v : sol) {
    WedgeElem w(n, l);
    for (const auto& [u, s] : v) w += unknowns[u] * s;
    eb.insert(idx.encode(w));
  }
  for (const auto& row : eb.canonical()) out.basis.push_back(idx.decode(n, l, row));
  return out;
}

ModNullResult member_mod_null(const WedgeElem& p, const WedgeElem& target) {
  if (p.n() != target.n() || p.l() != target.l()) throw std::invalid_argument("mod-null: shape mismatch");
  ModNullResult r;
  NullSpan ns = null_span(p.n(), p.l());
  r.generators = ns.generators;
  WedgeElem d = p - target;
  if (d.is_zero()) {
    r.member = true;
    r.combination.assign(ns.generators.size(), RationalFn(0));
    return r;
  }
  if (ns.generators.empty()) return r;
  auto sol = kn_solve(ns.matrix, column(d, masks_of_size(p.n(), p.l())));
  if (sol) {
    r.member = true;
    r.combination = std::move(*sol);
  }
  return r;
}

bool vanishing_at_zero_in_null_span(int l) {
  int n = 2 * l;
  NullSpan ns = null_span(n, l);
  for (uint32_t mask : masks_of_size(n, l)) {
    if (mask & 1u) continue;
    if (!in_null_span(ns, WedgeElem::basis(n, mask_subset(mask)))) return false;
  }
  return true;
}

bool TowerModNull::ok() const {
  if (!scalar || member.empty()) return false;
  for (const auto& [n, m] : member)
    if (!m) return false;
  return true;
}

TowerModNull compare_mod_null(const std::map<int, WedgeElem>& lhs, const std::map<int, WedgeElem>& rhs,
                              const CycScalar& c) {
  TowerModNull r;
  r.scalar = c;
  std::vector<int> ns;
  for (const auto& [n, w] : lhs) ns.push_back(n);
  for (const auto& [n, w] : rhs)
    if (!lhs.count(n)) ns.push_back(n);
  for (int n : ns) {
    auto li = lhs.find(n);
    auto ri = rhs.find(n);
    WedgeElem a = li == lhs.end() ? WedgeElem() : li->second;
    WedgeElem b = ri == rhs.end() ? WedgeElem() : ri->second;
    WedgeElem d = b.is_zero() ? a : a.is_zero() ? -(b * c) : a - b * c;
    r.exact[n] = d.is_zero();
    r.member[n] = d.is_zero() || in_null_span(null_span(d.n(), d.l()), d);
  }
  return r;
}

std::optional<CycScalar> fit_scalar_mod_null(const WedgeElem& lhs, const WedgeElem& rhs) {
  NullSpan ns = null_span(lhs.n(), lhs.l());
  std::vector<uint32_t> rows = masks_of_size(lhs.n(), lhs.l());
  RatMatrix m = ns.matrix;
  auto rc = column(rhs, rows);
  if (m.empty()) m.assign(rows.size(), {});
  for (size_t i = 0; i < rows.size(); ++i) m[i].push_back(rc[i]);
  // the rhs column must be independent of the span for the scalar to be determined
  if (kn_rank(m) == ns.rank) return std::nullopt;
  auto sol = kn_solve(m, column(lhs, rows));
  if (!sol) return std::nullopt;
  const RationalFn& c = sol->back();
  if (!c.is_poly() || !c.poly().is_constant()) return std::nullopt;
  return c.poly().constant_term();
}

std::vector<GenMode> positive_generators(int K) {
  std::vector<GenMode> g;
  for (int k = 0; k <= K; ++k) g.push_back({ModeKind::XMinus, k});
  g.push_back({ModeKind::XMinus2, 0});
  for (int k = 1; k <= K; ++k) g.push_back({ModeKind::XMinus2Series, k});
  for (int m = 1; m <= K; ++m) g.push_back({ModeKind::ATilde, m});
  for (int k = 0; k <= K; ++k) g.push_back({ModeKind::XPlus, k});
  g.push_back({ModeKind::T1, 1});
  return g;
}

OrbitReport generate_W(int N, int D, int K) {
  if (K < 0) K = D;
  OrbitReport rep;
  rep.N = N;
  rep.D = D;
  rep.K = K;
  rep.complete = K >= D;
  std::vector<GenMode> gens = positive_generators(K);
  CoordIndex idx;
  std::map<Bigrade, EchelonBasis> bases;
  struct Item {
    OrbitElement e;
    int depth;
  };
  std::deque<Item> queue;

  auto offer = [&](const Word& w, const WedgeElem& v, int depth) {
    if (v.is_zero()) return;
    BiGrading bg = bigrade(v);
    if (!bg.deg0) throw std::runtime_error("orbit element is not homogeneous: " + word_str(w));
    if (*bg.deg0 > D) return;
    Bigrade key{*bg.deg0, v.weight()};
    if (!bases[key].insert(idx.encode(v))) return;
    rep.spanning[key].push_back({w, v});
    queue.push_back({{w, v}, depth});
    rep.rounds = std::max(rep.rounds, depth);
  };

  offer({}, WedgeElem::scalar(N, RationalFn(1)), 0);
  while (!queue.empty()) {
    Item it = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      int target_l = it.e.value.l() - g.weight_shift() / 2;
      if (target_l < 0 || target_l > N) continue;
      Word w{g};
      w.insert(w.end(), it.e.word.begin(), it.e.word.end());
      offer(w, apply_mode(g, it.e.value), it.depth + 1);
    }
  }
  for (const auto& [k, b] : bases) rep.dims[k] = static_cast<int>(b.rank());
  return rep;
}

std::pair<Word, CycScalar> extremal_word(int N) {
  int i = N % 2;
  Word w;
  long sign = 1;
  for (int m = N - 2; m >= i; m -= 2) {
    w.push_back({ModeKind::XPlus, m + 1});
    if ((m + 1) % 2) sign = -sign;
  }
  return {w, CycScalar(sign)};
}

LiftReport verify_grW_iso(int N, int D) {
  LiftReport rep;
  rep.N = N;
  rep.D = D;
  OrbitReport orb = generate_W(N, D);
  auto [ew, sign] = extremal_word(N);
  InfCycle base = distinguished_cycle(N % 2, N + 2);
  for (const auto& [bg, elems] : orb.spanning)
    for (const auto& e : elems) {
      ++rep.checked;
      std::string tag = "P = " + word_str(e.word) + ".1 at (deg0 " + std::to_string(bg.deg0) + ", weight " +
                        std::to_string(bg.weight) + ")";
      if (!is_minimal(e.value).ok) {
        rep.failures.push_back(tag + ": not minimal");
        continue;
      }
      Word full = e.word;
      full.insert(full.end(), ew.begin(), ew.end());
      try {
        InfCycle lifted = act_on_cycle(full, base);
        bool good = true;
        for (const auto& [n, c] : lifted.components()) {
          if (n < N && !c.is_zero()) good = false;
          if (n == N && !(c * sign == e.value)) good = false;
        }
        if (!lifted.components().count(N) && !e.value.is_zero()) good = false;
        if (good)
          ++rep.passed;
        else
          rep.failures.push_back(tag + ": lift mismatch");
      } catch (const LinkFailure& ex) {
        rep.failures.push_back(tag + ": " + ex.what());
      }
    }
  return rep;
}

}  // namespace qc
