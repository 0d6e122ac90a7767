#include "qcycle/acceptance.hpp"

#include "qcycle/fermion.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

namespace qc {

namespace {

const CycScalar I = CycScalar::i_power(1);

std::string join(const std::vector<std::string>& parts, const std::string& sep = "; ") {
  std::string s;
  for (size_t k = 0; k < parts.size(); ++k) s += (k ? sep : "") + parts[k];
  return s;
}

bool wanted(const AcceptanceOptions& opt, int id) {
  return opt.only.empty() || std::find(opt.only.begin(), opt.only.end(), id) != opt.only.end();
}

// 1. distinguished towers
CriterionResult distinguished(CriterionResult r) {
  std::vector<std::string> bad;
  for (int m = 0; m <= 3; ++m) {
    try {
      InfCycle c = distinguished_cycle(m, m + 6);
      if (!c.reverify()) bad.push_back("1_" + std::to_string(m) + " link failure");
      mpq_class want(m * m, 4);
      want.canonicalize();
      auto d = c.degree();
      if (!d || *d != want) bad.push_back("1_" + std::to_string(m) + " degree");
    } catch (const std::exception& e) {
      bad.push_back(e.what());
    }
  }
  r.pass = bad.empty();
  r.detail = r.pass ? "m=0..3, n<=m+6, links exact, deg = m^2/4" : join(bad);
  return r;
}

// 2. extremal relations
CriterionResult extremal(CriterionResult r) {
  std::vector<std::string> bad;
  for (int m = 0; m <= 3; ++m) {
    InfCycle c = distinguished_cycle(m, m + 6);
    InfCycle up = act_on_cycle({{ModeKind::XPlus, m + 1}}, c);
    InfCycle target = distinguished_cycle(m + 2, m + 6);
    CycScalar sign((m + 1) % 2 ? -1 : 1);
    for (const auto& [n, w] : target.components())
      if (!up.components().count(n) || up.component(n) != w * sign)
        bad.push_back("x+" + std::to_string(m + 1) + " 1_" + std::to_string(m) + " at n=" + std::to_string(n));
    for (int k = 0; k <= m; ++k) {
      InfCycle z = act_on_cycle({{ModeKind::XPlus, k}}, c);
      for (const auto& [n, w] : z.components())
        if (!w.is_zero()) bad.push_back("x+" + std::to_string(k) + " 1_" + std::to_string(m) + " nonzero at n=" + std::to_string(n));
    }
  }
  r.pass = bad.empty();
  r.detail = r.pass ? "m<=3, x+_{m+1}.1_m = (-1)^{m+1} 1_{m+2}, x+_n.1_m = 0 for 0<=n<=m" : join(bad);
  return r;
}

// 3. link preservation under single modes
CriterionResult link_preservation(CriterionResult r, std::mt19937_64& rng) {
  std::vector<GenMode> modes;
  for (int k = -2; k <= 2; ++k) {
    modes.push_back({ModeKind::XMinus, k});
    modes.push_back({ModeKind::XPlus, k});
  }
  for (int m : {-2, -1, 1, 2}) modes.push_back({ModeKind::ATilde, m});
  modes.push_back({ModeKind::XMinus2, 0});
  modes.push_back({ModeKind::XPlus2, 0});
  modes.push_back({ModeKind::T1, 1});
  int links = 0, words = 0;
  std::vector<std::string> bad;
  while ((links < 50 || words < 30) && words < 400) {
    ++words;
    int len = 1 + static_cast<int>(rng() % 3);
    InfCycle cur = distinguished_cycle(static_cast<int>(rng() % 2), 6);
    Word w;
    try {
      for (int s = 0; s < len; ++s) {
        GenMode g = modes[rng() % modes.size()];
        w.insert(w.begin(), g);
        cur = act_on_cycle({g}, cur);
        const auto& comps = cur.components();
        for (auto it = comps.begin(); it != comps.end() && std::next(it) != comps.end(); ++it)
          if (!it->second.is_zero() || !std::next(it)->second.is_zero()) ++links;
      }
    } catch (const LinkFailure& e) {
      bad.push_back(word_str(w) + ": " + e.what());
    }
  }
  r.pass = bad.empty() && links >= 50;
  r.detail = std::to_string(links) + " nonzero links from " + std::to_string(words) + " random words";
  if (!bad.empty()) r.detail += "; " + join(bad);
  return r;
}

// 4. oracle equivalence
CriterionResult oracle(CriterionResult r, std::mt19937_64& rng, json& conventions) {
  std::vector<std::string> bad;
  json table = json::object();
  int checks = 0;
  for (Family f : {Family::XMinus, Family::XMinus2, Family::XPlus, Family::XPlus2, Family::APlus, Family::AMinus}) {
    json fam = json::object();
    std::map<int, CycScalar> first;
    for (int n = 1; n <= 4; ++n) {
      CrossCheckReport rep = cross_check(f, n, 20, 3, rng);
      checks += rep.samples;
      json row = json::object();
      for (const auto& [slot, s] : rep.scalars) {
        row[slot == 0 ? "series" : "even_modes"] = s.str();
        auto [it, fresh] = first.emplace(slot, s);
        if (!fresh && it->second != s) bad.push_back(family_name(f) + " scalar differs at n=" + std::to_string(n));
      }
      fam["n mod 4 = " + std::to_string(n % 4)] = row;
      if (!rep.ok())
        bad.push_back(family_name(f) + " n=" + std::to_string(n) + ": " +
                      (rep.failures.empty() ? "non-constant scalar" : rep.failures.front()));
    }
    table[family_name(f)] = fam;
  }
  conventions["oracle_scalars"] = table;
  std::ifstream shipped(std::string(QCYCLE_DATA_DIR) + "/conventions.json");
  if (shipped) {
    json ref = json::parse(shipped, nullptr, false);
    if (!ref.is_discarded() && ref.contains("oracle_scalars") && ref["oracle_scalars"] != table)
      bad.push_back("scalars differ from data/conventions.json");
  }
  r.pass = bad.empty();
  r.detail = std::to_string(checks) + " samples, n<=4, order 3; scalars in conventions table";
  if (!bad.empty()) r.detail += "; " + join(bad);
  return r;
}

// 5. kernel identities
CriterionResult kernel_identities(CriterionResult r) {
  std::vector<std::string> bad;
  for (int n = 1; n <= 5; ++n)
    if (!kernel_identity_single(n)) bad.push_back("single kernel n=" + std::to_string(n));
  for (int n = 2; n <= 4; ++n)
    if (!kernel_identity_double(n)) bad.push_back("double kernel n=" + std::to_string(n));
  r.pass = bad.empty();
  r.detail = r.pass ? "single kernel n<=5, double kernel n<=4" : join(bad);
  return r;
}

LaurentPoly random_symmetric(int n, std::mt19937_64& rng) {
  LaurentPoly p(1 + static_cast<long>(rng() % 3));
  int k = static_cast<int>(rng() % (n + 1));
  if (k) p += elementary(n, k) * CycScalar(static_cast<long>(rng() % 5) - 2);
  return p;
}

// 6. divided x+ keeps (weak) minimality
CriterionResult submodule(CriterionResult r, std::mt19937_64& rng) {
  const std::vector<GenMode> lowering = {{ModeKind::XMinus, 0}, {ModeKind::XMinus, 1}, {ModeKind::XMinus, 2},
                                         {ModeKind::XMinus, -1}, {ModeKind::XMinus2, 0}, {ModeKind::ATilde, 1}};
  std::vector<std::string> bad;
  int minimal_done = 0, weak_done = 0, coeffs = 0, draws = 0;
  while ((minimal_done < 15 || weak_done < 15) && draws < 2000) {
    ++draws;
    bool want_minimal = minimal_done < 15;
    int n = 2 + static_cast<int>(rng() % 3);
    WedgeElem p;
    if (want_minimal) {
      p = WedgeElem::scalar(n, RationalFn(1));
      int len = 2 + static_cast<int>(rng() % 2);
      for (int s = 0; s < len; ++s) {
        GenMode g = lowering[rng() % lowering.size()];
        if (p.l() - g.weight_shift() / 2 > n) continue;
        p = apply_mode(g, p);
      }
    } else {
      int m = static_cast<int>(rng() % 2);
      InfCycle c = distinguished_cycle(m, 4);
      GenMode g = lowering[rng() % lowering.size()];
      InfCycle d = act_on_cycle({g}, c);
      if (!d.components().count(n)) continue;
      p = d.component(n);
    }
    if (p.is_zero() || p.l() < 2) continue;
    p *= RationalFn(random_symmetric(n, rng));
    bool input_ok = want_minimal ? is_minimal(p).ok : is_weakly_minimal(p).ok;
    if (!input_ok) {
      bad.push_back("generated input not " + std::string(want_minimal ? "minimal" : "weakly minimal"));
      continue;
    }
    (want_minimal ? minimal_done : weak_done)++;
    for (Point at : {Point::Zero, Point::Infinity}) {
      TruncSeries s = act_series(Family::XPlus2, p, at, 3);
      for (const auto& [k, w] : s.coeffs) {
        ++coeffs;
        std::string where = std::string(at == Point::Zero ? "0" : "inf") + " k=" + std::to_string(k) +
                            " n=" + std::to_string(n);
        if (!w.is_deformed_cycle()) bad.push_back(where + ": coefficients not symmetric Laurent");
        bool keep = want_minimal ? is_minimal(w).ok : is_weakly_minimal(w).ok;
        if (!keep) bad.push_back(where + ": minimality lost");
      }
    }
  }
  r.pass = bad.empty() && minimal_done >= 15 && weak_done >= 15;
  r.detail = std::to_string(minimal_done) + " minimal + " + std::to_string(weak_done) + " weakly minimal inputs, " +
             std::to_string(coeffs) + " coefficients";
  if (!bad.empty()) r.detail += "; " + join(bad);
  return r;
}

// 7. measured characters
CriterionResult characters(CriterionResult r) {
  std::vector<std::string> bad;
  for (int N = 0; N <= 2; ++N) {
    OrbitReport o = generate_W(N, 4);
    std::map<std::pair<int, int>, int> dims;
    for (const auto& [b, d] : o.dims) dims[{b.deg0, b.weight}] = d;
    std::string w;
    if (!o.complete || !agree_on_window(measured_char(dims, N, 4), unit_orbit_char(N, N * N + 16), N * N + 16, N, &w))
      bad.push_back("N=" + std::to_string(N) + " " + w);
  }
  r.pass = bad.empty();
  r.detail = r.pass ? "N=0,1,2, deg0<=4" : join(bad);
  return r;
}

// 8. q-series identities
CriterionResult qseries(CriterionResult r) {
  std::vector<std::string> bad;
  for (int two_l = 0; two_l <= 4; ++two_l) {
    SeriesCheck c = verify_sum_identity(two_l, 8, 6);
    if (!c.ok) bad.push_back(c.name + " " + c.witness);
  }
  for (auto [two_l, i] : {std::pair{0, 0}, {2, 0}, {1, 1}}) {
    SeriesCheck c = verify_product_formula(two_l, i, 24, 4, 6);
    if (!c.ok) bad.push_back(c.name + (c.window_sufficient ? " " + c.witness : " window insufficient"));
  }
  r.pass = bad.empty();
  r.detail = r.pass ? "sum identity 2L<=4 at (q^8,z^6); product formula (L,i)=(0,0),(1,0),(1/2,1) at (q^6,z^4), N<=6"
                    : join(bad);
  return r;
}

// 9. null-cycle layer
CriterionResult null_layer(CriterionResult r, std::mt19937_64& rng, json& conventions) {
  std::vector<std::string> bad, good;
  // x0- and its divided square against the Grassmann operators
  bool sig = true;
  for (int n = 1; n <= 4; ++n)
    for (int l = 0; l < n; ++l)
      for (int s = 0; s < 3; ++s) {
        WedgeElem p = random_wedge(n, l, rng);
        GrassmannElem e = wedge_to_grassmann(p);
        if (grassmann_to_wedge(sigma1(n).apply(e)) != apply_mode({ModeKind::XMinus, 0}, p)) sig = false;
        if (l + 2 <= n && grassmann_to_wedge(sigma2(n).apply(e)) != apply_mode({ModeKind::XMinus2, 0}, p) * I)
          sig = false;
      }
  (sig ? good : bad).push_back(sig ? "x0-/(x0-)^(2) match Sigma1/Sigma2" : "x0-/(x0-)^(2) mismatch");
  bool lem = vanishing_at_zero_in_null_span(1) && vanishing_at_zero_in_null_span(2);
  (lem ? good : bad).push_back(lem ? "vanishing-at-zero inclusion l=1,2" : "vanishing-at-zero inclusion fails");

  auto one = example_tower("identity", 6);
  auto jp = example_tower("jplus", 6);
  auto jm = example_tower("jminus", 6);
  bool plus_ok = true, minus_ok = true, minus_neg = true;
  for (int n = 2; n <= 6; n += 2) {
    WedgeElem a = apply_mode({ModeKind::XPlus, -1}, one.at(n));
    WedgeElem b = apply_mode({ModeKind::XPlus, 1}, one.at(n));
    if (jp.at(n) != -a) plus_ok = false;
    if (jm.at(n) != b) minus_ok = false;
    if (jm.at(n) != -b) minus_neg = false;
  }
  (plus_ok ? good : bad).push_back(plus_ok ? "j+ = -x+_{-1} I" : "j+ = -x+_{-1} I fails");
  if (minus_ok)
    good.push_back("j- = x+_1 I");
  else
    bad.push_back(std::string("j- = x+_1 I fails") + (minus_neg ? " (observed j- = -x+_1 I)" : ""));
  conventions["current_towers"] = json{{"jplus", "-x+-1 I"}, {"jminus", minus_neg ? "-x+1 I" : minus_ok ? "x+1 I" : "none"}};

  auto ident4 = example_tower("identity", 4);
  std::map<int, WedgeElem> hol, anti;
  for (const auto& [n, w] : ident4) {
    if (n == 0) continue;
    hol[n] = apply_word(parse_word("x-1 x+1"), w);
    anti[n] = apply_word(parse_word("x+-1 x--1"), w);
  }
  auto tz = example_tower("Tz", 4);
  auto tzb = example_tower("Tzbar", 4);
  json em = json::object();
  for (auto [name, lhs, rhs] : {std::tuple{"Tz", &tz, &hol}, {"Tzbar", &tzb, &anti}}) {
    TowerModNull cmp = compare_mod_null(*lhs, *rhs, -I);
    std::string fitted = "none";
    std::optional<CycScalar> fit;
    for (const auto& [n, w] : *lhs) {
      auto c = fit_scalar_mod_null(w, rhs->at(n));
      if (!c || (fit && *fit != *c)) {
        fit.reset();
        break;
      }
      fit = c;
    }
    if (fit) fitted = fit->str();
    em[name] = fitted;
    std::string label = std::string(name) + " = -i * " + (std::string(name) == "Tz" ? "x-1 x+1 I" : "x+-1 x--1 I");
    if (cmp.ok())
      good.push_back(label + " mod null (n<=4)");
    else
      bad.push_back(label + " mod null fails (observed scalar " + fitted + ")");
  }
  conventions["energy_momentum_scalars"] = em;
  bool fail_links = !all_links(0, example_tower("Tz", 6)) && !all_links(0, example_tower("Tzbar", 6));
  (fail_links ? good : bad).push_back(fail_links ? "T towers are not infinite cycles" : "a T tower passes every link");
  r.pass = bad.empty();
  r.detail = r.pass ? join(good) : "FAILED: " + join(bad) + " | passed: " + join(good);
  return r;
}

// 10. Schur towers
CriterionResult schur(CriterionResult r, json& conventions) {
  std::vector<std::string> parts;
  bool ok = true;
  json sc = json::object();
  for (auto [k, lmax] : {std::pair{1, 2}, {2, 1}}) {
    SchurReport rep = verify_schur_formula(k, lmax);
    ok = ok && rep.ok();
    std::string s = rep.scalars.empty() ? "none" : rep.scalars.begin()->second.str();
    sc["k=" + std::to_string(k)] = s;
    parts.push_back("k=" + std::to_string(k) + " scalar " + s + (rep.ok() ? " constant" : " NOT constant/proportional"));
  }
  conventions["schur_scalars"] = sc;
  r.pass = ok;
  r.detail = join(parts);
  return r;
}

// 11. minimal lifting
CriterionResult lifting(CriterionResult r) {
  std::vector<std::string> parts, bad;
  for (int N = 0; N <= 2; ++N) {
    LiftReport rep = verify_grW_iso(N, 3);
    parts.push_back("N=" + std::to_string(N) + " " + std::to_string(rep.passed) + "/" + std::to_string(rep.checked));
    if (!rep.ok()) bad.push_back(rep.failures.empty() ? "N=" + std::to_string(N) + " empty" : rep.failures.front());
  }
  r.pass = bad.empty();
  r.detail = join(parts, ", ") + (bad.empty() ? "" : "; " + join(bad));
  return r;
}

}  // namespace

bool AcceptanceRun::all_pass() const {
  return std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.pass; });
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << ": " << r.detail;
  os.setf(std::ios::fixed);
  os.precision(1);
  os << " (" << r.seconds << " s)";
  return os.str();
}

AcceptanceRun run_acceptance(const AcceptanceOptions& opt, std::ostream* out) {
  AcceptanceRun run;
  run.conventions = json::object();
  std::mt19937_64 rng(opt.seed);
  struct Item {
    int id;
    const char* title;
    std::function<CriterionResult(CriterionResult)> fn;
  };
  const std::vector<Item> items = {
      {1, "distinguished towers", distinguished},
      {2, "extremal relations", extremal},
      {3, "link preservation", [&](CriterionResult r) { return link_preservation(r, rng); }},
      {4, "fermionic oracle", [&](CriterionResult r) { return oracle(r, rng, run.conventions); }},
      {5, "kernel identities", kernel_identities},
      {6, "submodule stability", [&](CriterionResult r) { return submodule(r, rng); }},
      {7, "character match", characters},
      {8, "q-series identities", qseries},
      {9, "null-cycle layer", [&](CriterionResult r) { return null_layer(r, rng, run.conventions); }},
      {10, "Schur towers", [&](CriterionResult r) { return schur(r, run.conventions); }},
      {11, "minimal-cycle lifting", lifting},
  };
  for (const auto& it : items) {
    if (!wanted(opt, it.id)) continue;
    CriterionResult r;
    r.id = it.id;
    r.title = it.title;
    auto t0 = std::chrono::steady_clock::now();
    try {
      r = it.fn(r);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (out) *out << format_result(r) << std::endl;
    run.results.push_back(r);
  }
  if (!opt.conventions_out.empty()) {
    std::ofstream f(opt.conventions_out);
    f << run.conventions.dump(2) << "\n";
  }
  return run;
}

}  // namespace qc
