#include "qcycle/acceptance.hpp"
#include "qcycle/fermion.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace qc;

namespace {

enum Exit { kOk = 0, kFailed = 1, kBadJson = 2, kShape = 3, kUsage = 4 };

struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(path);
    if (!f) throw JsonError("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw JsonError(std::string("parse error: ") + e.what());
  }
}

void write_json(const json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(path);
  f << j.dump(2) << "\n";
}

Point parse_point(const std::string& s) {
  if (s == "zero" || s == "0") return Point::Zero;
  if (s == "infinity" || s == "inf") return Point::Infinity;
  throw std::invalid_argument("point must be zero or infinity");
}

// a wedge element, or a tower whose single component is taken when n is not given
WedgeElem wedge_input(const json& j) {
  if (j.is_object() && j.contains("components")) {
    auto [w, comps] = tower_from_json(j);
    if (comps.size() != 1) throw ShapeError("expected one wedge element, got a tower");
    return comps.begin()->second;
  }
  return wedge_from_json(j);
}

int two_l_from(const std::string& s) {
  mpq_class L(s);
  L.canonicalize();
  mpq_class t = 2 * L;
  if (t.get_den() != 1 || t < 0) throw std::invalid_argument("L must be a non-negative half-integer");
  return static_cast<int>(t.get_num().get_si());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qcycle: exact deformed-cycle computations at q = sqrt(-1)"};
  app.require_subcommand(1);
  uint64_t seed = 20261017;
  app.add_option("--seed", seed, "RNG seed for sampled checks");

  // act
  auto* act = app.add_subcommand("act", "apply a generator family, a single mode, or a word to a wedge element");
  std::string family, point = "zero", mode, in = "-", out;
  int k = 0, order = 3;
  bool series = false;
  act->add_option("--family", family, "xminus | xminus2 | xplus | xplus2 | aplus | aminus");
  act->add_option("--k", k, "coefficient of t^k to extract");
  act->add_option("--mode", mode, "mode word, e.g. \"x+1 x-0\" (applied right to left)");
  act->add_option("--point", point, "zero | infinity")->capture_default_str();
  act->add_flag("--series", series, "emit the whole truncated series");
  act->add_option("--order", order, "series order")->capture_default_str();
  act->add_option("--in", in, "input file or -")->capture_default_str();
  act->add_option("--out", out, "output file (default stdout)");

  // link-check
  auto* lc = app.add_subcommand("link-check", "verify consecutive components of a tower, or a {low, high} pair");
  lc->add_option("--in", in, "input file or -")->capture_default_str();
  lc->add_option("--out", out, "report file (default stdout)");

  // minimal-check
  auto* mc = app.add_subcommand("minimal-check", "minimality of a wedge element");
  bool weak = false;
  mc->add_option("--in", in, "input file or -")->capture_default_str();
  mc->add_flag("--weak", weak, "require only weak minimality");

  // tower
  auto* tw = app.add_subcommand("tower", "emit a named tower");
  std::string name = "identity";
  int nmax = 6, m = 0;
  tw->add_option("--name", name, "identity | jplus | jminus | Tz | Tzbar | distinguished")->capture_default_str();
  tw->add_option("--nmax", nmax, "largest component")->capture_default_str();
  tw->add_option("--m", m, "weight of the distinguished tower")->capture_default_str();
  tw->add_option("--out", out, "output file (default stdout)");

  // tower-act
  auto* ta = app.add_subcommand("tower-act", "apply a word to a tower, verifying every link of the result");
  std::string word;
  ta->add_option("--word", word, "mode word")->required();
  ta->add_option("--in", in, "input file or -")->capture_default_str();
  ta->add_option("--out", out, "output file (default stdout)");

  // orbit
  auto* ob = app.add_subcommand("orbit", "bigraded dimensions of the orbit of the unit tower component");
  int N = 0, deg = 4, K = -1;
  ob->add_option("--N", N)->required();
  ob->add_option("--deg", deg, "deg0 cutoff")->capture_default_str();
  ob->add_option("--K", K, "mode cutoff (default: deg)");
  ob->add_option("--out", out, "output file (default stdout)");

  // null
  auto* nl = app.add_subcommand("null", "generators of the null span, or its graded piece with --deg0");
  int n = 2, l = 1;
  std::optional<int> deg0;
  nl->add_option("--n", n)->required();
  nl->add_option("--l", l)->required();
  nl->add_option("--deg0", deg0, "restrict to symmetric coefficients of this degree");
  nl->add_option("--out", out, "output file (default stdout)");

  // mod-null
  auto* mn = app.add_subcommand("mod-null", "is in - target in the null span");
  std::string target;
  mn->add_option("--in", in, "input file or -")->capture_default_str();
  mn->add_option("--target", target, "target file")->required();
  mn->add_option("--out", out, "output file (default stdout)");

  // char
  auto* ch = app.add_subcommand("char", "characters and q-series identities");
  std::string formula, verify, measured, Lstr = "0";
  int i = 0, qmax = 6, zmax = 6, nmax_sum = 6;
  ch->add_option("--formula", formula, "chi0 | chi1 | orbit");
  ch->add_option("--verify", verify, "identity | product");
  ch->add_option("--measured", measured, "orbit dims file");
  ch->add_option("--L", Lstr, "L (half-integer)")->capture_default_str();
  ch->add_option("--i", i)->capture_default_str();
  ch->add_option("--N", N)->capture_default_str();
  ch->add_option("--qmax", qmax, "q cutoff")->capture_default_str();
  ch->add_option("--zmax", zmax, "|z| cutoff")->capture_default_str();
  ch->add_option("--nmax", nmax_sum, "largest N in the product-formula sum")->capture_default_str();
  ch->add_option("--out", out, "output file (default stdout)");

  // oracle
  auto* orc = app.add_subcommand("oracle", "compare against the free-fermion model");
  int samples = 20;
  orc->add_option("--family", family)->required();
  orc->add_option("--n", n)->required();
  orc->add_option("--samples", samples)->capture_default_str();
  orc->add_option("--order", order)->capture_default_str();

  // accept
  auto* ac = app.add_subcommand("accept", "run the acceptance suite");
  std::string suite = "primary", conventions;
  std::vector<int> only;
  ac->add_option("--suite", suite)->capture_default_str();
  ac->add_option("--only", only, "criterion ids");
  ac->add_option("--conventions", conventions, "write the conventions table here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  if (const char* t = std::getenv("QCYCLE_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(t, &end, 10);
    if (*end || v < 1) {
      std::cerr << "QCYCLE_THREADS must be a positive integer\n";
      return kUsage;
    }
  }

  std::mt19937_64 rng(seed);
  try {
    if (*act) {
      WedgeElem p = wedge_input(read_json(in));
      if (!mode.empty()) {
        write_json(wedge_to_json(apply_word(parse_word(mode), p)), out);
      } else {
        if (family.empty()) throw std::invalid_argument("act needs --family or --mode");
        Family f = family_from_name(family);
        Point at = parse_point(point);
        if (series) {
          write_json(series_to_json(act_series(f, p, at, order)), out);
        } else {
          TruncSeries s = act_series(f, p, at, std::max(order, std::abs(k)), k);
          write_json(wedge_to_json(mode_extract(s, k)), out);
        }
      }
      return kOk;
    }
    if (*lc) {
      json j = read_json(in);
      json report = json::object();
      json pairs = json::array();
      bool all = true;
      auto add = [&](int nlow, const WedgeElem& a, const WedgeElem& b) {
        if (b.n() != a.n() + 2 || b.l() != a.l() + 1) throw ShapeError("link pair shapes differ from (n,l), (n+2,l+1)");
        LinkPair lp = link_check(a, b);
        all = all && lp.verified;
        json e{{"n", nlow}, {"verified", lp.verified}};
        if (!lp.verified) e["witness"] = lp.witness;
        pairs.push_back(e);
      };
      if (j.is_object() && j.contains("low")) {
        WedgeElem a = wedge_from_json(j.at("low")), b = wedge_from_json(j.at("high"));
        add(a.n(), a, b);
      } else {
        auto [w, comps] = tower_from_json(j);
        for (const auto& [cn, c] : comps)
          if (c.n() - 2 * c.l() != w) throw ShapeError("component n=" + std::to_string(cn) + " has the wrong weight");
        auto full = normalize_components(w, comps);
        for (auto it = full.begin(); it != full.end() && std::next(it) != full.end(); ++it)
          add(it->first, it->second, std::next(it)->second);
      }
      report["pairs"] = pairs;
      report["all_verified"] = all;
      write_json(report, out);
      return all ? kOk : kFailed;
    }
    if (*mc) {
      WedgeElem p = wedge_input(read_json(in));
      MinimalityResult w = is_weakly_minimal(p), s = is_minimal(p);
      json r{{"n", p.n()}, {"l", p.l()}, {"weakly_minimal", w.ok}, {"minimal", s.ok}};
      if (!w.ok) r["weak_witness"] = w.witness;
      if (!s.ok) r["witness"] = s.witness;
      write_json(r, "");
      return (weak ? w.ok : s.ok) ? kOk : kFailed;
    }
    if (*tw) {
      if (name == "distinguished") {
        InfCycle c = distinguished_cycle(m, nmax);
        write_json(tower_to_json(c.weight(), c.components()), out);
      } else {
        write_json(tower_to_json(example_tower_weight(name), example_tower(name, nmax)), out);
      }
      return kOk;
    }
    if (*ta) {
      auto [w, comps] = tower_from_json(read_json(in));
      InfCycle c(w, comps);
      InfCycle d = act_on_cycle(parse_word(word), c);
      write_json(tower_to_json(d.weight(), d.components()), out);
      return kOk;
    }
    if (*ob) {
      write_json(dims_to_json(generate_W(N, deg, K)), out);
      return kOk;
    }
    if (*nl) {
      json r{{"n", n}, {"l", l}};
      json gens = json::array();
      if (deg0) {
        GradedComponentBasis b = null_subspace(n, l, *deg0);
        for (const auto& g : b.basis) gens.push_back(wedge_to_json(g));
        r["deg0"] = *deg0;
        r["dim"] = b.dim();
        r["basis"] = gens;
      } else {
        NullSpan ns = null_span(n, l);
        for (const auto& g : ns.generators) gens.push_back(wedge_to_json(g));
        r["rank"] = ns.rank;
        r["generators"] = gens;
      }
      write_json(r, out);
      return kOk;
    }
    if (*mn) {
      WedgeElem p = wedge_input(read_json(in)), t = wedge_input(read_json(target));
      if (p.n() != t.n() || p.l() != t.l()) throw ShapeError("input and target shapes differ");
      ModNullResult res = member_mod_null(p, t);
      json r{{"member", res.member}};
      if (res.member) {
        json comb = json::array();
        for (size_t a = 0; a < res.combination.size(); ++a)
          if (!res.combination[a].is_zero())
            comb.push_back(json{{"generator", wedge_to_json(res.generators[a])},
                                {"coeff", ratfn_to_json(res.combination[a])}});
        r["combination"] = comb;
      }
      write_json(r, out);
      return res.member ? kOk : kFailed;
    }
    if (*ch) {
      int two_l = two_l_from(Lstr);
      if (!verify.empty()) {
        SeriesCheck c;
        if (verify == "identity")
          c = verify_sum_identity(two_l, qmax, zmax);
        else if (verify == "product")
          c = verify_product_formula(two_l, i, 4 * qmax, zmax, nmax_sum);
        else
          throw std::invalid_argument("unknown --verify " + verify);
        json r{{"check", c.name}, {"pass", c.ok}, {"window_sufficient", c.window_sufficient}};
        if (!c.witness.empty()) r["witness"] = c.witness;
        write_json(r, out);
        return c.ok ? kOk : kFailed;
      }
      if (!measured.empty()) {
        json d = read_json(measured);
        int D = d.is_object() && d.contains("D") ? d.at("D").get<int>() : qmax;
        if (d.is_object() && d.contains("N") && d.at("N").get<int>() != N)
          throw ShapeError("dims file is for N=" + std::to_string(d.at("N").get<int>()));
        QZSeries meas = measured_char(dims_from_json(d), N, D);
        std::string wit;
        bool ok = agree_on_window(meas, unit_orbit_char(N, N * N + 4 * D), N * N + 4 * D, N, &wit);
        json r{{"N", N}, {"D", D}, {"agrees", ok}, {"series", qz_to_json(meas)}};
        if (!ok) r["witness"] = wit;
        write_json(r, out);
        return ok ? kOk : kFailed;
      }
      if (formula == "chi0" || formula == "chi1")
        write_json(qz_to_json(level1_char(formula == "chi1", 4 * qmax, zmax)), out);
      else if (formula == "orbit")
        write_json(qz_to_json(unit_orbit_char(N, N * N + 4 * qmax)), out);
      else
        throw std::invalid_argument("char needs --formula, --verify or --measured");
      return kOk;
    }
    if (*orc) {
      Family f = family_from_name(family);
      CrossCheckReport rep = cross_check(f, n, samples, order, rng);
      json sc = json::object();
      for (const auto& [slot, s] : rep.scalars) sc[slot == 0 ? "series" : "even_modes"] = s.str();
      json r{{"family", family}, {"n", n},         {"samples", rep.samples}, {"passed", rep.passed},
             {"constant", rep.constant}, {"scalars", sc}, {"pass", rep.ok()}};
      if (!rep.failures.empty()) r["failures"] = rep.failures;
      write_json(r, "");
      return rep.ok() ? kOk : kFailed;
    }
    if (*ac) {
      if (suite != "primary") throw std::invalid_argument("only the primary suite exists");
      AcceptanceOptions opt;
      opt.seed = seed;
      opt.only = only;
      opt.conventions_out = conventions;
      return run_acceptance(opt, &std::cout).all_pass() ? kOk : kFailed;
    }
  } catch (const JsonError& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kBadJson;
  } catch (const json::exception& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kBadJson;
  } catch (const ShapeError& e) {
    std::cerr << "shape mismatch: " << e.what() << "\n";
    return kShape;
  } catch (const LinkFailure& e) {
    std::cerr << "link failure: " << e.what() << "\n";
    return kFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kShape;
  } catch (const std::out_of_range& e) {
    std::cerr << "out of range: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}
