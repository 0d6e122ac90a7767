#include "qcycle/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace qc {

json poly_to_json(const LaurentPoly& p) {
  json arr = json::array();
  for (const auto& [m, c] : p.terms()) {
    json mono = json::object();
    for (int v = 0; v < var::kCount; ++v)
      if (m[v]) mono[var::name(v)] = m[v];
    arr.push_back(json::array({c.str(), mono}));
  }
  return arr;
}

LaurentPoly poly_from_json(const json& j) {
  if (j.is_number_integer()) return LaurentPoly(j.get<long>());
  if (j.is_string()) return LaurentPoly(CycScalar::parse(j.get<std::string>()));
  if (!j.is_array()) throw JsonError("polynomial must be an array of [scalar, monomial] pairs");
  std::vector<LaurentPoly::Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[1].is_object()) throw JsonError("malformed polynomial term");
    Mono m;
    for (const auto& [k, e] : t[1].items()) m.set(var::from_name(k), e.get<int>());
    CycScalar c = t[0].is_number_integer() ? CycScalar(t[0].get<long>()) : CycScalar::parse(t[0].get<std::string>());
    terms.emplace_back(m, c);
  }
  return LaurentPoly::from_terms(std::move(terms));
}

json ratfn_to_json(const RationalFn& f) {
  if (f.is_poly()) return poly_to_json(f.num());
  json den = json::array();
  for (const auto& [g, k] : f.den_factors()) den.push_back(json::array({poly_to_json(g), k}));
  return json{{"num", poly_to_json(f.num())}, {"den", den}};
}

RationalFn ratfn_from_json(const json& j) {
  if (!j.is_object()) return RationalFn(poly_from_json(j));
  if (!j.contains("num")) throw JsonError("rational function needs \"num\"");
  std::vector<RationalFn::Factor> den;
  if (j.contains("den"))
    for (const auto& f : j.at("den")) den.emplace_back(poly_from_json(f.at(0)), f.at(1).get<int>());
  return RationalFn(poly_from_json(j.at("num")), std::move(den));
}

json wedge_to_json(const WedgeElem& p) {
  json terms = json::array();
  for (const auto& [mask, c] : p.terms())
    terms.push_back(json{{"subset", mask_subset(mask)}, {"coeff", ratfn_to_json(c)}});
  return json{{"n", p.n()}, {"l", p.l()}, {"terms", terms}};
}

WedgeElem wedge_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("l")) throw JsonError("wedge element needs \"n\" and \"l\"");
  int n = j.at("n").get<int>(), l = j.at("l").get<int>();
  if (n < 0 || n > var::kMaxZ || l < 0 || l > n || l > var::kMaxX) throw std::invalid_argument("wedge shape out of range");
  WedgeElem w(n, l);
  if (j.contains("terms"))
    for (const auto& t : j.at("terms")) {
      Subset s = t.at("subset").get<Subset>();
      if (static_cast<int>(s.size()) != l) throw std::invalid_argument("subset size differs from l");
      std::vector<int> sorted = s;
      std::sort(sorted.begin(), sorted.end());
      int sign = 1;
      for (size_t a = 0; a < s.size(); ++a)
        for (size_t b = a + 1; b < s.size(); ++b)
          if (s[a] > s[b]) sign = -sign;
      for (size_t a = 0; a < sorted.size(); ++a)
        if (sorted[a] < 0 || sorted[a] >= n || (a && sorted[a] == sorted[a - 1]))
          throw std::invalid_argument("subset entries must be distinct and in 0..n-1");
      w += WedgeElem::basis(n, sorted, ratfn_from_json(t.at("coeff")) * CycScalar(sign));
    }
  return w;
}

json tower_to_json(int weight, const std::map<int, WedgeElem>& comps) {
  json arr = json::array();
  for (const auto& [n, w] : comps) arr.push_back(json{{"n", n}, {"element", wedge_to_json(w)}});
  int lo = comps.empty() ? 0 : comps.begin()->first;
  int hi = comps.empty() ? -1 : comps.rbegin()->first;
  return json{{"weight", weight}, {"window", json::array({lo, hi})}, {"components", arr}};
}

std::pair<int, std::map<int, WedgeElem>> tower_from_json(const json& j) {
  if (!j.is_object() || !j.contains("weight") || !j.contains("components"))
    throw JsonError("tower needs \"weight\" and \"components\"");
  std::map<int, WedgeElem> comps;
  for (const auto& c : j.at("components")) {
    WedgeElem w = wedge_from_json(c.at("element"));
    int n = c.at("n").get<int>();
    if (w.n() != n) throw std::invalid_argument("component n differs from its element");
    comps[n] = w;
  }
  return {j.at("weight").get<int>(), comps};
}

json series_to_json(const TruncSeries& s) {
  json coeffs = json::array();
  for (const auto& [k, w] : s.coeffs) coeffs.push_back(json{{"k", k}, {"element", wedge_to_json(w)}});
  return json{{"family", family_name(s.family)},
              {"point", s.point == Point::Zero ? "zero" : "infinity"},
              {"order", s.order},
              {"prefactor", s.prefactor.str()},
              {"coefficients", coeffs}};
}

json qz_to_json(const QZSeries& s) {
  json terms = json::array();
  for (const auto& [k, v] : s.terms()) {
    mpq_class q(k.first, 4);
    q.canonicalize();
    terms.push_back(json{{"q", q.get_str()}, {"z", k.second}, {"c", v.get_str()}});
  }
  mpq_class qmax(s.qmax4(), 4);
  qmax.canonicalize();
  return json{{"qmax", qmax.get_str()}, {"zmax", s.zmax()}, {"terms", terms}};
}

json dims_to_json(const OrbitReport& r) {
  json arr = json::array();
  for (const auto& [bg, d] : r.dims) arr.push_back(json{{"deg0", bg.deg0}, {"weight", bg.weight}, {"dim", d}});
  return json{{"N", r.N}, {"D", r.D}, {"K", r.K}, {"complete", r.complete}, {"dims", arr}};
}

std::map<std::pair<int, int>, int> dims_from_json(const json& j) {
  std::map<std::pair<int, int>, int> out;
  const json& arr = j.is_object() ? j.at("dims") : j;
  for (const auto& e : arr) out[{e.at("deg0").get<int>(), e.at("weight").get<int>()}] = e.at("dim").get<int>();
  return out;
}

}  // namespace qc
