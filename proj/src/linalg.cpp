#include "qcycle/linalg.hpp"

namespace qc {

namespace {

void axpy(SparseVec& v, const CycScalar& c, const SparseVec& row) {
  for (const auto& [k, x] : row) {
    auto it = v.find(k);
    if (it == v.end()) {
      v.emplace(k, c * x);
    } else {
      it->second += c * x;
      if (it->second.is_zero()) v.erase(it);
    }
  }
}

}  // namespace

SparseVec EchelonBasis::reduce(SparseVec v) const {
  // pivots are processed in increasing column order; rows are fully reduced so one pass suffices
  for (auto it = v.begin(); it != v.end();) {
    auto r = rows_.find(it->first);
    if (r == rows_.end()) {
      ++it;
      continue;
    }
    int col = it->first;
    CycScalar c = -it->second;
    axpy(v, c, r->second);
    it = v.upper_bound(col);
  }
  return v;
}

bool EchelonBasis::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  int pivot = r.begin()->first;
  CycScalar inv = r.begin()->second.inverse();
  for (auto& [k, x] : r) x *= inv;
  for (auto& [p, row] : rows_) {
    auto it = row.find(pivot);
    if (it != row.end()) {
      CycScalar c = -it->second;
      axpy(row, c, r);
    }
  }
  rows_.emplace(pivot, std::move(r));
  return true;
}

std::vector<SparseVec> EchelonBasis::canonical() const {
  std::vector<SparseVec> out;
  for (const auto& [p, row] : rows_) out.push_back(row);
  return out;
}

std::vector<int> bareiss_echelon(PolyMatrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size();
  LaurentPoly prev(1);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j) {
        LaurentPoly v = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        m[i][j] = exact_div(v, prev);
      }
      m[i][c] = LaurentPoly();
    }
    // earlier skipped columns of the lower rows stay zero
    prev = m[r][c];
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

PolyMatrix clear_row_denominators(const RatMatrix& m) {
  PolyMatrix out;
  for (const auto& row : m) {
    RationalFn d(1);
    // common denominator: product of the distinct factors with maximal multiplicity
    std::vector<RationalFn::Factor> lcm;
    for (const auto& x : row)
      for (const auto& [f, k] : x.den_factors()) {
        bool found = false;
        for (auto& [g, kk] : lcm)
          if (g == f) {
            kk = std::max(kk, k);
            found = true;
          }
        if (!found) lcm.emplace_back(f, k);
      }
    LaurentPoly D(1);
    for (auto& [f, k] : lcm) D *= f.pow(k);
    std::vector<LaurentPoly> prow;
    for (const auto& x : row) prow.push_back((x * RationalFn(D)).poly());
    out.push_back(std::move(prow));
  }
  return out;
}

int kn_rank(const RatMatrix& m) {
  PolyMatrix pm = clear_row_denominators(m);
  return static_cast<int>(bareiss_echelon(pm).size());
}

std::optional<std::vector<RationalFn>> kn_solve(const RatMatrix& m, const std::vector<RationalFn>& b) {
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  RatMatrix aug = m;
  for (size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  PolyMatrix pm = clear_row_denominators(aug);
  std::vector<int> piv = bareiss_echelon(pm);
  if (!piv.empty() && piv.back() == static_cast<int>(cols)) return std::nullopt;
  std::vector<RationalFn> x(cols, RationalFn(0));
  for (int r = static_cast<int>(piv.size()) - 1; r >= 0; --r) {
    int c = piv[r];
    RationalFn acc(pm[r][cols]);
    for (size_t j = c + 1; j < cols; ++j)
      if (!pm[r][j].is_zero() && !x[j].is_zero()) acc -= RationalFn(pm[r][j]) * x[j];
    x[c] = acc / RationalFn(pm[r][c]);
  }
  return x;
}

std::vector<std::vector<LaurentPoly>> kn_nullspace(const RatMatrix& m) {
  std::vector<std::vector<LaurentPoly>> out;
  if (m.empty()) return out;
  size_t cols = m[0].size();
  PolyMatrix pm = clear_row_denominators(m);
  std::vector<int> piv = bareiss_echelon(pm);
  std::vector<bool> is_pivot(cols, false);
  for (int c : piv) is_pivot[c] = true;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<RationalFn> x(cols, RationalFn(0));
    x[f] = RationalFn(1);
    for (int r = static_cast<int>(piv.size()) - 1; r >= 0; --r) {
      int c = piv[r];
      RationalFn acc(0);
      for (size_t j = c + 1; j < cols; ++j)
        if (!pm[r][j].is_zero() && !x[j].is_zero()) acc -= RationalFn(pm[r][j]) * x[j];
      x[c] = acc / RationalFn(pm[r][c]);
    }
    RatMatrix row{x};
    out.push_back(clear_row_denominators(row)[0]);
  }
  return out;
}

RatMatrix transpose(const RatMatrix& m) {
  if (m.empty()) return {};
  RatMatrix t(m[0].size(), std::vector<RationalFn>(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

std::vector<SparseVec> scalar_nullspace(const std::vector<SparseVec>& rows, int ncols) {
  EchelonBasis eb;
  for (const auto& r : rows) eb.insert(r);
  std::vector<SparseVec> red = eb.canonical();
  std::map<int, const SparseVec*> by_pivot;
  for (const auto& r : red) by_pivot.emplace(r.begin()->first, &r);
  std::vector<SparseVec> out;
  for (int f = 0; f < ncols; ++f) {
    if (by_pivot.count(f)) continue;
    SparseVec v{{f, CycScalar(1)}};
    // pivot variable p = -(coefficient of f in its row)
    for (const auto& [p, row] : by_pivot) {
      auto it = row->find(f);
      if (it != row->end()) v[p] = -it->second;
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace qc
