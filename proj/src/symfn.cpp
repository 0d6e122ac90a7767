#include "qcycle/symfn.hpp"

#include <algorithm>
#include <stdexcept>

namespace qc {

LaurentPoly elementary(int n, int k) {
  if (k < 0 || k > n) return LaurentPoly();
  // coefficient extraction from prod (1 + z_j u)
  std::vector<LaurentPoly> e(n + 1);
  e[0] = LaurentPoly(1);
  for (int j = 1; j <= n; ++j) {
    LaurentPoly zj = LaurentPoly::variable(var::z(j));
    for (int i = j; i >= 1; --i) e[i] += e[i - 1] * zj;
  }
  return e[k];
}

LaurentPoly complete(int n, int k) {
  if (k < 0) return LaurentPoly();
  if (k == 0) return LaurentPoly(1);
  if (n == 0) return LaurentPoly();
  // h_k(z_1..z_j) = h_k(z_1..z_{j-1}) + z_j h_{k-1}(z_1..z_j)
  std::vector<LaurentPoly> h(k + 1, LaurentPoly());
  h[0] = LaurentPoly(1);
  for (int j = 1; j <= n; ++j) {
    LaurentPoly zj = LaurentPoly::variable(var::z(j));
    for (int i = 1; i <= k; ++i) h[i] += zj * h[i - 1];
  }
  return h[k];
}

LaurentPoly power_sum(int n, int m) {
  LaurentPoly p;
  for (int j = 1; j <= n; ++j) p += LaurentPoly::variable(var::z(j), m);
  return p;
}

LaurentPoly vandermonde(int n) {
  LaurentPoly v(1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) v *= LaurentPoly::variable(var::z(i)) - LaurentPoly::variable(var::z(j));
  return v;
}

std::vector<int> frobenius_to_partition(const std::vector<int>& arms, const std::vector<int>& legs) {
  if (arms.size() != legs.size()) throw std::invalid_argument("Frobenius data of unequal length");
  int d = static_cast<int>(arms.size());
  for (int i = 0; i < d; ++i) {
    if (arms[i] < 0 || legs[i] < 0) throw std::invalid_argument("negative Frobenius coordinate");
    if (i > 0 && (arms[i] >= arms[i - 1] || legs[i] >= legs[i - 1]))
      throw std::invalid_argument("Frobenius coordinates must strictly decrease");
  }
  std::vector<int> lambda;
  for (int i = 0; i < d; ++i) lambda.push_back(arms[i] + i + 1);
  // rows below the diagonal: lambda_r = #{j : legs_j + j >= r}
  for (int r = d + 1;; ++r) {
    int len = 0;
    for (int j = 0; j < d; ++j)
      if (legs[j] + j + 1 >= r) ++len;
    if (len == 0) break;
    lambda.push_back(len);
  }
  return lambda;
}

LaurentPoly poly_det(const std::vector<std::vector<LaurentPoly>>& m) {
  size_t k = m.size();
  if (k == 0) return LaurentPoly(1);
  if (k == 1) return m[0][0];
  LaurentPoly d;
  for (size_t c = 0; c < k; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<LaurentPoly>> minor;
    for (size_t r = 1; r < k; ++r) {
      std::vector<LaurentPoly> row;
      for (size_t cc = 0; cc < k; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      minor.push_back(std::move(row));
    }
    LaurentPoly term = m[0][c] * poly_det(minor);
    if (c % 2) d -= term;
    else d += term;
  }
  return d;
}

LaurentPoly schur(int n, const std::vector<int>& partition) {
  std::vector<int> lam = partition;
  while (!lam.empty() && lam.back() == 0) lam.pop_back();
  if (static_cast<int>(lam.size()) > n) return LaurentPoly();
  lam.resize(n, 0);
  std::vector<std::vector<LaurentPoly>> a(n, std::vector<LaurentPoly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = LaurentPoly::variable(var::z(i + 1), lam[j] + n - 1 - j);
  return exact_div(poly_det(a), vandermonde(n));
}

LaurentPoly schur_frobenius(int n, const std::vector<int>& arms, const std::vector<int>& legs) {
  return schur_jacobi_trudi(n, frobenius_to_partition(arms, legs));
}

LaurentPoly schur_jacobi_trudi(int n, const std::vector<int>& partition) {
  // s_lambda = det(e_{lambda'_i - i + j})
  std::vector<int> conj;
  for (int c = 1;; ++c) {
    int len = 0;
    for (int p : partition)
      if (p >= c) ++len;
    if (!len) break;
    conj.push_back(len);
  }
  size_t k = conj.size();
  std::vector<std::vector<LaurentPoly>> m(k, std::vector<LaurentPoly>(k));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) m[i][j] = elementary(n, conj[i] - static_cast<int>(i) + static_cast<int>(j));
  return poly_det(m);
}

bool is_symmetric(const LaurentPoly& p, int n) {
  for (int j = 1; j < n; ++j)
    if (p.swap_slots(var::z(j), var::z(j + 1)) != p) return false;
  return true;
}

namespace {

void partitions_rec(int left, int max_part, int parts_left, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (left == 0) {
    out.push_back(cur);
    return;
  }
  if (parts_left == 0) return;
  for (int p = std::min(left, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(left - p, p, parts_left - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> partitions(int total, int max_parts) {
  std::vector<std::vector<int>> out;
  if (total < 0) return out;
  std::vector<int> cur;
  partitions_rec(total, total, max_parts, cur, out);
  return out;
}

LaurentPoly monomial_symmetric(int n, const std::vector<int>& lambda) {
  if (static_cast<int>(lambda.size()) > n) return LaurentPoly();
  std::vector<int> e(lambda.begin(), lambda.end());
  e.resize(n, 0);
  std::sort(e.begin(), e.end());
  std::vector<LaurentPoly::Term> terms;
  do {
    Mono m;
    for (int j = 0; j < n; ++j) m.set(var::z(j + 1), e[j]);
    terms.emplace_back(m, CycScalar(1));
  } while (std::next_permutation(e.begin(), e.end()));
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace qc
