#pragma once

#include "qcycle/ratfn.hpp"

#include <map>
#include <optional>
#include <vector>

namespace qc {

using SparseVec = std::map<int, CycScalar>;

// Incremental row echelon basis over the scalars; rows are kept fully reduced.
class EchelonBasis {
 public:
  // reduce v against the basis; returns the remainder
  SparseVec reduce(SparseVec v) const;
  // insert v; returns true when it enlarged the span
  bool insert(const SparseVec& v);
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return rows_.size(); }
  // canonical reduced row echelon form, ordered by pivot
  std::vector<SparseVec> canonical() const;

 private:
  std::map<int, SparseVec> rows_;  // pivot column -> row with leading 1, reduced
};

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;
using RatMatrix = std::vector<std::vector<RationalFn>>;

// Fraction-free row echelon form; returns the pivot columns.
std::vector<int> bareiss_echelon(PolyMatrix& m);
PolyMatrix clear_row_denominators(const RatMatrix& m);
int kn_rank(const RatMatrix& m);
// Solve m x = b over the rational functions; nullopt when inconsistent.
std::optional<std::vector<RationalFn>> kn_solve(const RatMatrix& m, const std::vector<RationalFn>& b);
// Basis of {x : m x = 0} with Laurent polynomial entries.
std::vector<std::vector<LaurentPoly>> kn_nullspace(const RatMatrix& m);
RatMatrix transpose(const RatMatrix& m);

// Basis of {x : r . x = 0 for every row r} over the scalars; ncols is the ambient dimension.
std::vector<SparseVec> scalar_nullspace(const std::vector<SparseVec>& rows, int ncols);

}  // namespace qc
