#pragma once

#include "qcycle/poly.hpp"

#include <vector>

namespace qc {

// Symmetric functions in z_1..z_n.
LaurentPoly elementary(int n, int k);
LaurentPoly complete(int n, int k);
LaurentPoly power_sum(int n, int m);  // m may be negative
LaurentPoly vandermonde(int n);       // prod_{i<j} (z_i - z_j)

// Partition from Frobenius coordinates (a_1 > ... > a_d | b_1 > ... > b_d).
std::vector<int> frobenius_to_partition(const std::vector<int>& arms, const std::vector<int>& legs);

LaurentPoly schur(int n, const std::vector<int>& partition);  // bialternant
LaurentPoly schur_frobenius(int n, const std::vector<int>& arms, const std::vector<int>& legs);
LaurentPoly schur_jacobi_trudi(int n, const std::vector<int>& partition);  // dual form in e_k

bool is_symmetric(const LaurentPoly& p, int n);

// partitions of total with at most max_parts parts, weakly decreasing
std::vector<std::vector<int>> partitions(int total, int max_parts);
// sum of distinct permutations of z^lambda in n variables
LaurentPoly monomial_symmetric(int n, const std::vector<int>& lambda);

// Determinant of a square matrix of polynomials (cofactor expansion, fine for small sizes).
LaurentPoly poly_det(const std::vector<std::vector<LaurentPoly>>& m);

}  // namespace qc
