#pragma once

#include <optional>
#include <vector>

#include "glm1/laurent.hpp"
#include "glm1/partition.hpp"

namespace glm1 {

/// The staircase (m-1, m-2, ..., 1, 0).
DominantWeight staircase(int m);

/// Elementary symmetric function e_i(x1..xm); e_0 = 1, e_i = 0 outside
/// 0..m. Memoized per (m, i); the memo table is mutex-guarded, so calls
/// are safe from concurrent threads.
LaurentPoly elementary(int i, int m);

/// Complete homogeneous symmetric function h_r(x1..xm); h_0 = 1, h_r = 0
/// for r < 0. Memoized like elementary().
LaurentPoly complete(int r, int m);

/// e_i of the m-1 variables omitting x_k (1 <= k <= m).
LaurentPoly elementary_omit(int i, int m, int k);

/// Alternating sum over the symmetric group: sum_w sign(w) w(x^alpha),
/// where w permutes the variables. Zero when alpha has repeated entries.
LaurentPoly alternant(const std::vector<int>& alpha, int m);

/// The Vandermonde product prod_{i<j}(x_i - x_j), equal to the alternant
/// of the staircase. Memoized per m.
LaurentPoly vandermonde(int m);

/// Schur function of a dominant weight via the bialternant quotient.
/// Negative entries are handled by the shift identity
/// s_w = e_m^t * s_{w - (t,...,t)}, keeping the division inside the
/// ordinary polynomial subring.
LaurentPoly schur_bialternant(const DominantWeight& w);
LaurentPoly schur_bialternant(const Partition& p, int m);

/// Cross-check route: the bialternant quotient evaluated directly with
/// Laurent exponents (no shift).
LaurentPoly schur_laurent_alternant(const DominantWeight& w);

/// det(h_{p_i - i + j}) over 1 <= i,j <= l(p).
LaurentPoly schur_jacobi_trudi(const Partition& p, int m);

struct AlternantReduction {
  int sign;  // -1, 0, +1
  std::optional<DominantWeight> weight;
};

/// Writes a_beta = sign * a_{w + staircase} with w dominant; sign = 0 and
/// no weight when beta has repeated entries.
AlternantReduction alternant_reduce(const std::vector<int>& beta);

/// All partitions obtained from p by adding a vertical i-strip (at most
/// one box per row, at most m rows), sorted for determinism.
std::vector<Partition> pieri_vertical(const Partition& p, int i, int m);

}  // namespace glm1
