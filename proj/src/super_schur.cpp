#include "glm1/super_schur.hpp"

#include <stdexcept>
#include <utility>

#include "glm1/composite_schur.hpp"
#include "glm1/detail/composite_block.hpp"
#include "glm1/symfun.hpp"

namespace glm1 {

LaurentPoly super_complete(int r, int m) {
  if (r < 0) return LaurentPoly::zero(m);
  return complete(r, m) + complete(r - 1, m) * LaurentPoly::y(m);
}

LaurentPoly super_complete_dot(int r, int m) {
  return invert_vars(super_complete(r, m));
}

LaurentPoly super_schur(const Partition& p, int m) {
  const int l = p.length();
  std::vector<std::vector<LaurentPoly>> mat(
      l, std::vector<LaurentPoly>(l, LaurentPoly::zero(m)));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j)
      mat[i - 1][j - 1] = super_complete(p.part(i) - i + j, m);
  return det(mat, m);
}

LaurentPoly composite_super_schur(const CompositePartition& cp, int m) {
  return detail::composite_determinant(
      cp, m, [m](int r) { return super_complete(r, m); },
      [m](int r) { return super_complete_dot(r, m); });
}

namespace {

// All partitions obtained by removing a vertical strip (at most one box
// per row) from p, with the number of boxes removed. Decrements that
// break weak decrease are skipped: their Schur contribution would be
// counted through the sorted representative and double up.
std::vector<std::pair<Partition, int>> vertical_strip_decrements(const Partition& p) {
  std::vector<std::pair<Partition, int>> result;
  const int l = p.length();
  for (unsigned mask = 0; mask < (1u << l); ++mask) {
    std::vector<int> q(p.parts());
    for (int row = 0; row < l; ++row)
      if (mask & (1u << row)) --q[row];
    bool ok = true;
    for (int row = 0; row + 1 < l; ++row)
      if (q[row] < q[row + 1]) {
        ok = false;
        break;
      }
    if (ok) result.emplace_back(Partition(std::move(q)), __builtin_popcount(mask));
  }
  return result;
}

}  // namespace

LaurentPoly vertical_strip_expansion(const CompositePartition& cp, int m) {
  if (!is_m_standard(cp, m))
    throw std::invalid_argument("composite partition is not m-standard");
  LaurentPoly total = LaurentPoly::zero(m);
  for (const auto& [alpha, a] : vertical_strip_decrements(cp.mu)) {
    for (const auto& [beta, b] : vertical_strip_decrements(cp.nu)) {
      Exponents ypow(m + 1, 0);
      ypow[m] = a - b;
      total += composite_schur({beta, alpha}, m) * LaurentPoly::monomial(m, std::move(ypow));
    }
  }
  return total;
}

}  // namespace glm1
