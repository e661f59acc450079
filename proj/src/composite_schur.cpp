#include "glm1/composite_schur.hpp"

#include <stdexcept>

#include "glm1/detail/composite_block.hpp"
#include "glm1/symfun.hpp"

namespace glm1 {

namespace detail {

LaurentPoly composite_determinant(const CompositePartition& cp, int m,
                                  const EntryFn& plain, const EntryFn& dotted) {
  if (!is_m_standard(cp, m))
    throw std::invalid_argument("composite partition is not m-standard");
  const int q = cp.nu.length();
  const int p = cp.mu.length();
  const int n = q + p;
  std::vector<std::vector<LaurentPoly>> mat(
      n, std::vector<LaurentPoly>(n, LaurentPoly::zero(m)));
  // Row r <= q carries k = q-r+1 (bottom to top), row r > q carries
  // i = r-q (top to bottom); column c <= q carries l = q-c+1 (right to
  // left), column c > q carries j = c-q (left to right).
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      int index;
      bool dot;
      if (r <= q) {
        const int k = q - r + 1;
        if (c <= q) {
          const int l = q - c + 1;
          index = cp.nu.part(l) + k - l;
          dot = true;
        } else {
          const int j = c - q;
          index = cp.mu.part(j) - k - j + 1;
          dot = false;
        }
      } else {
        const int i = r - q;
        if (c <= q) {
          const int l = q - c + 1;
          index = cp.nu.part(l) - i - l + 1;
          dot = true;
        } else {
          const int j = c - q;
          index = cp.mu.part(j) + i - j;
          dot = false;
        }
      }
      mat[r - 1][c - 1] = dot ? dotted(index) : plain(index);
    }
  }
  return det(mat, m);
}

}  // namespace detail

LaurentPoly composite_schur(const CompositePartition& cp, int m) {
  return schur_bialternant(cup_m(cp.mu, cp.nu, m));
}

LaurentPoly composite_schur_det(const CompositePartition& cp, int m) {
  return detail::composite_determinant(
      cp, m, [m](int r) { return complete(r, m); },
      [m](int r) { return invert_vars(complete(r, m)); });
}

}  // namespace glm1
