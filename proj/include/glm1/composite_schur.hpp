#pragma once

#include "glm1/laurent.hpp"
#include "glm1/partition.hpp"

namespace glm1 {

/// Schur function of an m-standard composite partition by definition:
/// the bialternant of the m-composition of (nu; mu).
LaurentPoly composite_schur(const CompositePartition& cp, int m);

/// The same function as a determinant in complete functions h_r(x) and
/// their variable-inverted companions h_r(1/x). The block layout (q =
/// l(nu) dotted columns/rows first, then p = l(mu) plain ones) and the
/// index directions are fixed here and validated against
/// composite_schur() by the test suite.
LaurentPoly composite_schur_det(const CompositePartition& cp, int m);

}  // namespace glm1
