#pragma once

#include "glm1/laurent.hpp"
#include "glm1/partition.hpp"

namespace glm1 {

/// Complete super-symmetric function for one odd variable:
/// h_r(x/y) = h_r(x) + h_{r-1}(x)*y; 1 for r = 0, 0 for r < 0.
LaurentPoly super_complete(int r, int m);

/// h_r evaluated at inverted variables: invert_vars(super_complete(r, m)).
LaurentPoly super_complete_dot(int r, int m);

/// det(h_{p_i - i + j}(x/y)); in particular the one-row case equals
/// super_complete.
LaurentPoly super_schur(const Partition& p, int m);

/// Composite block determinant with super-symmetric entries; by the main
/// equality of this library it is the irreducible character of the
/// special weight mapping to (nu; mu).
LaurentPoly composite_super_schur(const CompositePartition& cp, int m);

/// Expansion of composite_super_schur into classical composite Schur
/// functions graded by y: sum over all vertical-strip decrements alpha of
/// mu and beta of nu of s_{(beta;alpha)}(x) * y^{|mu-alpha|-|nu-beta|}.
LaurentPoly vertical_strip_expansion(const CompositePartition& cp, int m);

}  // namespace glm1
