#pragma once

#include <functional>

#include "glm1/laurent.hpp"
#include "glm1/partition.hpp"

namespace glm1::detail {

using EntryFn = std::function<LaurentPoly(int)>;

/// Determinant of the (q+p)x(q+p) composite block matrix with `dotted`
/// entries in the l(nu) left columns and `plain` entries in the l(mu)
/// right ones. Shared by the classical and the super determinants so the
/// index mapping exists in exactly one place.
LaurentPoly composite_determinant(const CompositePartition& cp, int m,
                                  const EntryFn& plain, const EntryFn& dotted);

}  // namespace glm1::detail
