#pragma once

#include <vector>

#include "glm1/laurent.hpp"
#include "glm1/partition.hpp"
#include "glm1/weights.hpp"

namespace glm1 {

enum class Route { lemma21, suzhang, determinant };

/// An irreducible character together with the weight it belongs to and
/// the route that produced it. For integral dominant weights every
/// coefficient is a weight multiplicity, hence non-negative.
struct Character {
  LaurentPoly value;
  SuperWeight weight;
  Route route;
};

/// Dominant weights alpha with alpha_j - lambda_j in {0,1}, exactly i+1
/// boxes added and a forced box in row k. Deterministically ordered.
std::vector<DominantWeight> dominant_increments(const DominantWeight& lambda,
                                                int k, int i);

/// Closed product formula for typical weights:
/// (y^mu / e_m) * s_lambda(x) * sum_{i=0}^m e_i(x) y^{m-i}.
Character char_typical(const SuperWeight& w);

/// Atypical series with atypical root eps_k - delta_1:
/// (y^mu / e_m) * sum_{i=0}^{m-1} (sum_{alpha} s_alpha(x)) y^{m-1-i},
/// alpha running over dominant_increments(lambda, k, i).
Character char_atypical(const SuperWeight& w);

/// Dispatches on typicality. Requires a special or at least dominant
/// weight; defined for any integral dominant weight.
Character char_special(const SuperWeight& w);

/// Evaluation strategy for the Weyl-group character sum.
enum class WeylSumStrategy {
  /// Expand the interior product into monomials and convert each
  /// alternant to a signed Schur function (no big division).
  schur_reduced,
  /// Literal alternating sum over all m! permutations followed by exact
  /// division by the Vandermonde; kept as an internal cross-check.
  raw_permutations,
};

/// Independent oracle: the Weyl-type character sum
/// (1/L0) sum_w sign(w) w(e^{Lambda+rho0} prod_{beta not atypical}(1+e^{-beta}))
/// with the symmetric half-integral factor pulled out of the sum so all
/// exponents stay integral. Valid for every integral dominant weight.
Character suzhang_character(const SuperWeight& w,
                            WeylSumStrategy strategy = WeylSumStrategy::schur_reduced);

/// Character of an arbitrary integral dominant weight: reduce to the
/// unique special translate and shift back by powers of
/// e^sigma = y^-1 * x1...xm.
Character char_full(const SuperWeight& w);

Int dimension(const SuperWeight& w);

/// Three-way exact equality for a special weight: the typical/atypical
/// series, the composite super-Schur determinant of phi(w), and the Weyl
/// sum all agree.
bool verify_routes(const SuperWeight& w);

/// Character by a named route, for the CLI. Works for any integral
/// dominant weight (the determinant route reduces to special first).
Character character_via(const SuperWeight& w, Route route);

}  // namespace glm1
