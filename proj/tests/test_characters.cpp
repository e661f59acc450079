#include <doctest.h>

#include <stdexcept>

#include "glm1/characters.hpp"
#include "glm1/composite_schur.hpp"
#include "glm1/super_schur.hpp"
#include "glm1/symfun.hpp"
#include "test_support.hpp"

using namespace glm1;

namespace {

// Brute-force oracle for dominant_increments: walks the whole box
// lambda <= alpha <= lambda+1 and filters by the definition.
std::vector<DominantWeight> increments_oracle(const DominantWeight& lambda,
                                              int k, int i) {
  const int m = lambda.size();
  std::vector<DominantWeight> out;
  std::vector<int> alpha(lambda.entries());
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == m) {
      long long added = 0;
      for (int r = 0; r < m; ++r) added += alpha[r] - lambda.entries()[r];
      if (added != i + 1) return;
      if (alpha[k - 1] - lambda.entry(k) != 1) return;
      for (int r = 0; r + 1 < m; ++r)
        if (alpha[r] < alpha[r + 1]) return;
      out.emplace_back(alpha);
      return;
    }
    for (int d = 0; d <= 1; ++d) {
      alpha[pos] = lambda.entries()[pos] + d;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

// Alternant-route oracle for the atypical series: sums a_{lambda+j+delta}
// over 0/1 tuples j with a forced 1 in row k, divides by the Vandermonde.
// Non-dominant contributions die through repeated alternant entries.
LaurentPoly atypical_alternant_oracle(const SuperWeight& w, int k) {
  const int m = w.m();
  LaurentPoly sum(m);
  for (int i = 0; i <= m - 1; ++i) {
    LaurentPoly layer(m);
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      if (__builtin_popcount(mask) != i + 1) continue;
      if (!(mask & (1u << (k - 1)))) continue;
      std::vector<int> beta(m);
      for (int r = 1; r <= m; ++r)
        beta[r - 1] = w.lambda_entry(r) + ((mask >> (r - 1)) & 1u) + (m - r);
      layer += alternant(beta, m);
    }
    Exponents ypow(m + 1, 0);
    ypow[m] = m - 1 - i;
    sum += layer * LaurentPoly::monomial(m, std::move(ypow));
  }
  Exponents pre(m + 1, -1);
  pre[m] = w.mu();
  return exact_div(LaurentPoly::monomial(m, std::move(pre)) * sum, vandermonde(m));
}

// Weyl dimension of the gl(m) irreducible with highest weight lambda.
Int weyl_dimension(const DominantWeight& lambda) {
  const int m = lambda.size();
  Int num = 1, den = 1;
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      num *= lambda.entry(i) - lambda.entry(j) + j - i;
      den *= j - i;
    }
  }
  return num / den;
}

bool coefficients_non_negative(const LaurentPoly& p) {
  for (const Term& t : p.terms())
    if (t.coef < 0) return false;
  return true;
}

}  // namespace

TEST_CASE("dominant increment sets") {
  CHECK(dominant_increments(DominantWeight({1, 0}), 2, 0) ==
        std::vector<DominantWeight>{DominantWeight({1, 1})});
  CHECK(dominant_increments(DominantWeight({1, 0}), 2, 1) ==
        std::vector<DominantWeight>{DominantWeight({2, 1})});
  CHECK(dominant_increments(DominantWeight({1, 1}), 2, 0).empty());

  for (int m = 1; m <= 4; ++m) {
    glm1::testing::Rng rng(500 + m);
    for (int it = 0; it < 30; ++it) {
      std::vector<int> entries(m);
      entries[0] = rng.between(-2, 3);
      for (int i = 1; i < m; ++i) entries[i] = entries[i - 1] - rng.between(0, 2);
      const DominantWeight lambda(entries);
      const int k = rng.between(1, m);
      for (int i = 0; i < m; ++i)
        CHECK(dominant_increments(lambda, k, i) == increments_oracle(lambda, k, i));
    }
  }
}

TEST_CASE("typical characters") {
  CHECK(char_typical(SuperWeight({2}, 0)).value ==
        LaurentPoly::from_terms(1, {{{2, 0}, 1}, {{1, 1}, 1}}));
  CHECK(char_typical(SuperWeight({1, 1}, 0)).value ==
        LaurentPoly::from_terms(2, {{{0, 0, 2}, 1},
                                    {{1, 0, 1}, 1},
                                    {{0, 1, 1}, 1},
                                    {{1, 1, 0}, 1}}));
  CHECK(char_typical(SuperWeight({0}, -1)).value ==
        LaurentPoly::from_terms(1, {{{-1, 0}, 1}, {{0, -1}, 1}}));
  CHECK_THROWS_AS(char_typical(SuperWeight({1, 0}, 0)), std::invalid_argument);
}

TEST_CASE("atypical characters") {
  for (int m = 1; m <= 4; ++m)
    CHECK(char_atypical(SuperWeight(std::vector<int>(m, 0), 0)).value ==
          LaurentPoly::one(m));
  CHECK(char_atypical(SuperWeight({1, 0}, 0)).value ==
        LaurentPoly::x(2, 1) + LaurentPoly::x(2, 2) + LaurentPoly::y(2));
  CHECK(char_atypical(SuperWeight({0, 0}, -1)).value ==
        LaurentPoly::from_terms(2, {{{-1, 0, 0}, 1}, {{0, -1, 0}, 1}, {{0, 0, -1}, 1}}));
  CHECK_THROWS_AS(char_atypical(SuperWeight({2}, 0)), std::invalid_argument);
}

TEST_CASE("atypical series matches the alternant-route oracle") {
  for (int m = 1; m <= 3; ++m) {
    for (const SuperWeight& w : enumerate_special_weights(m, 3)) {
      const auto roots = atypical_roots(w);
      if (roots.empty()) continue;
      CHECK(char_atypical(w).value == atypical_alternant_oracle(w, roots.front()));
    }
  }
}

TEST_CASE("the shifted summation range for the atypical series is wrong") {
  // Summing i = 1..m with exponent y^{m-(i+1)} instead of i = 0..m-1
  // drops the single-box layer and must disagree with the Weyl-sum value
  // already for the first fundamental weight.
  const SuperWeight w({1, 0}, 0);
  const int m = 2, k = 2;
  LaurentPoly shifted_variant(m);
  for (int i = 1; i <= m; ++i) {
    LaurentPoly layer(m);
    for (const DominantWeight& alpha : dominant_increments(w.lambda_weight(), k, i))
      layer += schur_bialternant(alpha);
    Exponents ypow(m + 1, 0);
    ypow[m] = m - (i + 1);
    layer *= LaurentPoly::monomial(m, std::move(ypow));
    shifted_variant += layer;
  }
  Exponents pre(m + 1, -1);
  pre[m] = w.mu();
  shifted_variant *= LaurentPoly::monomial(m, std::move(pre));
  CHECK(shifted_variant != suzhang_character(w).value);
  CHECK(char_atypical(w).value == suzhang_character(w).value);
}

TEST_CASE("Weyl-sum characters") {
  for (int m = 1; m <= 3; ++m)
    CHECK(suzhang_character(SuperWeight(std::vector<int>(m, 0), 0)).value ==
          LaurentPoly::one(m));
  CHECK(suzhang_character(SuperWeight({1, 0}, 0)).value ==
        LaurentPoly::x(2, 1) + LaurentPoly::x(2, 2) + LaurentPoly::y(2));
  CHECK(suzhang_character(SuperWeight({2}, 0)).value ==
        LaurentPoly::from_terms(1, {{{2, 0}, 1}, {{1, 1}, 1}}));
}

TEST_CASE("both Weyl-sum strategies agree") {
  for (int m = 1; m <= 3; ++m) {
    for (const SuperWeight& w : enumerate_special_weights(m, 2)) {
      CHECK(suzhang_character(w, WeylSumStrategy::schur_reduced).value ==
            suzhang_character(w, WeylSumStrategy::raw_permutations).value);
    }
    glm1::testing::Rng rng(600 + m);
    for (int it = 0; it < 10; ++it) {
      std::vector<int> entries(m);
      entries[0] = rng.between(-3, 3);
      for (int i = 1; i < m; ++i) entries[i] = entries[i - 1] - rng.between(0, 2);
      const SuperWeight w(entries, rng.between(-3, 3));
      CHECK(suzhang_character(w, WeylSumStrategy::schur_reduced).value ==
            suzhang_character(w, WeylSumStrategy::raw_permutations).value);
    }
  }
}

TEST_CASE("char_full reduces and shifts") {
  // (2,1;-2) reduces by j = -1 to (1,0;-1).
  const SuperWeight w({2, 1}, -2);
  const Reduction red = reduce_to_special(w);
  CHECK(red.j == -1);
  CHECK(red.special == SuperWeight({1, 0}, -1));
  const LaurentPoly shift =
      LaurentPoly::monomial(2, {1, 1, -1});  // x1*x2*y^-1
  CHECK(char_full(w).value == shift * char_special(red.special).value);

  // Already special: unchanged.
  CHECK(char_full(SuperWeight({1, 0}, 0)).value ==
        char_special(SuperWeight({1, 0}, 0)).value);

  // (0,-2;3) reduces by j = 3 to (3,1;0).
  const SuperWeight v({0, -2}, 3);
  const LaurentPoly unshift = LaurentPoly::monomial(2, {-3, -3, 3});
  CHECK(char_full(v).value == unshift * char_special(SuperWeight({3, 1}, 0)).value);
}

TEST_CASE("sigma shift consistency") {
  for (int m = 1; m <= 3; ++m) {
    glm1::testing::Rng rng(700 + m);
    for (int it = 0; it < 8; ++it) {
      std::vector<int> entries(m);
      entries[0] = rng.between(-3, 3);
      for (int i = 1; i < m; ++i) entries[i] = entries[i - 1] - rng.between(0, 2);
      const SuperWeight w(entries, rng.between(-3, 3));
      Exponents e(m + 1, 1);
      e[m] = -1;
      CHECK(char_full(add_sigma(w, 1)).value ==
            LaurentPoly::monomial(m, std::move(e)) * char_full(w).value);
    }
  }
}

TEST_CASE("the Weyl sum extends char_full off the special set") {
  for (int m = 1; m <= 3; ++m) {
    glm1::testing::Rng rng(800 + m);
    for (int it = 0; it < 8; ++it) {
      std::vector<int> entries(m);
      entries[0] = rng.between(-3, 3);
      for (int i = 1; i < m; ++i) entries[i] = entries[i - 1] - rng.between(0, 2);
      const SuperWeight w(entries, rng.between(-3, 3));
      CHECK(char_full(w).value == suzhang_character(w).value);
    }
  }
}

TEST_CASE("dimension") {
  CHECK(dimension(SuperWeight({0, 0, 0}, 0)) == 1);
  CHECK(dimension(SuperWeight({1, 0}, 0)) == 3);
  CHECK(dimension(SuperWeight({1, 1}, 0)) == 4);
}

TEST_CASE("typical dimension factorization") {
  for (int m = 1; m <= 3; ++m) {
    for (const SuperWeight& w : enumerate_special_weights(m, 3)) {
      if (!is_typical(w)) continue;
      CHECK(dimension(w) == Int(1ULL << m) * weyl_dimension(w.lambda_weight()));
    }
  }
}

TEST_CASE("character coefficients are non-negative") {
  for (int m = 1; m <= 3; ++m) {
    for (const SuperWeight& w : enumerate_special_weights(m, 2))
      CHECK(coefficients_non_negative(char_special(w).value));
    glm1::testing::Rng rng(900 + m);
    for (int it = 0; it < 10; ++it) {
      std::vector<int> entries(m);
      entries[0] = rng.between(-3, 3);
      for (int i = 1; i < m; ++i) entries[i] = entries[i - 1] - rng.between(0, 2);
      CHECK(coefficients_non_negative(
          char_full(SuperWeight(entries, rng.between(-3, 3))).value));
    }
  }
}

TEST_CASE("three routes agree on special weights") {
  CHECK(verify_routes(SuperWeight({1, 0}, 0)));
  CHECK(verify_routes(SuperWeight({0, 0}, -1)));
  CHECK(verify_routes(SuperWeight({0}, 0)));
  CHECK_THROWS_AS(verify_routes(SuperWeight({0, -2}, 3)), std::invalid_argument);
  for (int m = 1; m <= 3; ++m)
    for (const SuperWeight& w : enumerate_special_weights(m, 2))
      CHECK(verify_routes(w));
}

TEST_CASE("route dispatch for the CLI") {
  const SuperWeight w({2, 1}, -2);
  const LaurentPoly reference = char_full(w).value;
  CHECK(character_via(w, Route::lemma21).value == reference);
  CHECK(character_via(w, Route::suzhang).value == reference);
  CHECK(character_via(w, Route::determinant).value == reference);
}
