#include "glm1/characters.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "glm1/composite_schur.hpp"
#include "glm1/super_schur.hpp"
#include "glm1/symfun.hpp"

namespace glm1 {

namespace {

// y^mu * prod x_i^-1, the prefactor shared by both series of char_special.
LaurentPoly mu_over_em(int m, int mu) {
  Exponents e(m + 1, -1);
  e[m] = mu;
  return LaurentPoly::monomial(m, std::move(e));
}

LaurentPoly sigma_exp_power(int m, int power) {
  // (e^sigma)^power = (y^-1 x1...xm)^power.
  Exponents e(m + 1, power);
  e[m] = -power;
  return LaurentPoly::monomial(m, std::move(e));
}

}  // namespace

std::vector<DominantWeight> dominant_increments(const DominantWeight& lambda,
                                                int k, int i) {
  const int m = lambda.size();
  if (k < 1 || k > m) throw std::invalid_argument("row index out of range");
  std::vector<DominantWeight> result;
  if (i + 1 < 1 || i + 1 > m) return result;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) != i + 1) continue;
    if (!(mask & (1u << (k - 1)))) continue;
    std::vector<int> alpha(lambda.entries());
    for (int row = 0; row < m; ++row)
      if (mask & (1u << row)) ++alpha[row];
    bool dominant = true;
    for (int row = 0; row + 1 < m; ++row)
      if (alpha[row] < alpha[row + 1]) {
        dominant = false;
        break;
      }
    if (dominant) result.emplace_back(std::move(alpha));
  }
  std::sort(result.begin(), result.end(), std::greater<>());
  return result;
}

Character char_typical(const SuperWeight& w) {
  if (!is_typical(w)) throw std::invalid_argument("weight is atypical");
  const int m = w.m();
  LaurentPoly odd_factor = LaurentPoly::zero(m);
  for (int i = 0; i <= m; ++i) {
    Exponents ypow(m + 1, 0);
    ypow[m] = m - i;
    odd_factor += elementary(i, m) * LaurentPoly::monomial(m, std::move(ypow));
  }
  LaurentPoly value = mu_over_em(m, w.mu()) *
                      schur_bialternant(w.lambda_weight()) * odd_factor;
  return {std::move(value), w, Route::lemma21};
}

Character char_atypical(const SuperWeight& w) {
  const auto roots = atypical_roots(w);
  if (roots.empty()) throw std::invalid_argument("weight is typical");
  const int m = w.m();
  const int k = roots.front();
  LaurentPoly series = LaurentPoly::zero(m);
  for (int i = 0; i <= m - 1; ++i) {
    LaurentPoly layer = LaurentPoly::zero(m);
    for (const DominantWeight& alpha : dominant_increments(w.lambda_weight(), k, i))
      layer += schur_bialternant(alpha);
    Exponents ypow(m + 1, 0);
    ypow[m] = m - 1 - i;
    series += layer * LaurentPoly::monomial(m, std::move(ypow));
  }
  LaurentPoly value = mu_over_em(m, w.mu()) * series;
  return {std::move(value), w, Route::lemma21};
}

Character char_special(const SuperWeight& w) {
  return is_typical(w) ? char_typical(w) : char_atypical(w);
}

Character suzhang_character(const SuperWeight& w, WeylSumStrategy strategy) {
  const int m = w.m();
  const auto roots = atypical_roots(w);

  // Interior of the Weyl sum with (prod x_i)^{(m-1)/2} pulled out:
  // y^mu prod_i x_i^{lambda_i+1-i} * prod_{i not atypical}(1 + y/x_i).
  Exponents base(m + 1, 0);
  for (int i = 1; i <= m; ++i) base[i - 1] = w.lambda_entry(i) + 1 - i;
  base[m] = w.mu();
  LaurentPoly bracket = LaurentPoly::monomial(m, std::move(base));
  for (int i = 1; i <= m; ++i) {
    if (!roots.empty() && roots.front() == i) continue;
    Exponents e(m + 1, 0);
    e[i - 1] = -1;
    e[m] = 1;
    bracket *= LaurentPoly::one(m) + LaurentPoly::monomial(m, std::move(e));
  }

  // The pulled-out factor recombines to (prod x_i)^{m-1}.
  Exponents sym(m + 1, m - 1);
  sym[m] = 0;
  const LaurentPoly symmetric_prefactor = LaurentPoly::monomial(m, std::move(sym));

  LaurentPoly value(m);
  if (strategy == WeylSumStrategy::raw_permutations) {
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Term> sum_terms;
    do {
      int sign = 1;
      {
        std::vector<int> tmp(perm);
        for (size_t i = 0; i < tmp.size(); ++i)
          while (tmp[i] != static_cast<int>(i)) {
            std::swap(tmp[i], tmp[tmp[i]]);
            sign = -sign;
          }
      }
      for (const Term& t : bracket.terms()) {
        Exponents e(m + 1, 0);
        for (int i = 0; i < m; ++i) e[perm[i]] = t.exp[i];
        e[m] = t.exp[m];
        sum_terms.push_back({std::move(e), sign * t.coef});
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    LaurentPoly weyl_sum = LaurentPoly::from_terms(m, std::move(sum_terms));
    value = exact_div(symmetric_prefactor * weyl_sum, vandermonde(m));
  } else {
    for (const Term& t : bracket.terms()) {
      std::vector<int> beta(t.exp.begin(), t.exp.begin() + m);
      AlternantReduction red = alternant_reduce(beta);
      if (red.sign == 0) continue;
      Exponents ypow(m + 1, 0);
      ypow[m] = t.exp[m];
      LaurentPoly contrib = schur_bialternant(*red.weight) *
                            LaurentPoly::monomial(m, std::move(ypow));
      contrib *= Int(red.sign) * t.coef;
      value += contrib;
    }
    value *= symmetric_prefactor;
  }
  return {std::move(value), w, Route::suzhang};
}

Character char_full(const SuperWeight& w) {
  const Reduction red = reduce_to_special(w);
  Character special = char_special(red.special);
  LaurentPoly value = special.value * sigma_exp_power(w.m(), -red.j);
  return {std::move(value), w, Route::lemma21};
}

Int dimension(const SuperWeight& w) { return eval_ones(char_full(w).value); }

bool verify_routes(const SuperWeight& w) {
  const LaurentPoly series = char_special(w).value;
  const LaurentPoly determinant = composite_super_schur(phi(w), w.m());
  if (series != determinant) return false;
  return series == suzhang_character(w).value;
}

Character character_via(const SuperWeight& w, Route route) {
  switch (route) {
    case Route::lemma21:
      return char_full(w);
    case Route::suzhang:
      return suzhang_character(w);
    case Route::determinant: {
      const Reduction red = reduce_to_special(w);
      LaurentPoly value = composite_super_schur(phi(red.special), w.m()) *
                          sigma_exp_power(w.m(), -red.j);
      return {std::move(value), w, Route::determinant};
    }
  }
  throw std::logic_error("unknown route");
}

}  // namespace glm1
