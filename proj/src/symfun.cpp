#include "glm1/symfun.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace glm1 {

namespace {

std::mutex memo_mutex;

// Parity of the permutation p (of 0..n-1) by cycle decomposition.
int permutation_sign(std::vector<int> p) {
  int sign = 1;
  for (size_t i = 0; i < p.size(); ++i) {
    while (p[i] != static_cast<int>(i)) {
      std::swap(p[i], p[p[i]]);
      sign = -sign;
    }
  }
  return sign;
}

std::vector<LaurentPoly> build_elementary_table(int m) {
  // Coefficients of prod_v (1 + x_v t) by degree in t.
  std::vector<LaurentPoly> e(m + 1, LaurentPoly::zero(m));
  e[0] = LaurentPoly::one(m);
  for (int v = 1; v <= m; ++v) {
    for (int d = v; d >= 1; --d) {
      LaurentPoly upd = e[d - 1] * LaurentPoly::x(m, v);
      if (d <= v - 1) upd += e[d];
      e[d] = std::move(upd);
    }
  }
  return e;
}

LaurentPoly build_complete(int r, int m) {
  // All monomials of total degree r, coefficient 1.
  std::vector<Term> terms;
  Exponents exp(m + 1, 0);
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == m - 1) {
      exp[var] = remaining;
      terms.push_back({exp, 1});
      exp[var] = 0;
      return;
    }
    for (int d = 0; d <= remaining; ++d) {
      exp[var] = d;
      self(self, var + 1, remaining - d);
    }
    exp[var] = 0;
  };
  rec(rec, 0, r);
  return LaurentPoly::from_terms(m, std::move(terms));
}

}  // namespace

DominantWeight staircase(int m) {
  std::vector<int> d(m);
  for (int i = 0; i < m; ++i) d[i] = m - 1 - i;
  return DominantWeight(std::move(d));
}

LaurentPoly elementary(int i, int m) {
  if (i < 0 || i > m) return LaurentPoly::zero(m);
  static std::map<int, std::vector<LaurentPoly>> table;
  std::lock_guard<std::mutex> lock(memo_mutex);
  auto it = table.find(m);
  if (it == table.end()) it = table.emplace(m, build_elementary_table(m)).first;
  return it->second[i];
}

LaurentPoly complete(int r, int m) {
  if (r < 0) return LaurentPoly::zero(m);
  static std::map<std::pair<int, int>, LaurentPoly> table;
  std::lock_guard<std::mutex> lock(memo_mutex);
  auto it = table.find({m, r});
  if (it == table.end())
    it = table.emplace(std::make_pair(m, r), build_complete(r, m)).first;
  return it->second;
}

LaurentPoly elementary_omit(int i, int m, int k) {
  if (k < 1 || k > m) throw std::invalid_argument("omitted index out of range");
  if (i < 0 || i > m - 1) return LaurentPoly::zero(m);
  std::vector<LaurentPoly> e(i + 1, LaurentPoly::zero(m));
  e[0] = LaurentPoly::one(m);
  int seen = 0;
  for (int v = 1; v <= m; ++v) {
    if (v == k) continue;
    ++seen;
    for (int d = std::min(i, seen); d >= 1; --d) {
      LaurentPoly upd = e[d - 1] * LaurentPoly::x(m, v);
      if (d <= seen - 1) upd += e[d];
      e[d] = std::move(upd);
    }
  }
  return e[i];
}

LaurentPoly alternant(const std::vector<int>& alpha, int m) {
  if (static_cast<int>(alpha.size()) != m)
    throw std::invalid_argument("alternant exponent tuple must have length m");
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Term> terms;
  do {
    Exponents exp(m + 1, 0);
    for (int i = 0; i < m; ++i) exp[perm[i]] = alpha[i];
    terms.push_back({std::move(exp), permutation_sign(perm)});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return LaurentPoly::from_terms(m, std::move(terms));
}

LaurentPoly vandermonde(int m) {
  static std::map<int, LaurentPoly> table;
  std::lock_guard<std::mutex> lock(memo_mutex);
  auto it = table.find(m);
  if (it == table.end()) {
    LaurentPoly v = LaurentPoly::one(m);
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j)
        v *= LaurentPoly::x(m, i) - LaurentPoly::x(m, j);
    it = table.emplace(m, std::move(v)).first;
  }
  return it->second;
}

namespace {

LaurentPoly schur_nonnegative(const std::vector<int>& w, int m) {
  // Bialternant quotient for entries >= 0.
  const DominantWeight delta = staircase(m);
  std::vector<int> beta(w);
  for (int i = 0; i < m; ++i) beta[i] += delta.entries()[i];
  return exact_div(alternant(beta, m), vandermonde(m));
}

}  // namespace

LaurentPoly schur_bialternant(const DominantWeight& w) {
  const int m = w.size();
  const int t = std::min(0, w.entries().back());
  std::vector<int> shifted(w.entries());
  for (int& v : shifted) v -= t;
  LaurentPoly s = schur_nonnegative(shifted, m);
  if (t != 0) {
    Exponents e(m + 1, t);
    e[m] = 0;
    s *= LaurentPoly::monomial(m, std::move(e));
  }
  return s;
}

LaurentPoly schur_bialternant(const Partition& p, int m) {
  if (p.length() > m) {
    // More rows than variables: the Schur polynomial vanishes.
    return LaurentPoly::zero(m);
  }
  std::vector<int> entries(p.parts());
  entries.resize(m, 0);
  return schur_bialternant(DominantWeight(std::move(entries)));
}

LaurentPoly schur_laurent_alternant(const DominantWeight& w) {
  const int m = w.size();
  std::vector<int> beta(w.entries());
  for (int i = 0; i < m; ++i) beta[i] += m - 1 - i;
  return exact_div(alternant(beta, m), vandermonde(m));
}

LaurentPoly schur_jacobi_trudi(const Partition& p, int m) {
  const int l = p.length();
  std::vector<std::vector<LaurentPoly>> mat(
      l, std::vector<LaurentPoly>(l, LaurentPoly::zero(m)));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j) mat[i - 1][j - 1] = complete(p.part(i) - i + j, m);
  return det(mat, m);
}

AlternantReduction alternant_reduce(const std::vector<int>& beta) {
  const int m = static_cast<int>(beta.size());
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return beta[a] > beta[b]; });
  for (int i = 0; i + 1 < m; ++i)
    if (beta[order[i]] == beta[order[i + 1]]) return {0, std::nullopt};
  std::vector<int> entries(m);
  for (int i = 0; i < m; ++i) entries[i] = beta[order[i]] - (m - 1 - i);
  return {permutation_sign(order), DominantWeight(std::move(entries))};
}

std::vector<Partition> pieri_vertical(const Partition& p, int i, int m) {
  std::vector<Partition> result;
  if (i < 0 || i > m || p.length() > m) return result;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) != i) continue;
    std::vector<int> q(m);
    bool ok = true;
    for (int row = 1; row <= m; ++row)
      q[row - 1] = p.part(row) + ((mask >> (row - 1)) & 1u);
    for (int row = 0; row + 1 < m; ++row)
      if (q[row] < q[row + 1]) {
        ok = false;
        break;
      }
    if (ok) result.emplace_back(std::move(q));
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

}  // namespace glm1
