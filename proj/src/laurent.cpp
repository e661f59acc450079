#include "glm1/laurent.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace glm1 {

bool term_before(const Exponents& a, const Exponents& b) {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

struct TermOrder {
  bool operator()(const Exponents& a, const Exponents& b) const {
    return term_before(a, b);
  }
};

void check_same_ambient(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.ambient_m() != b.ambient_m())
    throw std::invalid_argument("ambient mismatch: m=" +
                                std::to_string(a.ambient_m()) + " vs m=" +
                                std::to_string(b.ambient_m()));
}

void check_exponent_length(int m, const Exponents& exp) {
  if (static_cast<int>(exp.size()) != m + 1)
    throw std::invalid_argument("exponent tuple has length " +
                                std::to_string(exp.size()) + ", expected " +
                                std::to_string(m + 1));
}

}  // namespace

LaurentPoly::LaurentPoly(int m) : m_(m) {
  if (m < 1) throw std::invalid_argument("ambient m must be >= 1");
}

LaurentPoly LaurentPoly::constant(int m, Int c) {
  LaurentPoly p(m);
  if (c != 0) p.terms_.push_back({Exponents(m + 1, 0), std::move(c)});
  return p;
}

LaurentPoly LaurentPoly::monomial(int m, Exponents exp, Int coef) {
  LaurentPoly p(m);
  check_exponent_length(m, exp);
  if (coef != 0) p.terms_.push_back({std::move(exp), std::move(coef)});
  return p;
}

LaurentPoly LaurentPoly::x(int m, int i) {
  if (i < 1 || i > m) throw std::invalid_argument("variable index out of range");
  Exponents e(m + 1, 0);
  e[i - 1] = 1;
  return monomial(m, std::move(e));
}

LaurentPoly LaurentPoly::y(int m) {
  Exponents e(m + 1, 0);
  e[m] = 1;
  return monomial(m, std::move(e));
}

LaurentPoly LaurentPoly::from_terms(int m, std::vector<Term> terms) {
  LaurentPoly p(m);
  for (const Term& t : terms) check_exponent_length(m, t.exp);
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return term_before(a.exp, b.exp);
  });
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
      p.terms_.back().coef += t.coef;
      if (p.terms_.back().coef == 0) p.terms_.pop_back();
    } else if (t.coef != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(*this);
  for (Term& t : r.terms_) t.coef = -t.coef;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  check_same_ambient(*this, rhs);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() && b != rhs.terms_.end()) {
    if (a->exp == b->exp) {
      Int c = a->coef + b->coef;
      if (c != 0) merged.push_back({a->exp, std::move(c)});
      ++a;
      ++b;
    } else if (term_before(a->exp, b->exp)) {
      merged.push_back(*a++);
    } else {
      merged.push_back(*b++);
    }
  }
  merged.insert(merged.end(), a, terms_.end());
  merged.insert(merged.end(), b, rhs.terms_.end());
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  return *this += -rhs;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  check_same_ambient(*this, rhs);
  std::map<Exponents, Int, TermOrder> acc;
  for (const Term& a : terms_) {
    for (const Term& b : rhs.terms_) {
      Exponents e(a.exp);
      for (size_t i = 0; i < e.size(); ++i) e[i] += b.exp[i];
      Int& slot = acc[std::move(e)];
      slot += a.coef * b.coef;
    }
  }
  terms_.clear();
  for (auto& [exp, coef] : acc)
    if (coef != 0) terms_.push_back({exp, std::move(coef)});
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Int& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (Term& t : terms_) t.coef *= c;
  return *this;
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power of a polynomial");
  LaurentPoly result = one(m_);
  LaurentPoly base(*this);
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r(a);
  return r *= b;
}
LaurentPoly operator*(LaurentPoly a, const Int& c) { return a *= c; }
LaurentPoly operator*(const Int& c, LaurentPoly a) { return a *= c; }

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
  check_same_ambient(p, q);
  if (q.is_zero()) throw std::invalid_argument("division by zero polynomial");
  const int m = p.ambient_m();
  if (p.is_zero()) return LaurentPoly::zero(m);

  // Shift both operands into the ordinary polynomial subring: subtract the
  // per-coordinate exponent minimum. Divisibility is preserved because the
  // lowest graded component (per coordinate) of a product is the product of
  // the lowest components.
  auto min_shift = [m](const LaurentPoly& f) {
    Exponents lo(m + 1, 0);
    bool first = true;
    for (const Term& t : f.terms()) {
      for (int i = 0; i <= m; ++i)
        lo[i] = first ? t.exp[i] : std::min(lo[i], t.exp[i]);
      first = false;
    }
    return lo;
  };
  const Exponents sp = min_shift(p);
  const Exponents sq = min_shift(q);

  std::map<Exponents, Int, TermOrder> rem;
  for (const Term& t : p.terms()) {
    Exponents e(t.exp);
    for (int i = 0; i <= m; ++i) e[i] -= sp[i];
    rem.emplace(std::move(e), t.coef);
  }
  std::vector<Term> divisor;
  divisor.reserve(q.terms().size());
  for (const Term& t : q.terms()) {
    Exponents e(t.exp);
    for (int i = 0; i <= m; ++i) e[i] -= sq[i];
    divisor.push_back({std::move(e), t.coef});
  }
  const Term& lead = divisor.front();

  // Single-divisor multivariate division under the canonical (lex) order.
  // When the quotient exists the leading term is always divisible, so the
  // first failure proves inexactness.
  std::vector<Term> quot;
  while (!rem.empty()) {
    auto it = rem.begin();
    Exponents texp(it->first);
    for (int i = 0; i <= m; ++i) {
      texp[i] -= lead.exp[i];
      if (texp[i] < 0) throw std::domain_error("inexact division");
    }
    if (it->second % lead.coef != 0) throw std::domain_error("inexact division");
    Int tcoef = it->second / lead.coef;
    for (const Term& d : divisor) {
      Exponents e(texp);
      for (int i = 0; i <= m; ++i) e[i] += d.exp[i];
      auto [slot, inserted] = rem.try_emplace(std::move(e), 0);
      slot->second -= tcoef * d.coef;
      if (slot->second == 0) rem.erase(slot);
    }
    quot.push_back({std::move(texp), std::move(tcoef)});
  }
  for (Term& t : quot)
    for (int i = 0; i <= m; ++i) t.exp[i] += sp[i] - sq[i];
  return LaurentPoly::from_terms(m, std::move(quot));
}

LaurentPoly det(const std::vector<std::vector<LaurentPoly>>& mat, int m) {
  const int n = static_cast<int>(mat.size());
  if (n == 0) return LaurentPoly::one(m);
  for (const auto& row : mat) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("determinant of a non-square matrix");
    for (const auto& entry : row)
      if (entry.ambient_m() != m)
        throw std::invalid_argument("ambient mismatch in determinant entry");
  }
  if (n > 20) throw std::invalid_argument("determinant size out of range");

  // minor[S] = det of the first popcount(S) rows restricted to columns S.
  std::vector<LaurentPoly> minor(size_t(1) << n, LaurentPoly::zero(m));
  minor[0] = LaurentPoly::one(m);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    const int k = __builtin_popcount(mask);
    const int row = k - 1;
    LaurentPoly acc = LaurentPoly::zero(m);
    int pos = 0;
    for (int col = 0; col < n; ++col) {
      if (!(mask & (1u << col))) continue;
      if (!mat[row][col].is_zero() && !minor[mask ^ (1u << col)].is_zero()) {
        LaurentPoly contrib = mat[row][col] * minor[mask ^ (1u << col)];
        if ((row + pos) % 2 == 0)
          acc += contrib;
        else
          acc -= contrib;
      }
      ++pos;
    }
    minor[mask] = std::move(acc);
  }
  return minor[(size_t(1) << n) - 1];
}

LaurentPoly invert_vars(const LaurentPoly& p) {
  std::vector<Term> terms(p.terms());
  for (Term& t : terms)
    for (int& e : t.exp) e = -e;
  return LaurentPoly::from_terms(p.ambient_m(), std::move(terms));
}

Int eval_ones(const LaurentPoly& p) {
  Int total = 0;
  for (const Term& t : p.terms()) total += t.coef;
  return total;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  const int m = p.ambient_m();
  std::string out;
  bool first = true;
  for (const Term& t : p.terms()) {
    const bool negative = t.coef < 0;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    Int mag = negative ? Int(-t.coef) : t.coef;
    std::string factors;
    for (int i = 0; i <= m; ++i) {
      if (t.exp[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += (i < m) ? "x" + std::to_string(i + 1) : "y";
      if (t.exp[i] != 1) factors += "^" + std::to_string(t.exp[i]);
    }
    if (factors.empty()) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + "*";
      out += factors;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
  return os << to_string(p);
}

}  // namespace glm1
