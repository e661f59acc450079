#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace glm1 {

/// Arbitrary-precision integer. Kostka-type coefficients grow
/// combinatorially, so fixed-width integers are not an option.
using Int = boost::multiprecision::cpp_int;

/// Exponent tuple of a Laurent monomial in x1..xm, y: positions 0..m-1
/// hold the x-exponents, position m holds the y-exponent. Entries may be
/// negative. Length is always m+1 for the ambient m.
using Exponents = std::vector<int>;

/// Canonical term order: descending lexicographic on the exponent tuple.
/// Fixed once so that equality, rendering and golden files are stable.
bool term_before(const Exponents& a, const Exponents& b);

struct Term {
  Exponents exp;
  Int coef;
  bool operator==(const Term&) const = default;
};

/// Sparse exact Laurent polynomial in x1..xm and y over Int.
///
/// Invariants: no stored coefficient is zero, terms are kept in the
/// canonical order, and every exponent tuple has length m+1. Two values
/// are equal iff their term lists are equal. Objects are immutable after
/// construction; all operations are pure, so values can be shared freely
/// across threads.
class LaurentPoly {
 public:
  /// The zero polynomial of the given ambient m.
  explicit LaurentPoly(int m);

  static LaurentPoly zero(int m) { return LaurentPoly(m); }
  static LaurentPoly one(int m) { return constant(m, 1); }
  static LaurentPoly constant(int m, Int c);
  static LaurentPoly monomial(int m, Exponents exp, Int coef = 1);
  /// x_i (1-based) and y as polynomials.
  static LaurentPoly x(int m, int i);
  static LaurentPoly y(int m);
  /// Normalizes an arbitrary term list: sorts, merges, drops zeros.
  static LaurentPoly from_terms(int m, std::vector<Term> terms);

  int ambient_m() const { return m_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  const std::vector<Term>& terms() const { return terms_; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const Int& c);

  /// p^e for e >= 0 (throws std::invalid_argument for e < 0).
  LaurentPoly pow(int e) const;

  bool operator==(const LaurentPoly&) const = default;

 private:
  int m_;
  std::vector<Term> terms_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(LaurentPoly a, const Int& c);
LaurentPoly operator*(const Int& c, LaurentPoly a);

/// Exact quotient p/q in the Laurent ring. Throws std::domain_error
/// ("inexact division") when q does not divide p — every division in
/// this project is exact by theory, so inexactness signals a bug
/// upstream. Throws std::invalid_argument for q = 0.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);

/// Exact determinant by minor expansion with memoization over column
/// subsets. The 0x0 determinant is 1 (empty-product convention); `m`
/// fixes the ambient ring for that case. Throws on non-square input or
/// ambient mismatch.
LaurentPoly det(const std::vector<std::vector<LaurentPoly>>& mat, int m);

/// Negates every exponent tuple (x_i -> x_i^-1, y -> y^-1). Involutive
/// ring homomorphism.
LaurentPoly invert_vars(const LaurentPoly& p);

/// Sum of coefficients, i.e. the value at x1 = ... = xm = y = 1.
Int eval_ones(const LaurentPoly& p);

/// Canonical text form: terms in canonical order joined by " + "/" - ",
/// each term as c*x1^a1*...*xm^am*y^b with unit coefficients, zero
/// exponents and ^1 omitted. The zero polynomial prints as "0".
std::string to_string(const LaurentPoly& p);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace glm1
