#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "workbench/rational.hpp"

namespace workbench {

// The parameter alphabet is fixed: a, b, c, d. Exponent vectors always have
// arity four; a variable is "absent" when its exponent is zero everywhere.
inline constexpr int kMaxVars = 4;
using Exponents = std::array<int, kMaxVars>;

int var_index(char v);   // 'a' -> 0 ... 'd' -> 3
char var_name(int idx);  // inverse

// Graded lexicographic comparison, largest term first: higher total degree
// wins; ties are broken by comparing exponents left to right (a most
// significant).
struct GrlexGreater {
  bool operator()(const Exponents& x, const Exponents& y) const;
};

// Multivariate polynomial over Q in the fixed alphabet. Terms are stored in
// leading-term-first order and zero coefficients are never kept, so structural
// equality is semantic equality and printing is canonical.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(const Rational& c);
  explicit MultiPoly(long c);

  static MultiPoly variable(int var);
  static MultiPoly variable(char v) { return variable(var_index(v)); }
  // Parses the canonical ASCII form, e.g. "a^2*b^2 - 2*a^2*b + a^2 - a*b - b^2 + b".
  static MultiPoly from_string(const std::string& text);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Value of a constant polynomial (0 for the zero polynomial).
  Rational constant_value() const;

  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(int var) const;
  bool uses(int var) const { return degree_in(var) > 0; }
  std::vector<int> variables() const;

  const TermMap& terms() const { return terms_; }
  Rational coefficient(const Exponents& e) const;
  Rational leading_coefficient() const;  // 0 for the zero polynomial

  // Coefficient of var^power as a polynomial in the remaining variables.
  MultiPoly coefficient_of(int var, int power) const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rational& s) const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

  MultiPoly pow(int e) const;
  MultiPoly derivative(int var) const;

  Rational evaluate(const std::array<Rational, kMaxVars>& point) const;
  // Substitutes var := num/den and clears denominators:
  // den^deg_var(p) * p(..., num/den, ...).
  MultiPoly substitute_cleared(int var, const MultiPoly& num,
                               const MultiPoly& den) const;
  // Plain polynomial substitution var := value.
  MultiPoly substitute(int var, const MultiPoly& value) const;
  // Swaps two variables.
  MultiPoly rename(int var_from, int var_to) const;

  // Positive rational c such that p/c has coprime integer coefficients.
  // Throws ZeroPolynomialError on the zero polynomial.
  Rational content() const;
  // Canonical associate: integer coefficients, content 1, positive leading
  // coefficient. Zero stays zero.
  MultiPoly normalized() const;

  std::string str() const;

  void add_term(const Exponents& e, const Rational& c);

 private:
  TermMap terms_;
};

MultiPoly operator*(const Rational& s, const MultiPoly& p);

// Gcd by primitive pseudo-remainder sequences; the result is normalized
// (content 1, positive leading coefficient). gcd(0, 0) = 0.
MultiPoly poly_gcd(const MultiPoly& f, const MultiPoly& g);

// Exact division; asserts divisibility via the remainder.
MultiPoly divide_exact(const MultiPoly& f, const MultiPoly& g);

// Tests divisibility; fills *quotient when non-null and divisible.
bool divides(const MultiPoly& g, const MultiPoly& f,
             MultiPoly* quotient = nullptr);

// True iff p is a square in C[a,b,c,d] (every irreducible factor to an even
// power; constants are always squares over C).
bool is_square_over_C(const MultiPoly& p);

// Sylvester resultant of f and g with respect to var, eliminated by
// fraction-free Gaussian elimination. The result is content-normalized.
// Throws DegreeZeroError when either argument has degree zero in var.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var);

}  // namespace workbench
