#pragma once

#include <string>
#include <utility>
#include <vector>

#include "workbench/multipoly.hpp"
#include "workbench/rational.hpp"

namespace workbench {

// Dense univariate polynomial over Q. coeffs[i] is the coefficient of x^i
// (highest degree last); no trailing zeros are stored, so the zero polynomial
// has an empty coefficient vector.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly constant(const Rational& c);
  static UniPoly x();

  // Converts a MultiPoly that uses at most the single variable var.
  static UniPoly from_multi(const MultiPoly& p, int var);
  MultiPoly to_multi(int var) const;

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  Rational leading() const;

  UniPoly operator-() const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Rational& s) const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  // Field division: f = q * g + r with deg r < deg g.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& g) const;

  UniPoly derivative() const;
  Rational evaluate(const Rational& x) const;
  UniPoly monic() const;  // leading coefficient 1 (zero stays zero)
  // Canonical associate: integer coefficients, content 1, positive leading
  // coefficient.
  UniPoly normalized() const;

  std::string str(char var) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

UniPoly uni_gcd(const UniPoly& f, const UniPoly& g);  // normalized result

// Squarefree decomposition by Yun's algorithm: list of (factor, multiplicity)
// with distinct multiplicities, factors normalized, product reproducing f up
// to a rational unit. Throws ZeroPolynomialError on zero.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f);

// Product of the distinct irreducible factors, each once. Throws
// ZeroPolynomialError on zero. Constants map to 1.
UniPoly squarefree_part(const UniPoly& f);

// True iff f is a square in C[x] (every root with even multiplicity).
// Throws ZeroPolynomialError on zero.
bool is_perfect_square(const UniPoly& f);

// Number of distinct real roots via Sturm chains. Preconditions: nonconstant
// and squarefree (NotSquarefreeError otherwise).
int sturm_real_roots(const UniPoly& f);

// Number of distinct real roots in the half-open interval (lo, hi].
int sturm_real_roots_between(const UniPoly& f, const Rational& lo,
                             const Rational& hi);

struct Factorization {
  // Irreducible factors over Q with multiplicities, normalized, leading
  // factors sorted by (degree, coefficient string).
  std::vector<std::pair<UniPoly, int>> factors;
};

// Complete factorization over Q for degree <= 6 (squarefree decomposition,
// rational root extraction, then quadratic/cubic factor search with exact
// resultant elimination). Throws DegreeTooHighError above degree 6.
Factorization factor_small(const UniPoly& f);

}  // namespace workbench
