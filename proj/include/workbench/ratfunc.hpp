#pragma once

#include <array>
#include <string>

#include "workbench/multipoly.hpp"
#include "workbench/rational.hpp"

namespace workbench {

// Rational function num/den over Q[a,b,c,d], kept gcd-reduced with the
// denominator normalized (primitive integer coefficients, positive leading
// coefficient); a constant denominator is folded into the numerator. The
// representation is canonical, so operator== compares components directly.
class RationalFunction {
 public:
  RationalFunction();  // zero
  explicit RationalFunction(const Rational& c);
  explicit RationalFunction(long c);
  explicit RationalFunction(MultiPoly num);
  RationalFunction(MultiPoly num, MultiPoly den);
  static RationalFunction variable(int var);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  // Exact value at a point where the denominator does not vanish.
  Rational evaluate(const std::array<Rational, kMaxVars>& point) const;

  std::string str() const;

 private:
  void reduce();
  MultiPoly num_;
  MultiPoly den_;
};

using Vec3 = std::array<RationalFunction, 3>;

Vec3 cross(const Vec3& x, const Vec3& y);
RationalFunction dot(const Vec3& x, const Vec3& y);

}  // namespace workbench
