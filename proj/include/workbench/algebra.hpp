#pragma once

#include <array>

#include "workbench/multipoly.hpp"
#include "workbench/ratfunc.hpp"

namespace workbench {

// Exact 3x3 determinant.
RationalFunction det3(const std::array<Vec3, 3>& rows);

enum class Irreducibility { kIrreducible, kReducible, kNotApplicable };

// Decides absolute irreducibility (over C) of a polynomial that is linear or
// quadratic in var. Linear: irreducible iff the two coefficients are coprime.
// Quadratic f*v^2 + g*v + h: reducible iff the content gcd(f, g, h) is
// nonconstant or the discriminant g^2 - 4*f*h is a square in C[...]; otherwise
// irreducible. Degrees 0 and >= 3 in var return kNotApplicable. Throws
// NotBivariateError when the input involves more than two variables.
Irreducibility abs_irreducible_quadratic(const MultiPoly& p, int var);

}  // namespace workbench
