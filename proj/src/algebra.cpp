#include "workbench/algebra.hpp"

#include "workbench/errors.hpp"

namespace workbench {

RationalFunction det3(const std::array<Vec3, 3>& m) {
    RationalFunction out;
    out = out + m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
    out = out - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]);
    out = out + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return out;
}

Irreducibility abs_irreducible_quadratic(const MultiPoly& p, int var) {
    if (static_cast<int>(p.variables().size()) > 2) {
        throw NotBivariateError("irreducibility test supports at most two variables");
    }
    int deg = p.degree_in(var);
    if (deg != 1 && deg != 2) {
        return Irreducibility::kNotApplicable;
    }
    if (deg == 1) {
        MultiPoly g = p.coefficient_of(var, 1);
        MultiPoly h = p.coefficient_of(var, 0);
        if (h.is_zero()) {
            // p = g*v: reducible unless g is constant.
            return g.is_constant() ? Irreducibility::kIrreducible
                                   : Irreducibility::kReducible;
        }
        return poly_gcd(g, h).is_constant() ? Irreducibility::kIrreducible
                                            : Irreducibility::kReducible;
    }
    MultiPoly f = p.coefficient_of(var, 2);
    MultiPoly g = p.coefficient_of(var, 1);
    MultiPoly h = p.coefficient_of(var, 0);
    MultiPoly content = f;
    if (!g.is_zero()) {
        content = poly_gcd(content, g);
    }
    if (!h.is_zero()) {
        content = poly_gcd(content, h);
    }
    if (!content.is_constant()) {
        return Irreducibility::kReducible;
    }
    MultiPoly disc = g * g - f * h * Rational(4);
    if (disc.is_zero()) {
        return Irreducibility::kReducible;
    }
    return is_square_over_C(disc) ? Irreducibility::kReducible
                                  : Irreducibility::kIrreducible;
}

}  // namespace workbench
