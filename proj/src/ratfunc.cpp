#include "workbench/ratfunc.hpp"

#include "workbench/errors.hpp"

namespace workbench {

RationalFunction::RationalFunction() : num_(), den_(1) {}

RationalFunction::RationalFunction(const Rational& c) : num_(c), den_(1) {}

RationalFunction::RationalFunction(long c) : num_(c), den_(1) {}

RationalFunction::RationalFunction(MultiPoly num) : num_(std::move(num)), den_(1) {}

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) {
        throw ZeroPolynomialError("rational function with zero denominator");
    }
    reduce();
}

RationalFunction RationalFunction::variable(int var) {
    return RationalFunction(MultiPoly::variable(var));
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = MultiPoly(1);
        return;
    }
    if (!den_.is_constant()) {
        MultiPoly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = divide_exact(num_, g);
            den_ = divide_exact(den_, g);
        }
    }
    if (den_.is_constant()) {
        num_ = num_ * (Rational(1) / den_.constant_value());
        den_ = MultiPoly(1);
        return;
    }
    // Move the denominator's unit into the numerator.
    MultiPoly canonical = den_.normalized();
    Rational unit = den_.leading_coefficient() / canonical.leading_coefficient();
    num_ = num_ * (Rational(1) / unit);
    den_ = canonical;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction out(*this);
    out.num_ = -out.num_;
    return out;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) {
        throw ZeroPolynomialError("division by the zero rational function");
    }
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

Rational RationalFunction::evaluate(const std::array<Rational, kMaxVars>& point) const {
    Rational d = den_.evaluate(point);
    if (d == 0) {
        throw Error("rational function evaluated at a pole");
    }
    return num_.evaluate(point) / d;
}

std::string RationalFunction::str() const {
    if (den_.is_constant()) {
        return num_.str();
    }
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

Vec3 cross(const Vec3& x, const Vec3& y) {
    return Vec3{x[1] * y[2] - x[2] * y[1],
                x[2] * y[0] - x[0] * y[2],
                x[0] * y[1] - x[1] * y[0]};
}

RationalFunction dot(const Vec3& x, const Vec3& y) {
    return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
}

}  // namespace workbench
