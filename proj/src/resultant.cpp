#include "workbench/multipoly.hpp"

#include <vector>

#include "workbench/errors.hpp"

namespace workbench {

namespace {

// Coefficients of p viewed as a univariate polynomial in var, highest power
// first, as elements of the remaining variables' ring.
std::vector<MultiPoly> coefficients_in(const MultiPoly& p, int var) {
    int deg = p.degree_in(var);
    std::vector<MultiPoly> coeffs(static_cast<std::size_t>(deg) + 1);
    for (int i = 0; i <= deg; ++i) {
        coeffs[static_cast<std::size_t>(deg - i)] = p.coefficient_of(var, i);
    }
    return coeffs;
}

}  // namespace

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var) {
    if (f.is_zero() || g.is_zero()) {
        throw ZeroPolynomialError("resultant of the zero polynomial");
    }
    int m = f.degree_in(var);
    int n = g.degree_in(var);
    if (m == 0 || n == 0) {
        throw DegreeZeroError("resultant requires positive degree in the eliminated variable");
    }

    auto fc = coefficients_in(f, var);
    auto gc = coefficients_in(g, var);
    int size = m + n;
    std::vector<std::vector<MultiPoly>> s(
        static_cast<std::size_t>(size),
        std::vector<MultiPoly>(static_cast<std::size_t>(size)));
    for (int row = 0; row < n; ++row) {
        for (int j = 0; j <= m; ++j) {
            s[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + j)] = fc[static_cast<std::size_t>(j)];
        }
    }
    for (int row = 0; row < m; ++row) {
        for (int j = 0; j <= n; ++j) {
            s[static_cast<std::size_t>(n + row)][static_cast<std::size_t>(row + j)] = gc[static_cast<std::size_t>(j)];
        }
    }

    // Bareiss fraction-free elimination; every division is exact.
    MultiPoly prev(1);
    int sign = 1;
    for (int k = 0; k < size - 1; ++k) {
        if (s[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)].is_zero()) {
            int pivot = -1;
            for (int r = k + 1; r < size; ++r) {
                if (!s[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)].is_zero()) {
                    pivot = r;
                    break;
                }
            }
            if (pivot < 0) {
                return MultiPoly();
            }
            std::swap(s[static_cast<std::size_t>(k)], s[static_cast<std::size_t>(pivot)]);
            sign = -sign;
        }
        const MultiPoly& pk = s[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
        for (int i = k + 1; i < size; ++i) {
            for (int j = k + 1; j < size; ++j) {
                MultiPoly num = s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * pk
                              - s[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]
                                    * s[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    num.is_zero() ? MultiPoly() : divide_exact(num, prev);
            }
            s[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = MultiPoly();
        }
        prev = pk;
    }

    MultiPoly det = s[static_cast<std::size_t>(size - 1)][static_cast<std::size_t>(size - 1)];
    if (sign < 0) {
        det = det * rational_of(-1);
    }
    if (det.is_zero()) {
        return det;
    }
    return det.normalized();
}

}  // namespace workbench
