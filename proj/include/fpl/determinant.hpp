#pragma once

// Exact determinants: fraction-free (Bareiss) elimination for rational
// matrices, cofactor expansion for small matrices over any commutative
// ring, and the LGV entry/determinant functions of the staircase regions.

#include <stdexcept>
#include <vector>

#include "fpl/poly2.hpp"
#include "fpl/rational.hpp"

namespace fpl {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Bareiss fraction-free elimination with row pivoting; exact over the
// rationals, dimension 0 gives 1.
inline Rational det_rational(RationalMatrix m) {
    const int n = static_cast<int>(m.size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("matrix not square");
    Rational prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) {
                    p = i;
                    break;
                }
            if (p == -1) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return n == 0 ? Rational(1) : m[n - 1][n - 1] * sign;
}

// Cofactor expansion over an arbitrary commutative ring; exponential, for
// cross-checks and small symbolic matrices only.
template <typename R>
R det_cofactor(const std::vector<std::vector<R>>& m, const R& zero, const R& one) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return one;
    if (n == 1) return m[0][0];
    R total = zero;
    for (int j = 0; j < n; ++j) {
        std::vector<std::vector<R>> minor;
        for (int i = 1; i < n; ++i) {
            std::vector<R> row;
            for (int k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        R term = m[0][j] * det_cofactor(minor, zero, one);
        if (j % 2 == 0)
            total = total + term;
        else
            total = total - term;
    }
    return total;
}

// LGV matrix entry m_{i,j,l}(x,y), 1-based i, j; out-of-range binomials
// vanish.
inline Rational entry_m(int i, int j, int l, const Rational& x, const Rational& y) {
    if (i < 1 || j < 1 || l < 0) throw std::invalid_argument("entry_m index out of range");
    long top = i + j + l - 2;
    return (1 + x * y) * Rational(binomial(top, 2 * i - j - 1)) +
           x * Rational(binomial(top, 2 * i - j - 2)) + y * Rational(binomial(top, 2 * i - j));
}

inline Poly2 entry_m_poly(int i, int j, int l) {
    if (i < 1 || j < 1 || l < 0) throw std::invalid_argument("entry_m index out of range");
    long top = i + j + l - 2;
    Poly2 one_plus_xy = Poly2(1) + Poly2::var_x() * Poly2::var_y();
    return one_plus_xy * Rational(binomial(top, 2 * i - j - 1)) +
           Poly2::var_x() * Rational(binomial(top, 2 * i - j - 2)) +
           Poly2::var_y() * Rational(binomial(top, 2 * i - j));
}

struct RFuncSpec {
    int l = 0;
    int n = 0;
    Rational x = 1, y = 1;
};

inline Rational r_func(const RFuncSpec& spec) {
    if (spec.l < 0 || spec.n < 0) throw std::invalid_argument("r_func parameters out of range");
    RationalMatrix m(spec.n, std::vector<Rational>(spec.n));
    for (int i = 1; i <= spec.n; ++i)
        for (int j = 1; j <= spec.n; ++j) m[i - 1][j - 1] = entry_m(i, j, spec.l, spec.x, spec.y);
    return det_rational(std::move(m));
}

inline Rational r_func(int l, int n, const Rational& x, const Rational& y) {
    return r_func(RFuncSpec{l, n, x, y});
}

inline Poly2 r_func_poly(int l, int n) {
    std::vector<std::vector<Poly2>> m(n, std::vector<Poly2>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m[i - 1][j - 1] = entry_m_poly(i, j, l);
    return det_cofactor(m, Poly2(), Poly2(1));
}

}  // namespace fpl
