#pragma once

// Bivariate polynomials in x, y with exact rational coefficients, for the
// symbolic evaluation mode of the determinant/tiling reconciliation.

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "fpl/rational.hpp"

namespace fpl {

class Poly2 {
public:
    Poly2() = default;
    Poly2(const Rational& c) {
        if (c != 0) coeffs_[{0, 0}] = c;
    }
    static Poly2 var_x() { return monomial(1, 0); }
    static Poly2 var_y() { return monomial(0, 1); }
    static Poly2 monomial(int dx, int dy, const Rational& c = 1) {
        Poly2 p;
        if (c != 0) p.coeffs_[{dx, dy}] = c;
        return p;
    }

    const std::map<std::pair<int, int>, Rational>& coeffs() const { return coeffs_; }

    Poly2 operator+(const Poly2& o) const {
        Poly2 r = *this;
        for (const auto& [m, c] : o.coeffs_) {
            auto& slot = r.coeffs_[m];
            slot += c;
            if (slot == 0) r.coeffs_.erase(m);
        }
        return r;
    }
    Poly2 operator-(const Poly2& o) const { return *this + o * Rational(-1); }
    Poly2 operator*(const Poly2& o) const {
        Poly2 r;
        for (const auto& [m1, c1] : coeffs_)
            for (const auto& [m2, c2] : o.coeffs_) {
                std::pair<int, int> m{m1.first + m2.first, m1.second + m2.second};
                auto& slot = r.coeffs_[m];
                slot += c1 * c2;
                if (slot == 0) r.coeffs_.erase(m);
            }
        return r;
    }
    Poly2 operator*(const Rational& c) const { return *this * Poly2(c); }
    bool operator==(const Poly2& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly2& o) const { return !(*this == o); }

    Rational eval(const Rational& x, const Rational& y) const {
        Rational total = 0;
        for (const auto& [m, c] : coeffs_) {
            Rational term = c;
            for (int i = 0; i < m.first; ++i) term *= x;
            for (int i = 0; i < m.second; ++i) term *= y;
            total += term;
        }
        return total;
    }

    bool all_coeffs_nonnegative_integers() const {
        for (const auto& [m, c] : coeffs_)
            if (c < 0 || boost::multiprecision::denominator(c) != 1) return false;
        return true;
    }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : coeffs_) {
            if (!first) os << " + ";
            first = false;
            os << to_string(c);
            if (m.first) os << "*x^" << m.first;
            if (m.second) os << "*y^" << m.second;
        }
        return os.str();
    }

private:
    std::map<std::pair<int, int>, Rational> coeffs_;
};

}  // namespace fpl
