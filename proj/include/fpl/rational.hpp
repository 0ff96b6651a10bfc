#pragma once

// Exact arbitrary-precision scalars used throughout: counts are BigInt,
// weights, determinants and stationary vectors are Rational.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace fpl {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of negative integer");
    BigInt r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

// binom(a, b) = 0 for b < 0 or b > a; requires a >= 0.
inline BigInt binomial(long a, long b) {
    if (b < 0 || b > a) return 0;
    if (a < 0) throw std::domain_error("binomial with negative top");
    b = std::min(b, a - b);
    BigInt r = 1;
    for (long i = 1; i <= b; ++i) {
        r *= a - b + i;
        r /= i;
    }
    return r;
}

// Rising product a(a+1)...(a+i-1); i = 0 gives 1.
inline Rational shifted_factorial(const Rational& a, long i) {
    if (i < 0) throw std::domain_error("shifted factorial with negative length");
    Rational r = 1;
    Rational t = a;
    for (long k = 0; k < i; ++k) {
        r *= t;
        t += 1;
    }
    return r;
}

// Exact parse of "p/q" or "p"; rejects anything else.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("not a rational: " + s);
    }
}

inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

// Rational x with x = p/2^k exactly, used when fitting 2^(cn+d) factors.
inline std::optional<long> log2_exact(const Rational& r) {
    if (r <= 0) return std::nullopt;
    BigInt num = numerator(r), den = denominator(r);
    long e = 0;
    while (num % 2 == 0) { num /= 2; ++e; }
    while (den % 2 == 0) { den /= 2; --e; }
    if (num != 1 || den != 1) return std::nullopt;
    return e;
}

inline Rational pow2(long e) {
    BigInt p = BigInt(1) << static_cast<unsigned>(e < 0 ? -e : e);
    return e < 0 ? Rational(1, p) : Rational(p);
}

}  // namespace fpl
