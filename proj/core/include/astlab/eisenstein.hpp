#pragma once

#include "astlab/numeric.hpp"

#include <string>

namespace astlab {

// Eisenstein integer a + b*w with w a primitive third root of unity,
// w^2 = -1 - w. Exact ring arithmetic over BigInt components.
struct Eisenstein {
    BigInt a;
    BigInt b;

    Eisenstein() : a(0), b(0) {}
    /*implicit*/ Eisenstein(long x) : a(x), b(0) {}
    Eisenstein(BigInt a_, BigInt b_) : a(std::move(a_)), b(std::move(b_)) {}

    static Eisenstein omega() { return {0, 1}; }
    // (-w)^m for any integer m; a unit of order 6
    static Eisenstein minus_omega_pow(long m);

    bool operator==(const Eisenstein& rhs) const = default;
    bool is_rational_integer() const { return b == 0; }

    Eisenstein operator-() const { return {-a, -b}; }
    friend Eisenstein operator+(const Eisenstein& x, const Eisenstein& y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend Eisenstein operator-(const Eisenstein& x, const Eisenstein& y) {
        return {x.a - y.a, x.b - y.b};
    }
    friend Eisenstein operator*(const Eisenstein& x, const Eisenstein& y) {
        // (a1 + b1 w)(a2 + b2 w), w^2 = -1 - w
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
    }
    Eisenstein& operator+=(const Eisenstein& rhs) { return *this = *this + rhs; }
    Eisenstein& operator-=(const Eisenstein& rhs) { return *this = *this - rhs; }
    Eisenstein& operator*=(const Eisenstein& rhs) { return *this = *this * rhs; }

    Eisenstein conj() const { return {a - b, -b}; }
    BigInt norm() const { return a * a - a * b + b * b; }

    // Exact quotient; throws if rhs does not divide exactly.
    Eisenstein exact_div(const Eisenstein& rhs) const;

    // Requires b == 0.
    BigInt to_integer() const;

    std::string str() const;
};

}  // namespace astlab
