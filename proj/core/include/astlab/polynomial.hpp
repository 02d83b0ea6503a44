#pragma once

#include "astlab/numeric.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace astlab {

// Dense univariate polynomial over Rational, coefficients ascending by
// degree, no trailing zero coefficient stored. The variable is rendered
// as "l" everywhere since every polynomial in this library lives in the
// trapezoid base parameter.
class UniPoly {
public:
    UniPoly() = default;
    /*implicit*/ UniPoly(const Rational& c);
    /*implicit*/ UniPoly(long c);
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly variable();
    // constant + slope * l
    static UniPoly affine(const Rational& constant, const Rational& slope);

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(int i) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& rhs);
    UniPoly& operator-=(const UniPoly& rhs);
    friend UniPoly operator+(UniPoly lhs, const UniPoly& rhs) { return lhs += rhs; }
    friend UniPoly operator-(UniPoly lhs, const UniPoly& rhs) { return lhs -= rhs; }
    friend UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs);
    UniPoly& operator*=(const UniPoly& rhs);
    UniPoly& operator*=(const Rational& c);
    friend UniPoly operator*(UniPoly lhs, const Rational& c) { return lhs *= c; }
    friend UniPoly operator*(const Rational& c, UniPoly rhs) { return rhs *= c; }
    bool operator==(const UniPoly& rhs) const = default;

    Rational operator()(const Rational& x) const;
    Rational at(long x) const { return (*this)(Rational(x)); }

    UniPoly pow(unsigned long e) const;
    // p(scale * l + shift), exact composition
    UniPoly compose_affine(const Rational& scale, const Rational& shift) const;
    UniPoly shifted(const Rational& c) const { return compose_affine(1, c); }

    // Euclidean division; divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
    bool divisible_by(const UniPoly& divisor) const;

    // "a0/b0,a1/b1,..." ascending; zero polynomial encodes as "0/1"
    std::string coeff_list() const;
    static UniPoly from_coeff_list(const std::string& text);

    // Human form, descending powers: "l^4+25l^3+226l^2+864l+1176"
    std::string pretty() const;
    // Paper-style factored form over the rational roots:
    // "(1/12)(l+1)(l+2)(l+6)(l+7)", residual cofactor printed last.
    std::string factored() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Unique interpolant through the given points; duplicate abscissae rejected.
UniPoly interpolate(const std::vector<std::pair<BigInt, Rational>>& points);

// Rising factorial x (x+1) ... (x+m-1); the empty product (= 1) for m <= 0.
UniPoly pochhammer(const UniPoly& x, long m);

// All rational roots with multiplicity, sorted ascending. Exact: a returned
// value r satisfies p(r) = 0, and every rational root is returned.
std::vector<Rational> rational_roots(const UniPoly& p);

// Divisor list of |n| (n != 0), ascending.
std::vector<BigInt> divisors(const BigInt& n);

}  // namespace astlab
