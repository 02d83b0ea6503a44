#include "astlab/eisenstein.hpp"

namespace astlab {

Eisenstein Eisenstein::minus_omega_pow(long m) {
    long r = m % 6;
    if (r < 0) r += 6;
    switch (r) {
        case 0: return {1, 0};
        case 1: return {0, -1};   // -w
        case 2: return {-1, -1};  // w^2
        case 3: return {-1, 0};   // -1
        case 4: return {0, 1};    // w
        default: return {1, 1};   // -w^2
    }
}

Eisenstein Eisenstein::exact_div(const Eisenstein& rhs) const {
    BigInt n = rhs.norm();
    if (n == 0) throw ValidationError("division by zero Eisenstein integer");
    Eisenstein num = *this * rhs.conj();
    if (num.a % n != 0 || num.b % n != 0) {
        throw InternalError("Eisenstein division not exact");
    }
    return {num.a / n, num.b / n};
}

BigInt Eisenstein::to_integer() const {
    if (b != 0) throw ValidationError("Eisenstein value " + str() + " is not a rational integer");
    return a;
}

std::string Eisenstein::str() const {
    if (b == 0) return a.str();
    std::string out = a == 0 ? "" : a.str();
    if (b > 0 && !out.empty()) out += "+";
    if (b == -1) {
        out += "-";
    } else if (b != 1) {
        out += b.str() + "*";
    }
    out += "w";
    return out;
}

}  // namespace astlab
