#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace astlab {

// Exact arithmetic carriers for the whole library. Nothing in the
// computational core ever touches floating point.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Thrown when an input fails a structural invariant.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Thrown when a computation would exceed a configured size bound.
// The message names the bound that was exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown when an internal consistency check fails; indicates a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Size bounds for enumerations. Defaults are desk scale; the environment
// variable ASTLAB_MAX_SIZE (a set size) raises or lowers both knobs.
struct ResourceLimits {
    int max_set_size = 7;  // centred Catalan sets
    int max_rows = 6;      // trapezoid rows; kept at max_set_size - 1

    static ResourceLimits from_env();
    void require_set_size(int n) const;
    void require_rows(int n) const;
};

BigInt factorial(long n);
BigInt binomial(const BigInt& n, long k);  // 0 for k < 0
BigInt power(const BigInt& base, unsigned long exp);

BigInt numer(const Rational& q);
BigInt denom(const Rational& q);
bool is_integer(const Rational& q);
// Requires an integral value.
BigInt to_integer(const Rational& q);

// "p" or "p/q", q > 0, lowest terms.
std::string to_string(const Rational& q);
// Always "p/q", even for integers; used by the coefficient-list encoding.
std::string to_fraction_string(const Rational& q);
Rational parse_rational(const std::string& text);

// Deterministic splitmix64; used only by property-style tests and never by
// the computational core.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    // uniform in [lo, hi]
    long next_in(long lo, long hi);

private:
    std::uint64_t state_;
};

}  // namespace astlab
