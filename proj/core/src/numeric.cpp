#include "astlab/numeric.hpp"

#include <cstdlib>

namespace astlab {

ResourceLimits ResourceLimits::from_env() {
    ResourceLimits limits;
    if (const char* raw = std::getenv("ASTLAB_MAX_SIZE")) {
        char* end = nullptr;
        long value = std::strtol(raw, &end, 10);
        if (end != raw && *end == '\0' && value >= 1 && value <= 64) {
            limits.max_set_size = static_cast<int>(value);
            limits.max_rows = static_cast<int>(value) - 1;
        }
    }
    return limits;
}

void ResourceLimits::require_set_size(int n) const {
    if (n > max_set_size) {
        throw ResourceError("set size " + std::to_string(n) +
                            " exceeds bound max_set_size=" + std::to_string(max_set_size) +
                            " (override with ASTLAB_MAX_SIZE or --max-size)");
    }
}

void ResourceLimits::require_rows(int n) const {
    if (n > max_rows) {
        throw ResourceError("row count " + std::to_string(n) +
                            " exceeds bound max_rows=" + std::to_string(max_rows) +
                            " (override with ASTLAB_MAX_SIZE or --max-size)");
    }
}

BigInt factorial(long n) {
    if (n < 0) throw ValidationError("factorial of negative argument");
    BigInt r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(const BigInt& n, long k) {
    if (k < 0) return 0;
    BigInt num = 1;
    BigInt den = 1;
    for (long i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    if (den == 0) throw InternalError("binomial denominator vanished");
    BigInt q = num / den;
    if (q * den != num) throw InternalError("binomial division not exact");
    return q;
}

BigInt power(const BigInt& base, unsigned long exp) {
    BigInt r = 1;
    BigInt b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

BigInt numer(const Rational& q) { return boost::multiprecision::numerator(q); }
BigInt denom(const Rational& q) { return boost::multiprecision::denominator(q); }

bool is_integer(const Rational& q) { return denom(q) == 1; }

BigInt to_integer(const Rational& q) {
    if (!is_integer(q)) throw ValidationError("expected an integer, got " + to_string(q));
    return numer(q);
}

std::string to_string(const Rational& q) {
    if (is_integer(q)) return numer(q).str();
    return numer(q).str() + "/" + denom(q).str();
}

std::string to_fraction_string(const Rational& q) {
    return numer(q).str() + "/" + denom(q).str();
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw ValidationError("zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw ValidationError("cannot parse rational '" + text + "'");
    }
}

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

long SplitMix64::next_in(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(next() % span);
}

}  // namespace astlab
