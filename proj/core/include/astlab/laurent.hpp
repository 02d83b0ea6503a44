#pragma once

#include "astlab/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace astlab {

// Sparse multivariate Laurent polynomial over Rational: a map from integer
// exponent vectors (negative exponents allowed) to nonzero coefficients.
class MultiLaurent {
public:
    using Exponents = std::vector<int>;

    explicit MultiLaurent(int nvars) : nvars_(nvars) {}

    static MultiLaurent constant(int nvars, const Rational& c);
    static MultiLaurent monomial(int nvars, Exponents exps, const Rational& c);
    // x_i^exp (0-based variable index)
    static MultiLaurent var_power(int nvars, int i, int exp);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    MultiLaurent operator-() const;
    MultiLaurent& operator+=(const MultiLaurent& rhs);
    MultiLaurent& operator-=(const MultiLaurent& rhs);
    friend MultiLaurent operator+(MultiLaurent lhs, const MultiLaurent& rhs) { return lhs += rhs; }
    friend MultiLaurent operator-(MultiLaurent lhs, const MultiLaurent& rhs) { return lhs -= rhs; }
    friend MultiLaurent operator*(const MultiLaurent& lhs, const MultiLaurent& rhs);
    MultiLaurent& operator*=(const MultiLaurent& rhs);
    MultiLaurent& operator*=(const Rational& c);
    bool operator==(const MultiLaurent& rhs) const = default;

    // Coefficient of x_i^exp as a Laurent polynomial in the other variables
    // (the extracted variable keeps exponent 0).
    MultiLaurent coefficient_of(int i, int exp) const;
    // Exponents of x_i that actually occur, ascending.
    std::vector<int> exponent_range(int i) const;

    // Coefficient of the all-zero exponent vector.
    Rational constant_term() const;

    // Substitute x_i -> x_i + delta (delta = +1 or -1). Requires every
    // exponent of x_i to be nonnegative.
    MultiLaurent shifted_var(int i, int delta) const;
    // Substitute a rational constant for x_i; c must be nonzero if negative
    // exponents of x_i occur.
    MultiLaurent substituted(int i, const Rational& c) const;

    std::string pretty(const std::vector<std::string>& names) const;

private:
    void add_term(const Exponents& e, const Rational& c);
    int nvars_;
    std::map<Exponents, Rational> terms_;
};

}  // namespace astlab
