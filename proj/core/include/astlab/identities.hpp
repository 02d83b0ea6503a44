#pragma once

#include "astlab/eisenstein.hpp"
#include "astlab/numeric.hpp"
#include "astlab/paths.hpp"
#include "astlab/polynomial.hpp"
#include "astlab/weights.hpp"

#include <string>
#include <vector>

namespace astlab {

// Constant-term expression for w_l(S): the constant term of
//   prod_i x_i^{-n-s_i} prod_{i>u} x_i^{2-l} (1+x_i)^l
//   prod_{i<j} (x_j - x_i)(1 + x_i + x_i x_j)
// extracted one variable at a time, ascending.
BigInt constant_term_weight(const CentredCatalanSet& s, long l,
                            const ResourceLimits& limits = ResourceLimits::from_env());

// Closed product formula for the number of (n,l)-AS-trapezoids, exact in l;
// the assembled polynomial is checked to take integer values at integers.
UniPoly product_formula(int n);
BigInt product_formula_at(int n, long l);

// det(binom(l+i+j, j) + delta_ij), 0 <= i,j <= n-1; equals product_formula.
BigInt det_andrews(int n, long l);

// det(binom(l+i+j, j) (1-(-q)^(j+k-i))/(1+q)) over Z[w] with q = w a
// primitive third root of unity.
Eisenstein det_asm_variant(int n, long l, int k = 3);
// (-q)^{-n} multiple of the k = 3 determinant, coerced to a rational
// integer; throws if the coercion fails.
BigInt det_asm_scaled(int n, long l);

struct IdentityCheck {
    std::string identity;
    std::string parameters;
    std::string lhs;
    std::string rhs;
    bool equal = false;

    std::string to_json_string() const;
};

// Named verification sweeps behind `verify --identity ...`. All checks are
// exact; `equal` reports the outcome per parameter choice.
std::vector<IdentityCheck> verify_identity(const std::string& identity, int max_size, int max_l,
                                           WeightEngine& engine);
bool all_equal(const std::vector<IdentityCheck>& checks);

}  // namespace astlab
