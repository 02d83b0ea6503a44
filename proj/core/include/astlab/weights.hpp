#pragma once

#include "astlab/laurent.hpp"
#include "astlab/numeric.hpp"
#include "astlab/paths.hpp"
#include "astlab/polynomial.hpp"
#include "astlab/tableaux.hpp"
#include "astlab/trapezoid.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace astlab {

enum class WeightMethod { automatic, interpolation, operator_formula, both };

std::string method_name(WeightMethod m);
WeightMethod parse_method(const std::string& name);

// A fully cross-checked weight polynomial. Construction verifies
// degree = |lambda/mu| = area and leading coefficient = f / degree!.
struct WeightRecord {
    std::string key;   // canonical encoding of S or M
    std::string kind;  // "set" or "motzkin"
    UniPoly w;
    int degree = 0;
    Rational leading;
    std::string shape;  // "[2,2]/[1]"; empty for the motzkin kind
    BigInt f;           // f^{lambda/mu}, or its sum over preimages
    std::vector<Rational> roots;
    std::vector<std::string> provenance;

    std::string to_json_string() const;
    std::string factored() const { return w.factored(); }
};

// The product of the trapezoid counting machinery: weights by enumeration +
// interpolation, by the tree operator formula, or both with an equality
// check. Reducible sets are factorised and recombined multiplicatively with
// the base shift l -> l + 2|S_1| - 2. Results are memoised, as are the
// per-(n,l) refined count histograms feeding the interpolation route.
class WeightEngine {
public:
    explicit WeightEngine(ResourceLimits limits = ResourceLimits::from_env(), unsigned jobs = 0);

    const WeightRecord& set_weight(const CentredCatalanSet& s,
                                   WeightMethod method = WeightMethod::automatic);
    const WeightRecord& motzkin_weight(const MotzkinPath& m,
                                       WeightMethod method = WeightMethod::automatic);

    // polynomial for a single irreducible factor by the chosen route
    UniPoly irreducible_weight(const CentredCatalanSet& s, WeightMethod method);

    // per-(n,l) histograms keyed by catalan encoding, memoised
    const RefinedCount& counts(int n, int l);

    const ResourceLimits& limits() const { return limits_; }

private:
    UniPoly weight_poly(const CentredCatalanSet& s, WeightMethod method,
                        std::vector<std::string>& provenance);
    UniPoly interpolation_route(const CentredCatalanSet& irreducible);
    UniPoly operator_route(const CentredCatalanSet& irreducible);
    const MultiLaurent& tree_generating_polynomial(int n);

    ResourceLimits limits_;
    unsigned jobs_;
    std::map<std::string, WeightRecord> set_records_;
    std::map<std::string, WeightRecord> motzkin_records_;
    std::map<std::pair<int, int>, RefinedCount> count_memo_;
    std::map<int, MultiLaurent> m_n_memo_;
};

// Theorem-style route entry points (irreducible sets; size <= 2 is the
// trivial weight 1).
UniPoly weight_by_operator_formula(const CentredCatalanSet& s);

// Operator formula building block: the monotone-triangle generating
// polynomial M_n = prod_{p<q} (Id + D_p D_q + D_q) prod_{p<q} (x_q-x_p)/(q-p)
// with D the forward difference.
MultiLaurent monotone_triangle_polynomial(int n);

}  // namespace astlab
