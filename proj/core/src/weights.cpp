#include "astlab/weights.hpp"

#include "astlab/parallel.hpp"
#include "astlab/sttree.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace astlab {

std::string method_name(WeightMethod m) {
    switch (m) {
        case WeightMethod::automatic: return "auto";
        case WeightMethod::interpolation: return "interp";
        case WeightMethod::operator_formula: return "operator";
        case WeightMethod::both: return "both";
    }
    throw InternalError("unknown method");
}

WeightMethod parse_method(const std::string& name) {
    if (name == "auto") return WeightMethod::automatic;
    if (name == "interp") return WeightMethod::interpolation;
    if (name == "operator") return WeightMethod::operator_formula;
    if (name == "both") return WeightMethod::both;
    throw ValidationError("unknown weight method '" + name + "'");
}

std::string WeightRecord::to_json_string() const {
    nlohmann::json j;
    j["schema"] = 1;
    j["kind"] = kind;
    j["key"] = key;
    j["coeffs"] = w.coeff_list();
    j["degree"] = degree;
    j["leading"] = to_string(leading);
    j["factored"] = w.factored();
    if (!shape.empty()) j["shape"] = shape;
    j["f"] = f.str();
    nlohmann::json roots_json = nlohmann::json::array();
    for (const auto& r : roots) roots_json.push_back(to_string(r));
    j["roots"] = roots_json;
    j["provenance"] = provenance;
    return j.dump();
}

MultiLaurent monotone_triangle_polynomial(int n) {
    if (n < 0) throw ValidationError("negative variable count");
    MultiLaurent f = MultiLaurent::constant(n, 1);
    if (n == 0) return f;
    BigInt superfactorial = 1;
    for (int k = 1; k < n; ++k) superfactorial *= factorial(k);
    for (int q = 1; q < n; ++q) {
        for (int p = 0; p < q; ++p) {
            f *= MultiLaurent::var_power(n, q, 1) - MultiLaurent::var_power(n, p, 1);
        }
    }
    f *= Rational(1, superfactorial);
    // apply Id + D_p D_q + D_q over all pairs p < q
    for (int q = 1; q < n; ++q) {
        for (int p = 0; p < q; ++p) {
            MultiLaurent dq = f.shifted_var(q, 1) - f;
            MultiLaurent dpq = dq.shifted_var(p, 1) - dq;
            f += dq;
            f += dpq;
        }
    }
    return f;
}

namespace {

// substitute x_i = l + offset_i for every remaining variable, collapsing the
// multivariate polynomial to a univariate one in l
UniPoly collapse_to_l(const MultiLaurent& f, const std::vector<long>& offsets) {
    const int n = f.nvars();
    std::map<MultiLaurent::Exponents, UniPoly> work;
    for (const auto& [e, c] : f.terms()) work[e] += UniPoly(c);
    for (int i = 0; i < n; ++i) {
        UniPoly base = UniPoly::affine(Rational(offsets[static_cast<std::size_t>(i)]), 1);
        std::vector<UniPoly> powers{UniPoly(Rational(1))};
        std::map<MultiLaurent::Exponents, UniPoly> next;
        for (const auto& [e, poly] : work) {
            int a = e[static_cast<std::size_t>(i)];
            if (a < 0) throw InternalError("negative exponent in tree polynomial");
            while (static_cast<int>(powers.size()) <= a) powers.push_back(powers.back() * base);
            MultiLaurent::Exponents reduced = e;
            reduced[static_cast<std::size_t>(i)] = 0;
            next[reduced] += poly * powers[static_cast<std::size_t>(a)];
        }
        work = std::move(next);
    }
    if (work.size() > 1) throw InternalError("collapse left residual variables");
    return work.empty() ? UniPoly() : work.begin()->second;
}

UniPoly operator_route_impl(const CentredCatalanSet& s, const MultiLaurent& m_n) {
    if (s.size() <= 2) return UniPoly(Rational(1));
    STParams params = st_params_of(s);
    const int n = params.n;
    MultiLaurent f = m_n;
    // (-forward difference)^(-sigma_i - 1) on the negative side
    for (int i = 1; i <= params.u; ++i) {
        int reps = -params.sigma[static_cast<std::size_t>(i - 1)] - 1;
        for (int r = 0; r < reps; ++r) f = f - f.shifted_var(i - 1, 1);
    }
    // (backward difference)^(sigma_i - 1) on the positive side
    for (int i = params.u + 1; i <= n; ++i) {
        int reps = params.sigma[static_cast<std::size_t>(i - 1)] - 1;
        for (int r = 0; r < reps; ++r) f = f - f.shifted_var(i - 1, -1);
    }
    // substitute the bottom entries: constants left of the centre, l-affine
    // values right of it
    for (int i = 1; i <= params.u; ++i) {
        f = f.substituted(i - 1, Rational(params.k_const(i)));
    }
    std::vector<long> offsets(static_cast<std::size_t>(n), 0);
    for (int i = params.u + 1; i <= n; ++i) {
        offsets[static_cast<std::size_t>(i - 1)] = params.k_offset(i);
    }
    return collapse_to_l(f, offsets);
}

}  // namespace

UniPoly weight_by_operator_formula(const CentredCatalanSet& s) {
    if (s.size() > 2 && !is_irreducible(s)) {
        throw ValidationError("operator formula applies to irreducible sets");
    }
    return operator_route_impl(s, monotone_triangle_polynomial(s.size() - 1));
}

WeightEngine::WeightEngine(ResourceLimits limits, unsigned jobs)
    : limits_(limits), jobs_(jobs) {}

const RefinedCount& WeightEngine::counts(int n, int l) {
    auto key = std::make_pair(n, l);
    auto it = count_memo_.find(key);
    if (it != count_memo_.end()) return it->second;
    RefinedCount counted = refine_counts(n, l, RefineBy::catalan, limits_);
    return count_memo_.emplace(key, std::move(counted)).first->second;
}

const MultiLaurent& WeightEngine::tree_generating_polynomial(int n) {
    auto it = m_n_memo_.find(n);
    if (it != m_n_memo_.end()) return it->second;
    return m_n_memo_.emplace(n, monotone_triangle_polynomial(n)).first->second;
}

UniPoly WeightEngine::interpolation_route(const CentredCatalanSet& s) {
    if (s.size() <= 2) return UniPoly(Rational(1));
    const int n = s.size() - 1;
    const long d = area(motzkin_of_set(s));
    const std::string key = s.encode();

    // sample l = 2..d+3; the last point is surplus and turns the degree
    // claim into a runtime check
    std::vector<int> ls;
    for (long l = 2; l <= d + 3; ++l) ls.push_back(static_cast<int>(l));
    std::vector<int> missing;
    for (int l : ls) {
        if (!count_memo_.count({n, l})) missing.push_back(l);
    }
    if (!missing.empty()) {
        std::vector<RefinedCount> fresh(missing.size());
        ResourceLimits limits = limits_;
        parallel_for(missing.size(), [&](std::size_t i) {
            fresh[i] = refine_counts(n, missing[i], RefineBy::catalan, limits);
        }, jobs_);
        for (std::size_t i = 0; i < missing.size(); ++i) {
            count_memo_.emplace(std::make_pair(n, missing[i]), std::move(fresh[i]));
        }
    }

    std::vector<std::pair<BigInt, Rational>> points;
    for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
        points.emplace_back(ls[i], Rational(counts(n, ls[i]).at(key)));
    }
    UniPoly w = interpolate(points);
    const int surplus = ls.back();
    if (w.at(surplus) != Rational(counts(n, surplus).at(key))) {
        throw InternalError("degree assumption failed for " + key +
                            ": surplus sample at l=" + std::to_string(surplus) + " disagrees");
    }
    if (w.degree() > d) throw InternalError("interpolant degree exceeds the Motzkin area");
    return w;
}

UniPoly WeightEngine::operator_route(const CentredCatalanSet& s) {
    if (s.size() <= 2) return UniPoly(Rational(1));
    return operator_route_impl(s, tree_generating_polynomial(s.size() - 1));
}

UniPoly WeightEngine::irreducible_weight(const CentredCatalanSet& s, WeightMethod method) {
    switch (method) {
        case WeightMethod::interpolation: return interpolation_route(s);
        case WeightMethod::operator_formula: return operator_route(s);
        case WeightMethod::both: {
            UniPoly a = interpolation_route(s);
            UniPoly b = operator_route(s);
            if (a != b) {
                throw InternalError("interpolation and operator routes disagree for " + s.encode());
            }
            return a;
        }
        case WeightMethod::automatic:
            // interpolation while the enumeration stays desk-sized
            return s.size() <= 6 ? interpolation_route(s) : operator_route(s);
    }
    throw InternalError("unknown method");
}

UniPoly WeightEngine::weight_poly(const CentredCatalanSet& s, WeightMethod method,
                                  std::vector<std::string>& provenance) {
    limits_.require_set_size(s.size());
    auto note = [&](const std::string& p) {
        if (std::find(provenance.begin(), provenance.end(), p) == provenance.end()) {
            provenance.push_back(p);
        }
    };
    UniPoly w(Rational(1));
    long shift = 0;
    for (const CentredCatalanSet& factor : irreducible_decomposition(s)) {
        WeightMethod factor_method = method;
        if (method == WeightMethod::automatic) {
            factor_method = factor.size() <= 6 ? WeightMethod::interpolation
                                               : WeightMethod::operator_formula;
        }
        if (factor.size() > 2) {
            if (factor_method == WeightMethod::both) {
                note("interp");
                note("operator");
            } else {
                note(factor_method == WeightMethod::interpolation ? "interp" : "operator");
            }
        }
        UniPoly factor_w = irreducible_weight(factor, factor_method);
        w *= factor_w.shifted(Rational(shift));
        shift += 2 * (factor.size() - 1);
    }
    if (provenance.empty()) note("trivial");
    return w;
}

const WeightRecord& WeightEngine::set_weight(const CentredCatalanSet& s, WeightMethod method) {
    std::string memo_key = s.encode() + "#" + method_name(method);
    auto it = set_records_.find(memo_key);
    if (it != set_records_.end()) return it->second;

    WeightRecord record;
    record.key = s.encode();
    record.kind = "set";
    record.w = weight_poly(s, method, record.provenance);

    const SkewShape shape = shapes_of_set(s);
    record.shape = shape.encode();
    record.f = skew_syt_count(shape);
    record.degree = record.w.degree();
    const long d = area(motzkin_of_set(s));
    if (record.degree != d || d != shape.cells()) {
        throw InternalError("degree of w_l(" + record.key + ") is " +
                            std::to_string(record.degree) + ", expected area " + std::to_string(d));
    }
    record.leading = record.w.degree() < 0 ? Rational(0) : record.w.leading();
    if (record.leading != Rational(record.f, factorial(d))) {
        throw InternalError("leading coefficient of w_l(" + record.key +
                            ") differs from f/degree!");
    }
    record.roots = rational_roots(record.w);
    return set_records_.emplace(memo_key, std::move(record)).first->second;
}

const WeightRecord& WeightEngine::motzkin_weight(const MotzkinPath& m, WeightMethod method) {
    std::string memo_key = m.encode() + "#" + method_name(method);
    auto it = motzkin_records_.find(memo_key);
    if (it != motzkin_records_.end()) return it->second;

    WeightRecord record;
    record.key = m.encode();
    record.kind = "motzkin";
    record.w = UniPoly();
    record.f = 0;
    for (const CentredCatalanSet& s : sets_with_motzkin(m)) {
        const WeightRecord& sw = set_weight(s, method);
        record.w += sw.w;
        record.f += sw.f;
        for (const auto& p : sw.provenance) {
            if (std::find(record.provenance.begin(), record.provenance.end(), p) ==
                record.provenance.end()) {
                record.provenance.push_back(p);
            }
        }
    }
    record.degree = record.w.degree();
    const long d = area(m);
    if (record.degree != d) {
        throw InternalError("degree of w_l(" + record.key + ") differs from the path area");
    }
    record.leading = record.w.degree() < 0 ? Rational(0) : record.w.leading();
    if (record.leading != Rational(record.f, factorial(d))) {
        throw InternalError("leading coefficient of w_l(" + record.key +
                            ") differs from sum(f)/area!");
    }
    record.roots = rational_roots(record.w);
    return motzkin_records_.emplace(memo_key, std::move(record)).first->second;
}

}  // namespace astlab
