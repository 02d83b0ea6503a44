#include "astlab/laurent.hpp"

#include <algorithm>

namespace astlab {

MultiLaurent MultiLaurent::constant(int nvars, const Rational& c) {
    MultiLaurent f(nvars);
    if (c != 0) f.terms_.emplace(Exponents(static_cast<std::size_t>(nvars), 0), c);
    return f;
}

MultiLaurent MultiLaurent::monomial(int nvars, Exponents exps, const Rational& c) {
    if (static_cast<int>(exps.size()) != nvars) throw ValidationError("exponent arity mismatch");
    MultiLaurent f(nvars);
    if (c != 0) f.terms_.emplace(std::move(exps), c);
    return f;
}

MultiLaurent MultiLaurent::var_power(int nvars, int i, int exp) {
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(i)] = exp;
    return monomial(nvars, std::move(e), 1);
}

void MultiLaurent::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiLaurent MultiLaurent::operator-() const {
    MultiLaurent r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiLaurent& MultiLaurent::operator+=(const MultiLaurent& rhs) {
    if (nvars_ != rhs.nvars_) throw ValidationError("variable arity mismatch");
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MultiLaurent& MultiLaurent::operator-=(const MultiLaurent& rhs) {
    if (nvars_ != rhs.nvars_) throw ValidationError("variable arity mismatch");
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

MultiLaurent operator*(const MultiLaurent& lhs, const MultiLaurent& rhs) {
    if (lhs.nvars_ != rhs.nvars_) throw ValidationError("variable arity mismatch");
    MultiLaurent out(lhs.nvars_);
    MultiLaurent::Exponents e(static_cast<std::size_t>(lhs.nvars_));
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiLaurent& MultiLaurent::operator*=(const MultiLaurent& rhs) {
    *this = *this * rhs;
    return *this;
}

MultiLaurent& MultiLaurent::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

MultiLaurent MultiLaurent::coefficient_of(int i, int exp) const {
    MultiLaurent out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[static_cast<std::size_t>(i)] != exp) continue;
        Exponents reduced = e;
        reduced[static_cast<std::size_t>(i)] = 0;
        out.add_term(reduced, c);
    }
    return out;
}

std::vector<int> MultiLaurent::exponent_range(int i) const {
    std::vector<int> exps;
    for (const auto& [e, c] : terms_) exps.push_back(e[static_cast<std::size_t>(i)]);
    std::sort(exps.begin(), exps.end());
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
    return exps;
}

Rational MultiLaurent::constant_term() const {
    auto it = terms_.find(Exponents(static_cast<std::size_t>(nvars_), 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

MultiLaurent MultiLaurent::shifted_var(int i, int delta) const {
    if (delta != 1 && delta != -1) throw ValidationError("shift delta must be +1 or -1");
    MultiLaurent out(nvars_);
    for (const auto& [e, c] : terms_) {
        int deg = e[static_cast<std::size_t>(i)];
        if (deg < 0) throw ValidationError("cannot shift a variable with negative exponents");
        // (x + delta)^deg
        BigInt binom = 1;
        BigInt dpow = 1;
        Exponents reduced = e;
        for (int k = deg; k >= 0; --k) {
            reduced[static_cast<std::size_t>(i)] = k;
            out.add_term(reduced, c * Rational(binom * dpow));
            binom = binom * k / (deg - k + 1);
            dpow *= delta;
        }
    }
    return out;
}

MultiLaurent MultiLaurent::substituted(int i, const Rational& c) const {
    MultiLaurent out(nvars_);
    for (const auto& [e, coeff] : terms_) {
        int deg = e[static_cast<std::size_t>(i)];
        Rational scale;
        if (deg >= 0) {
            scale = 1;
            for (int k = 0; k < deg; ++k) scale *= c;
        } else {
            if (c == 0) throw ValidationError("substituting zero into a negative exponent");
            scale = 1;
            for (int k = 0; k < -deg; ++k) scale /= c;
        }
        Exponents reduced = e;
        reduced[static_cast<std::size_t>(i)] = 0;
        out.add_term(reduced, coeff * scale);
    }
    return out;
}

std::string MultiLaurent::pretty(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += to_string(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            out += "*" + names[i];
            if (e[i] != 1) out += "^" + std::to_string(e[i]);
        }
    }
    return out;
}

}  // namespace astlab
