#include "astlab/polynomial.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace astlab {

UniPoly::UniPoly(const Rational& c) {
    if (c != 0) coeffs_.push_back(c);
}

UniPoly::UniPoly(long c) : UniPoly(Rational(c)) {}

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::variable() { return affine(0, 1); }

UniPoly UniPoly::affine(const Rational& constant, const Rational& slope) {
    return UniPoly(std::vector<Rational>{constant, slope});
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& UniPoly::leading() const {
    if (coeffs_.empty()) throw ValidationError("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return UniPoly();
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return UniPoly(std::move(out));
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Rational UniPoly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::pow(unsigned long e) const {
    UniPoly r(Rational(1));
    UniPoly b = *this;
    while (e) {
        if (e & 1) r *= b;
        if (e >>= 1) b *= b;
    }
    return r;
}

UniPoly UniPoly::compose_affine(const Rational& scale, const Rational& shift) const {
    UniPoly inner = affine(shift, scale);
    UniPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * inner + UniPoly(*it);
    }
    return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw ValidationError("division by the zero polynomial");
    UniPoly rem = *this;
    if (rem.degree() < divisor.degree()) return {UniPoly(), rem};
    std::vector<Rational> q(static_cast<std::size_t>(rem.degree() - divisor.degree()) + 1,
                            Rational(0));
    const Rational& lead = divisor.leading();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        int shift = rem.degree() - divisor.degree();
        Rational factor = rem.leading() / lead;
        q[static_cast<std::size_t>(shift)] = factor;
        for (std::size_t i = 0; i < divisor.coeffs_.size(); ++i) {
            rem.coeffs_[i + static_cast<std::size_t>(shift)] -= factor * divisor.coeffs_[i];
        }
        rem.trim();
    }
    return {UniPoly(std::move(q)), rem};
}

bool UniPoly::divisible_by(const UniPoly& divisor) const {
    return divmod(divisor).second.is_zero();
}

std::string UniPoly::coeff_list() const {
    if (coeffs_.empty()) return "0/1";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ',';
        out += to_fraction_string(coeffs_[i]);
    }
    return out;
}

UniPoly UniPoly::from_coeff_list(const std::string& text) {
    std::vector<Rational> coeffs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) coeffs.push_back(parse_rational(item));
    return UniPoly(std::move(coeffs));
}

namespace {

std::string monomial_string(const Rational& c, int deg, bool leading_term) {
    std::string out;
    Rational a = c;
    if (a < 0) {
        out += '-';
        a = -a;
    } else if (!leading_term) {
        out += '+';
    }
    bool unit = (a == 1);
    if (!unit || deg == 0) out += to_string(a);
    if (deg >= 1) {
        out += 'l';
        if (deg >= 2) out += "^" + std::to_string(deg);
    }
    return out;
}

}  // namespace

std::string UniPoly::pretty() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int d = degree(); d >= 0; --d) {
        const Rational& c = coeffs_[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        out += monomial_string(c, d, out.empty());
    }
    return out;
}

std::string UniPoly::factored() const {
    if (is_zero()) return "0";
    if (degree() == 0) return to_string(coeffs_[0]);

    struct Factor {
        BigInt q;  // positive
        BigInt p;  // root = p/q
        int mult = 0;
    };
    std::vector<Factor> factors;
    UniPoly cofactor = *this;
    for (const Rational& root : rational_roots(*this)) {
        if (!factors.empty() && Rational(factors.back().p, factors.back().q) == root) {
            ++factors.back().mult;
        } else {
            factors.push_back({denom(root), numer(root), 1});
        }
        auto [quot, rem] = cofactor.divmod(affine(-root, 1));
        if (!rem.is_zero()) throw InternalError("rational root does not divide");
        cofactor = quot;
    }

    // cofactor = content * primitive integer polynomial with positive leading
    BigInt den_lcm = 1;
    for (const auto& c : cofactor.coeffs()) {
        den_lcm = boost::multiprecision::lcm(den_lcm, denom(c));
    }
    BigInt num_gcd = 0;
    for (const auto& c : cofactor.coeffs()) {
        num_gcd = boost::multiprecision::gcd(num_gcd, BigInt(numer(c) * (den_lcm / denom(c))));
    }
    if (num_gcd == 0) num_gcd = 1;
    Rational content(num_gcd, den_lcm);
    if (cofactor.leading() < 0) content = -content;
    UniPoly primitive = cofactor;
    primitive *= Rational(1) / content;

    Rational front = content;
    for (const auto& f : factors) {
        front /= Rational(power(f.q, static_cast<unsigned long>(f.mult)));
    }

    // integer-slope factors first (paper style), then the steeper ones
    std::stable_sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) {
        if (a.q != b.q) return a.q < b.q;
        return -a.p * b.q < -b.p * a.q;
    });

    std::string out;
    if (front != 1) out += "(" + to_string(front) + ")";
    for (const auto& f : factors) {
        std::string term;
        if (f.q != 1) term += f.q.str();
        term += 'l';
        if (f.p < 0) term += "+" + BigInt(-f.p).str();
        if (f.p > 0) term += "-" + f.p.str();
        out += "(" + term + ")";
        if (f.mult > 1) out += "^" + std::to_string(f.mult);
    }
    if (primitive.degree() >= 1) out += "(" + primitive.pretty() + ")";
    if (out.empty()) out = "1";
    return out;
}

UniPoly interpolate(const std::vector<std::pair<BigInt, Rational>>& points) {
    const std::size_t n = points.size();
    if (n == 0) return UniPoly();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (points[i].first == points[j].first) {
                throw ValidationError("duplicate abscissa " + points[i].first.str() +
                                      " in interpolation input");
            }
        }
    }
    // Newton divided differences
    std::vector<Rational> xs(n), dd(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = Rational(points[i].first);
        dd[i] = points[i].second;
    }
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    UniPoly result;
    for (std::size_t i = n; i-- > 0;) {
        result = result * UniPoly::affine(-xs[i], 1) + UniPoly(dd[i]);
    }
    return result;
}

UniPoly pochhammer(const UniPoly& x, long m) {
    UniPoly r(Rational(1));
    for (long j = 0; j < m; ++j) r *= x + UniPoly(Rational(j));
    return r;
}

namespace {

bool is_probably_prime(const BigInt& n) {
    if (n < 2) return false;
    return boost::multiprecision::miller_rabin_test(n, 32);
}

BigInt pollard_rho(const BigInt& n) {
    if (n % 2 == 0) return 2;
    SplitMix64 rng(0x5eedu + static_cast<std::uint64_t>(n % 1000003));
    while (true) {
        BigInt x = BigInt(rng.next()) % n;
        BigInt c = BigInt(rng.next()) % n;
        if (c == 0) c = 1;
        BigInt y = x, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            BigInt diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            d = boost::multiprecision::gcd(diff, n);
        }
        if (d != 1 && d != n) return d;
    }
}

void factorize(BigInt n, std::map<BigInt, int>& out) {
    if (n <= 1) return;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n == 1) return;
    // remaining part has no factor below 41; peel with rho
    std::vector<BigInt> stack{n};
    while (!stack.empty()) {
        BigInt m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (is_probably_prime(m)) {
            ++out[m];
            continue;
        }
        // trial division is enough for small composites
        if (m < 1000000) {
            for (BigInt p = 41; p * p <= m; p += 2) {
                while (m % p == 0) {
                    ++out[p];
                    m /= p;
                }
            }
            if (m > 1) ++out[m];
            continue;
        }
        BigInt d = pollard_rho(m);
        stack.push_back(d);
        stack.push_back(m / d);
    }
}

}  // namespace

std::vector<BigInt> divisors(const BigInt& n) {
    if (n == 0) throw ValidationError("divisors of zero requested");
    std::map<BigInt, int> fac;
    factorize(n < 0 ? BigInt(-n) : n, fac);
    std::vector<BigInt> divs{1};
    for (const auto& [p, e] : fac) {
        std::size_t count = divs.size();
        BigInt pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::vector<Rational> rational_roots(const UniPoly& p) {
    if (p.is_zero()) throw ValidationError("rational_roots of the zero polynomial");
    UniPoly work = p;
    std::vector<Rational> roots;

    // strip roots at zero
    while (work.coeff(0) == 0 && work.degree() >= 1) {
        roots.push_back(0);
        auto [quot, rem] = work.divmod(UniPoly::variable());
        if (!rem.is_zero()) throw InternalError("division by l left a remainder");
        work = quot;
    }
    if (work.degree() == 0) {
        std::sort(roots.begin(), roots.end());
        return roots;
    }

    // primitive integer form
    BigInt den_lcm = 1;
    for (const auto& c : work.coeffs()) den_lcm = boost::multiprecision::lcm(den_lcm, denom(c));
    std::vector<BigInt> ic;
    ic.reserve(work.coeffs().size());
    BigInt content = 0;
    for (const auto& c : work.coeffs()) {
        ic.push_back(numer(c) * (den_lcm / denom(c)));
        content = boost::multiprecision::gcd(content, ic.back());
    }
    for (auto& c : ic) c /= content;

    std::vector<BigInt> ps = divisors(ic.front());
    std::vector<BigInt> qs = divisors(ic.back());
    for (const BigInt& q : qs) {
        for (const BigInt& pn : ps) {
            if (boost::multiprecision::gcd(pn, q) != 1) continue;
            for (int sign : {1, -1}) {
                Rational cand(sign * pn, q);
                while (work.degree() >= 1 && work(cand) == 0) {
                    roots.push_back(cand);
                    auto [quot, rem] = work.divmod(UniPoly::affine(-cand, 1));
                    if (!rem.is_zero()) throw InternalError("root factor division failed");
                    work = quot;
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace astlab
