#include "astlab/tableaux.hpp"

#include "astlab/determinant.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace astlab {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 1; i < parts_.size(); ++i) {
        if (parts_[i - 1] < parts_[i]) throw ValidationError("partition parts must weakly decrease");
    }
    if (!parts_.empty() && parts_.back() < 0) throw ValidationError("negative part");
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

long Partition::part(int i) const {
    if (i < 0) throw ValidationError("negative part index");
    if (i >= length()) return 0;
    return parts_[static_cast<std::size_t>(i)];
}

long Partition::cells() const {
    long total = 0;
    for (long p : parts_) total += p;
    return total;
}

Partition Partition::conjugate() const {
    std::vector<long> cols;
    if (parts_.empty()) return Partition();
    cols.resize(static_cast<std::size_t>(parts_.front()), 0);
    for (long p : parts_) {
        for (long c = 0; c < p; ++c) ++cols[static_cast<std::size_t>(c)];
    }
    return Partition(std::move(cols));
}

bool Partition::contains(const Partition& inner) const {
    for (int i = 0; i < inner.length(); ++i) {
        if (part(i) < inner.part(i)) return false;
    }
    return true;
}

Partition Partition::padded_shifted(int rows, long shift) const {
    if (rows < length()) throw ValidationError("cannot pad below the current length");
    std::vector<long> out;
    for (int i = 0; i < rows; ++i) out.push_back(part(i) + shift);
    return Partition(std::move(out));
}

Partition Partition::concatenated(const Partition& tail) const {
    std::vector<long> out = parts_;
    out.insert(out.end(), tail.parts_.begin(), tail.parts_.end());
    return Partition(std::move(out));
}

std::string Partition::encode() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out + "]";
}

SkewShape shapes_of_set(const CentredCatalanSet& s) {
    const auto negs = s.negatives();
    const auto poss = s.positives();
    const int u = static_cast<int>(negs.size());
    // lambda' entry for the j-th positive (1-based overall index u+1+j)
    std::vector<long> lambda_conj;
    for (std::size_t j = 0; j < poss.size(); ++j) {
        lambda_conj.push_back(static_cast<long>(u + 1 + j) - poss[j]);
    }
    std::vector<long> mu;
    for (std::size_t i = 0; i < negs.size(); ++i) {
        mu.push_back(-negs[i] - static_cast<long>(u - i));
    }
    SkewShape shape{Partition(std::move(lambda_conj)).conjugate(), Partition(std::move(mu))};
    if (!shape.outer.contains(shape.inner)) {
        throw InternalError("mu(S) not contained in lambda(S) for " + s.encode());
    }
    return shape;
}

SkewShape shapes_of_set_by_paths(const CentredCatalanSet& s) {
    const int n = s.size() - 1;
    // lambda-path steps east exactly at members, mu-path north exactly at
    // negated members; the partition above a monotone path lists, per north
    // step from the top band down, the number of east steps before it.
    std::vector<long> lambda_x, mu_x;
    long lambda_east = 0, mu_east = 0;
    for (int i = 1; i <= n; ++i) {
        if (s.contains(i)) {
            ++lambda_east;
        } else {
            lambda_x.push_back(lambda_east);
        }
        if (s.contains(-i)) {
            mu_x.push_back(mu_east);
        } else {
            ++mu_east;
        }
    }
    std::reverse(lambda_x.begin(), lambda_x.end());
    std::reverse(mu_x.begin(), mu_x.end());
    return SkewShape{Partition(std::move(lambda_x)), Partition(std::move(mu_x))};
}

BigInt skew_syt_count(const SkewShape& shape) {
    if (!shape.outer.contains(shape.inner)) throw ValidationError("inner not inside outer");
    const int rows = shape.outer.length();
    std::map<std::vector<long>, BigInt> memo;
    std::vector<long> inner_padded;
    for (int i = 0; i < rows; ++i) inner_padded.push_back(shape.inner.part(i));

    std::function<BigInt(const std::vector<long>&)> count = [&](const std::vector<long>& nu) {
        if (nu == inner_padded) return BigInt(1);
        auto it = memo.find(nu);
        if (it != memo.end()) return it->second;
        BigInt total = 0;
        for (int r = 0; r < rows; ++r) {
            // cell removable from row r?
            if (nu[static_cast<std::size_t>(r)] <= inner_padded[static_cast<std::size_t>(r)]) continue;
            if (r + 1 < rows && nu[static_cast<std::size_t>(r)] == nu[static_cast<std::size_t>(r + 1)]) continue;
            std::vector<long> prev = nu;
            --prev[static_cast<std::size_t>(r)];
            if (r > 0 && prev[static_cast<std::size_t>(r)] > prev[static_cast<std::size_t>(r - 1)]) continue;
            total += count(prev);
        }
        memo.emplace(nu, total);
        return memo.at(nu);
    };

    std::vector<long> outer_padded;
    for (int i = 0; i < rows; ++i) outer_padded.push_back(shape.outer.part(i));
    return count(outer_padded);
}

BigInt skew_syt_count_determinant(const SkewShape& shape) {
    if (!shape.outer.contains(shape.inner)) throw ValidationError("inner not inside outer");
    const int r = shape.outer.length();
    if (r == 0) return 1;
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(r),
                                         std::vector<Rational>(static_cast<std::size_t>(r)));
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            long arg = shape.outer.part(i) - shape.inner.part(j) - i + j;
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                arg < 0 ? Rational(0) : Rational(1) / Rational(factorial(arg));
        }
    }
    Rational det = det_exact(std::move(m));
    Rational result = det * Rational(factorial(shape.cells()));
    if (!is_integer(result)) throw InternalError("Aitken determinant is not an integer");
    return to_integer(result);
}

ConcatShapeReport concat_shape_relation(const CentredCatalanSet& s1, const CentredCatalanSet& s2) {
    ConcatShapeReport report;
    const CentredCatalanSet combined = concat_sets(s1, s2);
    report.direct = shapes_of_set(combined);

    const SkewShape a = shapes_of_set(s1);
    const SkewShape b = shapes_of_set(s2);
    const int u1 = static_cast<int>(s1.negatives().size());
    const int u2 = static_cast<int>(s2.negatives().size());
    const long shift = static_cast<long>(s1.size() - 1 - u1);  // box width of shape(S1)
    report.predicted = SkewShape{b.outer.padded_shifted(u2, shift).concatenated(a.outer),
                                 b.inner.padded_shifted(u2, shift).concatenated(a.inner)};
    report.shapes_match = report.direct == report.predicted;

    report.f_direct = skew_syt_count(report.direct);
    const long d1 = a.cells();
    const long d2 = b.cells();
    report.f_product =
        binomial(BigInt(d1 + d2), d1) * skew_syt_count(a) * skew_syt_count(b);
    report.f_match = report.f_direct == report.f_product;
    return report;
}

}  // namespace astlab
