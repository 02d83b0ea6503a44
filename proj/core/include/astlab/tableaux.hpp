#pragma once

#include "astlab/numeric.hpp"
#include "astlab/paths.hpp"

#include <string>
#include <vector>

namespace astlab {

// Integer partition, weakly decreasing parts, trailing zeros stripped.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<long> parts);

    const std::vector<long>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    long part(int i) const;  // 0 beyond the last part
    long cells() const;
    Partition conjugate() const;
    bool contains(const Partition& inner) const;

    Partition padded_shifted(int rows, long shift) const;  // pad to rows parts, add shift
    Partition concatenated(const Partition& tail) const;   // parts of *this then tail

    std::string encode() const;  // "[2,2]", "[]"
    bool operator==(const Partition&) const = default;

private:
    std::vector<long> parts_;
};

struct SkewShape {
    Partition outer;
    Partition inner;

    long cells() const { return outer.cells() - inner.cells(); }
    std::string encode() const { return outer.encode() + "/" + inner.encode(); }
    bool operator==(const SkewShape&) const = default;
};

// lambda(S)/mu(S) from the defining formulas: for
// S = {s_1..s_u, 0, s_{u+1}..s_n},
//   lambda = (u+1-s_{u+1}, ..., n-s_n)'  and  mu = (-s_1-u, ..., -s_u-1).
SkewShape shapes_of_set(const CentredCatalanSet& s);

// Same shape from the N/E lattice-path description; used as a cross-check.
SkewShape shapes_of_set_by_paths(const CentredCatalanSet& s);

// Number of standard Young tableaux of skew shape, by dynamic programming
// over the chains of partitions between inner and outer.
BigInt skew_syt_count(const SkewShape& shape);

// Aitken determinant |shape|! * det(1/((lambda_i - mu_j - i + j)!)),
// negative factorial arguments contributing zero entries.
BigInt skew_syt_count_determinant(const SkewShape& shape);

struct ConcatShapeReport {
    SkewShape direct;
    SkewShape predicted;
    bool shapes_match = false;
    BigInt f_direct;
    BigInt f_product;  // binom(d1+d2, d1) * f1 * f2
    bool f_match = false;
    bool ok() const { return shapes_match && f_match; }
};

// Concatenation relation: the shape of S1 o S2 stacks the shape of S2 above
// and to the right of the shape of S1 (top block shifted by the width of
// S1's bounding box), and the tableau count multiplies up to the binomial
// that interleaves the two blocks.
ConcatShapeReport concat_shape_relation(const CentredCatalanSet& s1, const CentredCatalanSet& s2);

}  // namespace astlab
