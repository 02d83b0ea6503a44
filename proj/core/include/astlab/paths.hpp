#pragma once

#include "astlab/numeric.hpp"

#include <compare>
#include <string>
#include <vector>

namespace astlab {

// Dilation s_l: x -> x + l for x > 0, x -> x - l for x < 0, 0 -> 0.
int dilate(int x, int l);

// An n-subset S of {-n+1, ..., n-1} with 0 in S and
// |S cap {-i, ..., i}| >= i+1 for all 0 <= i <= n-1.
class CentredCatalanSet {
public:
    // Validates both invariants; input must be sorted and duplicate-free.
    static CentredCatalanSet validated(std::vector<int> elements);
    static CentredCatalanSet parse(const std::string& text);

    int size() const { return static_cast<int>(elems_.size()); }
    const std::vector<int>& elements() const { return elems_; }
    bool contains(int x) const;
    // negatives (ascending), positives (ascending); 0 excluded
    std::vector<int> negatives() const;
    std::vector<int> positives() const;

    CentredCatalanSet reflected() const;  // S -> {-s : s in S}

    // canonical text encoding "{-3,-1,0,1,3,4}"
    std::string encode() const;

    auto operator<=>(const CentredCatalanSet&) const = default;

private:
    CentredCatalanSet() = default;
    std::vector<int> elems_;
};

enum class DyckStep : int { NE = +1, SE = -1 };

struct DyckPath {
    std::vector<DyckStep> steps;

    static DyckPath validated(std::vector<DyckStep> steps);
    std::string encode() const;  // 'U' / 'D' per step
    bool operator==(const DyckPath&) const = default;
};

// Steps over {+1, 0, -1} with nonnegative prefix sums and total sum 0.
class MotzkinPath {
public:
    static MotzkinPath validated(std::vector<int> steps);
    static MotzkinPath parse(const std::string& text);  // 'U' / 'F' / 'D'

    int length() const { return static_cast<int>(steps_.size()); }
    const std::vector<int>& steps() const { return steps_; }
    std::vector<int> heights() const;  // length()+1 values, h_0 = 0
    bool is_irreducible() const;
    bool ends_with_down() const { return !steps_.empty() && steps_.back() == -1; }

    std::string encode() const;

    auto operator<=>(const MotzkinPath&) const = default;

private:
    MotzkinPath() = default;
    std::vector<int> steps_;
};

// Canonical bijection to Dyck paths: read 0, -1, 1, -2, 2, ..., -n+1, n-1, n
// and draw NE exactly for members of S.
DyckPath dyck_of_set(const CentredCatalanSet& s);

// m_i(S) = |{-i, i} cap S| - 1 for 1 <= i <= n-1.
MotzkinPath motzkin_of_set(const CentredCatalanSet& s);

// Averaging map: step i is the average of Dyck steps 2i and 2i+1 (1-based).
MotzkinPath motzkin_of_dyck(const DyckPath& d);

// S1 o S2 = S1 cup s_{|S1|-1}(S2)
CentredCatalanSet concat_sets(const CentredCatalanSet& s1, const CentredCatalanSet& s2);
MotzkinPath concat_paths(const MotzkinPath& m1, const MotzkinPath& m2);

bool is_irreducible(const CentredCatalanSet& s);

// Ordered irreducible factors; re-concatenation returns s. The unit {0}
// decomposes as itself.
std::vector<CentredCatalanSet> irreducible_decomposition(const CentredCatalanSet& s);
std::vector<MotzkinPath> irreducible_components(const MotzkinPath& m);

// Region between the path and the axis, by half-sums per step; always an
// integer for a closed path (asserted).
long area(const MotzkinPath& m);

// Complete enumerations in lexicographic order of the canonical encoding.
std::vector<CentredCatalanSet> enumerate_sets(int n,
                                              const ResourceLimits& limits = ResourceLimits::from_env());
std::vector<MotzkinPath> enumerate_motzkin(int n,
                                           const ResourceLimits& limits = ResourceLimits::from_env());
std::vector<CentredCatalanSet> enumerate_irreducible_sets(
    int n, const ResourceLimits& limits = ResourceLimits::from_env());
std::vector<MotzkinPath> enumerate_irreducible_motzkin(
    int n, const ResourceLimits& limits = ResourceLimits::from_env());

// All S with motzkin_of_set(S) = m, in encoding order (2^#flat-steps many).
std::vector<CentredCatalanSet> sets_with_motzkin(const MotzkinPath& m);

}  // namespace astlab
