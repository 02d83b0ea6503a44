#pragma once

#include "astlab/numeric.hpp"
#include "astlab/paths.hpp"
#include "astlab/trapezoid.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace astlab {

// Tree parameters attached to an irreducible centred Catalan set
// S = {sigma_1..sigma_u, 0, sigma_{u+1}..sigma_n}: per north-east diagonal i
// the bottom -sigma_i-1 cells are deleted with bottom entry sigma_i+1, per
// south-east diagonal j the bottom sigma_j-1 cells are deleted with bottom
// entry l+sigma_j-1, and the remaining bottom row is (sigma_u+1, l).
struct STParams {
    int n = 0;               // triangle rows (= |S| - 1)
    int u = 0;               // number of negative elements
    std::vector<int> sigma;  // the nonzero elements of S, ascending

    // deletion counts in the paper's shape: entries for diagonals 1..u-1
    std::vector<int> ne_deletions() const;
    // entries for diagonals u+2..n
    std::vector<int> se_deletions() const;
    // bottom entries k_1..k_n at a concrete l
    std::vector<long> bottom_entries(long l) const;
    // k_i = k_const(i) for i <= u, k_i = l + k_offset(i) for i > u (1-based)
    long k_const(int i) const;
    long k_offset(int i) const;

    bool operator==(const STParams&) const = default;
};

// Rejects reducible sets and sets of size < 3 (outside the bijection's scope).
STParams st_params_of(const CentredCatalanSet& s);

// An (S,l)-tree stored as the full triangular array, rows bottom-up, where
// the deleted cells of each clipped diagonal carry their forced value. Row r
// (1-based) has n+1-r entries.
class STTree {
public:
    static STTree from_grid(STParams params, long l, std::vector<std::vector<long>> grid);

    const STParams& params() const { return params_; }
    long base() const { return l_; }
    const std::vector<std::vector<long>>& grid() const { return grid_; }
    long value(int r, int c) const;  // 1-based row from bottom, column from left

    // false exactly for the deleted prefix cells of the clipped diagonals
    bool cell_exists(int r, int c) const;
    // forced value at (r,c) when the cell is part of a clipped diagonal's
    // bottom run (including the prescribed bottom entry itself)
    std::optional<long> forced_value(int r, int c) const;

    // number of distinct values strictly between 0 and l among existing cells
    long free_columns() const;
    // equivalence-class invariant: exact values at entries <= 0 or >= l,
    // order ranks for the interior values
    std::string class_key() const;

    std::string encode() const;

    bool operator==(const STTree&) const = default;

private:
    STTree(STParams params, long l, std::vector<std::vector<long>> grid)
        : params_(std::move(params)), l_(l), grid_(std::move(grid)) {}
    STParams params_;
    long l_ = 0;
    std::vector<std::vector<long>> grid_;
};

// Complete backtracking enumeration for integer l >= 1.
void enumerate_st_trees(const STParams& params, long l,
                        const std::function<bool(const STTree&)>& visit);
std::uint64_t count_st_trees(const STParams& params, long l);

// Row i of the tree lists the column labels of A whose first nonzero entry
// in rows i..n is positive. Requires S(A) irreducible of size >= 3.
STTree tree_of_trapezoid(const ASTrapezoid& a);
ASTrapezoid trapezoid_of_tree(const STTree& t);

struct TreeClass {
    std::string key;
    long free_columns = 0;
    std::uint64_t size = 0;
};

// Partition of all (S,l)-trees into equivalence classes, sorted by key.
std::vector<TreeClass> equivalence_classes(const CentredCatalanSet& s, long l,
                                           const ResourceLimits& limits = ResourceLimits::from_env());

}  // namespace astlab
