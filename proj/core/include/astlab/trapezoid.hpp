#pragma once

#include "astlab/numeric.hpp"
#include "astlab/paths.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace astlab {

// An (n,l)-AS-trapezoid: n centred rows, the i-th row from the bottom has
// l+2i-1 entries in {-1,0,1} spanning column labels -i+1 .. l+i-1.
// Invariants: every row sums to 1 with alternating nonzero entries, nonzero
// entries alternate within every column and the first one from the top is
// positive, and the central l-1 columns (labels 1..l-1) sum to zero.
class ASTrapezoid {
public:
    // rows are given bottom-up; throws a distinct message per violated clause
    static ASTrapezoid validated(int l, std::vector<std::vector<int>> rows);

    int rows() const { return static_cast<int>(rows_.size()); }
    int base() const { return l_; }
    // 1-based row from the bottom, absolute column label; 0 outside the row
    int entry(int row, int column) const;
    const std::vector<std::vector<int>>& row_data() const { return rows_; }
    int column_sum(int column) const;

    // text format: one row per line, bottom row first, entries space-separated
    std::string encode() const;
    static ASTrapezoid parse(const std::string& text);

    bool operator==(const ASTrapezoid&) const = default;

private:
    ASTrapezoid(int l, std::vector<std::vector<int>> rows) : l_(l), rows_(std::move(rows)) {}
    int l_ = 0;
    std::vector<std::vector<int>> rows_;
};

// Columns with positive sum, shifted by -1 (labels <= 0) or -(l-1)
// (labels >= 1), plus 0; a centred Catalan set of size n+1.
CentredCatalanSet catalan_set_of(const ASTrapezoid& a);
MotzkinPath motzkin_of(const ASTrapezoid& a);

// Complete duplicate-free enumeration, built top row first with per-column
// next-allowed-sign state; branches that cannot zero the central column sums
// are pruned. The visitor returns false to stop early.
void enumerate_trapezoids(int n, int l, const std::function<bool(const ASTrapezoid&)>& visit,
                          const ResourceLimits& limits = ResourceLimits::from_env());

std::uint64_t count_trapezoids(int n, int l,
                               const ResourceLimits& limits = ResourceLimits::from_env());

enum class RefineBy { catalan, motzkin };

struct RefinedCount {
    int n = 0;
    int l = 0;
    RefineBy by = RefineBy::catalan;
    std::map<std::string, std::uint64_t> counts;  // canonical key -> count

    std::uint64_t total() const;
    std::uint64_t at(const std::string& key) const;  // 0 when absent
    std::string to_json_lines() const;               // one {n,l,key,count} per line
};

RefinedCount refine_counts(int n, int l, RefineBy by,
                           const ResourceLimits& limits = ResourceLimits::from_env());

// Lemma-style splitting: bottom n1 rows form an (n1,l)-trapezoid, the rest
// an (n-n1, l+2*n1)-trapezoid; defined exactly when S(A) factors after n1.
std::pair<ASTrapezoid, ASTrapezoid> split(const ASTrapezoid& a, int n1);
// Inverse: stack top centred above bottom; requires
// top.base() == bottom.base() + 2*bottom.rows().
ASTrapezoid join(const ASTrapezoid& bottom, const ASTrapezoid& top);

// Greedy construction filling every allowed position with a 1; row i of the
// result has exactly 1 + m_1 + ... + m_i ones, the sharp bound. Needs l >= 2.
ASTrapezoid max_ones_witness(const CentredCatalanSet& s, int l);

// Upper bound on the number of 1's in row i (1-based) for trapezoids with
// catalan set s.
long max_ones_bound(const CentredCatalanSet& s, int i);

}  // namespace astlab
