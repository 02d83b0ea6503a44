#include "astlab/sttree.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace astlab {

namespace {

STParams params_for(const CentredCatalanSet& s) {
    STParams p;
    p.n = s.size() - 1;
    for (int x : s.elements()) {
        if (x != 0) p.sigma.push_back(x);
    }
    p.u = static_cast<int>(s.negatives().size());
    return p;
}

int sigma_at(const STParams& p, int i) {  // 1-based
    return p.sigma[static_cast<std::size_t>(i - 1)];
}

}  // namespace

std::vector<int> STParams::ne_deletions() const {
    std::vector<int> out;
    for (int i = 1; i < u; ++i) out.push_back(-sigma[static_cast<std::size_t>(i - 1)] - 1);
    return out;
}

std::vector<int> STParams::se_deletions() const {
    std::vector<int> out;
    for (int i = u + 2; i <= n; ++i) out.push_back(sigma[static_cast<std::size_t>(i - 1)] - 1);
    return out;
}

long STParams::k_const(int i) const {
    if (i < 1 || i > u) throw ValidationError("k_const index out of range");
    return sigma[static_cast<std::size_t>(i - 1)] + 1;
}

long STParams::k_offset(int i) const {
    if (i <= u || i > n) throw ValidationError("k_offset index out of range");
    return sigma[static_cast<std::size_t>(i - 1)] - 1;
}

std::vector<long> STParams::bottom_entries(long l) const {
    std::vector<long> k;
    for (int i = 1; i <= n; ++i) k.push_back(i <= u ? k_const(i) : l + k_offset(i));
    return k;
}

STParams st_params_of(const CentredCatalanSet& s) {
    if (s.size() < 3) throw ValidationError("tree parameters need a set of size >= 3");
    if (!is_irreducible(s)) throw ValidationError("tree parameters need an irreducible set");
    return params_for(s);
}

namespace {

// Forced prefix values of the full grid: cell (r,c) sits on north-east
// diagonal c and south-east diagonal c+r-1.
std::optional<long> grid_forced(const STParams& p, long l, int r, int c) {
    std::optional<long> value;
    if (c <= p.u && r <= -sigma_at(p, c)) value = sigma_at(p, c) + 1;
    int j = c + r - 1;
    if (j >= p.u + 1 && j <= p.n && r <= sigma_at(p, j)) {
        long se = l + sigma_at(p, j) - 1;
        if (value && *value != se) {
            throw InternalError("conflicting forced values in tree grid");
        }
        value = se;
    }
    return value;
}

bool grid_deleted(const STParams& p, int r, int c) {
    if (c <= p.u && r <= -sigma_at(p, c) - 1) return true;
    int j = c + r - 1;
    if (j >= p.u + 1 && j <= p.n && r <= sigma_at(p, j) - 1) return true;
    return false;
}

}  // namespace

STTree STTree::from_grid(STParams params, long l, std::vector<std::vector<long>> grid) {
    const int n = params.n;
    if (l < 1) throw ValidationError("tree base l must be >= 1");
    if (static_cast<int>(grid.size()) != n) throw ValidationError("grid must have n rows");
    for (int r = 1; r <= n; ++r) {
        if (static_cast<int>(grid[static_cast<std::size_t>(r - 1)].size()) != n + 1 - r) {
            throw ValidationError("row " + std::to_string(r) + " must have " +
                                  std::to_string(n + 1 - r) + " entries");
        }
    }
    auto at = [&](int r, int c) -> long {
        return grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)];
    };
    for (int r = 1; r <= n; ++r) {
        for (int c = 1; c <= n + 1 - r; ++c) {
            if (auto forced = grid_forced(params, l, r, c); forced && *forced != at(r, c)) {
                throw ValidationError("forced entry mismatch at row " + std::to_string(r) +
                                      ", column " + std::to_string(c));
            }
            if (c > 1 && at(r, c - 1) >= at(r, c)) {
                throw ValidationError("rows must strictly increase eastward");
            }
            if (r > 1) {
                if (at(r - 1, c) > at(r, c)) {
                    throw ValidationError("north-east diagonals must weakly increase");
                }
                if (at(r, c) > at(r - 1, c + 1)) {
                    throw ValidationError("south-east diagonals must weakly increase");
                }
            }
        }
    }
    return STTree(std::move(params), l, std::move(grid));
}

long STTree::value(int r, int c) const {
    return grid_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)];
}

bool STTree::cell_exists(int r, int c) const { return !grid_deleted(params_, r, c); }

std::optional<long> STTree::forced_value(int r, int c) const {
    return grid_forced(params_, l_, r, c);
}

long STTree::free_columns() const {
    std::set<long> interior;
    for (int r = 1; r <= params_.n; ++r) {
        for (int c = 1; c <= params_.n + 1 - r; ++c) {
            if (!cell_exists(r, c)) continue;
            long v = value(r, c);
            if (0 < v && v < l_) interior.insert(v);
        }
    }
    return static_cast<long>(interior.size());
}

std::string STTree::class_key() const {
    std::set<long> interior;
    for (int r = 1; r <= params_.n; ++r) {
        for (int c = 1; c <= params_.n + 1 - r; ++c) {
            if (!cell_exists(r, c)) continue;
            long v = value(r, c);
            if (0 < v && v < l_) interior.insert(v);
        }
    }
    std::map<long, int> rank;
    int next = 1;
    for (long v : interior) rank[v] = next++;
    std::string key;
    for (int r = 1; r <= params_.n; ++r) {
        for (int c = 1; c <= params_.n + 1 - r; ++c) {
            if (!cell_exists(r, c)) continue;
            long v = value(r, c);
            if (0 < v && v < l_) {
                key += "I" + std::to_string(rank[v]);
            } else {
                key += "B" + std::to_string(v);
            }
            key += ';';
        }
        key += '|';
    }
    return key;
}

std::string STTree::encode() const {
    std::string out;
    for (std::size_t r = 0; r < grid_.size(); ++r) {
        if (r) out += '\n';
        for (std::size_t c = 0; c < grid_[r].size(); ++c) {
            if (c) out += ' ';
            out += std::to_string(grid_[r][c]);
        }
    }
    return out;
}

void enumerate_st_trees(const STParams& params, long l,
                        const std::function<bool(const STTree&)>& visit) {
    if (l < 1) throw ValidationError("tree enumeration needs l >= 1");
    const int n = params.n;
    std::vector<std::vector<long>> grid;
    for (int r = 1; r <= n; ++r) {
        grid.emplace_back(static_cast<std::size_t>(n + 1 - r), 0);
    }
    bool stop = false;

    std::function<void(int, int)> fill = [&](int r, int c) {
        if (stop) return;
        if (r > n) {
            STTree tree = STTree::from_grid(params, l, grid);
            if (!visit(tree)) stop = true;
            return;
        }
        int next_r = (c == n + 1 - r) ? r + 1 : r;
        int next_c = (c == n + 1 - r) ? 1 : c + 1;
        auto& cell = grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)];

        long lo = std::numeric_limits<long>::min();
        long hi = std::numeric_limits<long>::max();
        if (c > 1) lo = std::max(lo, grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 2)] + 1);
        if (r > 1) {
            lo = std::max(lo, grid[static_cast<std::size_t>(r - 2)][static_cast<std::size_t>(c - 1)]);
            hi = std::min(hi, grid[static_cast<std::size_t>(r - 2)][static_cast<std::size_t>(c)]);
        }
        if (auto forced = grid_forced(params, l, r, c)) {
            if (*forced < lo || *forced > hi) return;
            cell = *forced;
            fill(next_r, next_c);
            return;
        }
        if (r == 1) throw InternalError("bottom row cell without a prescribed entry");
        for (long v = lo; v <= hi && !stop; ++v) {
            cell = v;
            fill(next_r, next_c);
        }
    };
    fill(1, 1);
}

std::uint64_t count_st_trees(const STParams& params, long l) {
    std::uint64_t count = 0;
    enumerate_st_trees(params, l, [&](const STTree&) {
        ++count;
        return true;
    });
    return count;
}

STTree tree_of_trapezoid(const ASTrapezoid& a) {
    const CentredCatalanSet s = catalan_set_of(a);
    STParams params = st_params_of(s);
    const int n = a.rows();
    const int l = a.base();
    std::vector<std::vector<long>> grid;
    for (int i = 1; i <= n; ++i) {
        std::vector<long> row;
        for (int c = -n + 1; c <= l + n - 1; ++c) {
            int first = 0;
            for (int r = i; r <= n; ++r) {
                if (int e = a.entry(r, c); e != 0) {
                    first = e;
                    break;
                }
            }
            if (first == 1) row.push_back(c);
        }
        if (static_cast<int>(row.size()) != n + 1 - i) {
            throw InternalError("tree row " + std::to_string(i) + " has wrong size");
        }
        grid.push_back(std::move(row));
    }
    return STTree::from_grid(std::move(params), l, std::move(grid));
}

ASTrapezoid trapezoid_of_tree(const STTree& t) {
    const int n = t.params().n;
    const long l = t.base();
    std::vector<std::set<long>> labels(static_cast<std::size_t>(n + 2));
    for (int r = 1; r <= n; ++r) {
        for (int c = 1; c <= n + 1 - r; ++c) {
            labels[static_cast<std::size_t>(r)].insert(t.value(r, c));
        }
    }
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= n; ++i) {
        const auto& now = labels[static_cast<std::size_t>(i)];
        const auto& above = labels[static_cast<std::size_t>(i + 1)];
        std::vector<int> row(static_cast<std::size_t>(l + 2 * i - 1), 0);
        auto in_range = [&](long c) { return c >= -i + 1 && c <= l + i - 1; };
        for (long c : now) {
            if (above.count(c)) continue;
            if (!in_range(c)) throw InternalError("tree entry outside the trapezoid row");
            row[static_cast<std::size_t>(c + i - 1)] = 1;
        }
        for (long c : above) {
            if (now.count(c) || !in_range(c)) continue;
            row[static_cast<std::size_t>(c + i - 1)] = -1;
        }
        rows.push_back(std::move(row));
    }
    try {
        return ASTrapezoid::validated(static_cast<int>(l), std::move(rows));
    } catch (const ValidationError& e) {
        throw InternalError(std::string("tree does not map to a trapezoid: ") + e.what());
    }
}

std::vector<TreeClass> equivalence_classes(const CentredCatalanSet& s, long l,
                                           const ResourceLimits& limits) {
    limits.require_set_size(s.size());
    STParams params = st_params_of(s);
    std::map<std::string, TreeClass> classes;
    enumerate_st_trees(params, l, [&](const STTree& t) {
        std::string key = t.class_key();
        auto [it, inserted] = classes.try_emplace(key);
        if (inserted) {
            it->second.key = key;
            it->second.free_columns = t.free_columns();
        }
        ++it->second.size;
        return true;
    });
    std::vector<TreeClass> out;
    out.reserve(classes.size());
    for (auto& [key, c] : classes) out.push_back(std::move(c));
    return out;
}

}  // namespace astlab
