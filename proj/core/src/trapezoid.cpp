#include "astlab/trapezoid.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace astlab {

namespace {

int row_low(int i) { return -i + 1; }
int row_high(int i, int l) { return l + i - 1; }

}  // namespace

ASTrapezoid ASTrapezoid::validated(int l, std::vector<std::vector<int>> rows) {
    const int n = static_cast<int>(rows.size());
    if (n < 1 || l < 1) throw ValidationError("trapezoid needs n >= 1 rows and base l >= 1");
    for (int i = 1; i <= n; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i - 1)];
        if (static_cast<int>(row.size()) != l + 2 * i - 1) {
            throw ValidationError("shape: row " + std::to_string(i) + " must have " +
                                  std::to_string(l + 2 * i - 1) + " entries");
        }
        for (int e : row) {
            if (e < -1 || e > 1) throw ValidationError("entries must be -1, 0 or 1");
        }
    }
    // row sums and row alternation
    for (int i = 1; i <= n; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i - 1)];
        int sum = 0;
        int last = 0;
        for (int e : row) {
            sum += e;
            if (e != 0) {
                if (last == e) {
                    throw ValidationError("alternation: consecutive nonzeros of equal sign in row " +
                                          std::to_string(i));
                }
                last = e;
            }
        }
        if (sum != 1) throw ValidationError("row sum: row " + std::to_string(i) + " sums to " +
                                            std::to_string(sum) + ", expected 1");
    }
    // column alternation, top sign and central sums
    for (int c = -n + 1; c <= l + n - 1; ++c) {
        int last = 0;     // last nonzero seen from the top
        int count = 0;
        for (int i = n; i >= 1; --i) {
            if (c < row_low(i) || c > row_high(i, l)) continue;
            int e = rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(c - row_low(i))];
            if (e == 0) continue;
            if (count == 0 && e != 1) {
                throw ValidationError("top sign: first nonzero from the top of column " +
                                      std::to_string(c) + " is negative");
            }
            if (count > 0 && last == e) {
                throw ValidationError("alternation: consecutive nonzeros of equal sign in column " +
                                      std::to_string(c));
            }
            last = e;
            ++count;
        }
        if (c >= 1 && c <= l - 1 && count % 2 != 0) {
            throw ValidationError("central column sum: column " + std::to_string(c) +
                                  " sums to 1, expected 0");
        }
    }
    return ASTrapezoid(l, std::move(rows));
}

int ASTrapezoid::entry(int row, int column) const {
    if (row < 1 || row > rows()) return 0;
    if (column < row_low(row) || column > row_high(row, l_)) return 0;
    return rows_[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(column - row_low(row))];
}

int ASTrapezoid::column_sum(int column) const {
    int sum = 0;
    for (int i = 1; i <= rows(); ++i) sum += entry(i, column);
    return sum;
}

std::string ASTrapezoid::encode() const {
    std::string out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) out += '\n';
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            if (j) out += ' ';
            out += std::to_string(rows_[i][j]);
        }
    }
    return out;
}

ASTrapezoid ASTrapezoid::parse(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::stringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        std::vector<int> row;
        std::stringstream items(line);
        int value = 0;
        while (items >> value) row.push_back(value);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ValidationError("empty trapezoid text");
    int l = static_cast<int>(rows.front().size()) - 1;
    return validated(l, std::move(rows));
}

CentredCatalanSet catalan_set_of(const ASTrapezoid& a) {
    const int n = a.rows();
    const int l = a.base();
    std::vector<int> elements{0};
    for (int c = -n + 1; c <= l + n - 1; ++c) {
        if (a.column_sum(c) <= 0) continue;
        elements.push_back(c <= 0 ? c - 1 : c - (l - 1));
    }
    std::sort(elements.begin(), elements.end());
    try {
        return CentredCatalanSet::validated(std::move(elements));
    } catch (const ValidationError& e) {
        throw InternalError(std::string("catalan_set_of produced an invalid set: ") + e.what());
    }
}

MotzkinPath motzkin_of(const ASTrapezoid& a) { return motzkin_of_set(catalan_set_of(a)); }

namespace {

// Backtracking enumerator. Rows are generated from the top down; a column is
// "open" when its nonzero entries so far end with +1, so the next nonzero in
// it must be -1. Central columns must all be closed at the bottom.
class Enumerator {
public:
    Enumerator(int n, int l, const std::function<bool(const ASTrapezoid&)>& visit)
        : n_(n), l_(l), visit_(visit), open_(static_cast<std::size_t>(l + 2 * n - 1), false) {
        rows_top_down_.reserve(static_cast<std::size_t>(n));
    }

    void run() { fill_row(n_); }

private:
    std::size_t idx(int c) const { return static_cast<std::size_t>(c + n_ - 1); }
    bool is_central(int c) const { return c >= 1 && c <= l_ - 1; }

    // most -1 placements the remaining rows r, r-1, ..., 1 can absorb
    long max_closable(int r) const {
        long total = 0;
        for (int j = 1; j <= r; ++j) total += n_ - j;
        return total;
    }

    void fill_row(int r) {
        if (stop_) return;
        if (r == 0) {
            if (central_open_ == 0) emit();
            return;
        }
        if (central_open_ > max_closable(r)) return;
        row_.assign(static_cast<std::size_t>(l_ + 2 * r - 1), 0);
        place(r, row_low(r), true, 0, 0);
    }

    void place(int r, int c, bool need_plus, int ones, int minuses) {
        if (stop_) return;
        if (c > row_high(r, l_)) {
            if (ones == minuses + 1) {
                rows_top_down_.push_back(row_);
                std::vector<int> saved_row = row_;
                fill_row(r - 1);
                rows_top_down_.pop_back();
                row_ = std::move(saved_row);
            }
            return;
        }
        // skip this column
        place(r, c + 1, need_plus, ones, minuses);
        if (stop_) return;
        std::size_t i = idx(c);
        std::size_t pos = static_cast<std::size_t>(c - row_low(r));
        if (need_plus) {
            if (!open_[i] && ones < n_ - r + 1) {
                open_[i] = true;
                if (is_central(c)) ++central_open_;
                row_[pos] = 1;
                place(r, c + 1, false, ones + 1, minuses);
                row_[pos] = 0;
                open_[i] = false;
                if (is_central(c)) --central_open_;
            }
        } else {
            if (open_[i]) {
                open_[i] = false;
                if (is_central(c)) --central_open_;
                row_[pos] = -1;
                place(r, c + 1, true, ones, minuses + 1);
                row_[pos] = 0;
                open_[i] = true;
                if (is_central(c)) ++central_open_;
            }
        }
    }

    void emit() {
        std::vector<std::vector<int>> rows(rows_top_down_.rbegin(), rows_top_down_.rend());
        ASTrapezoid a = ASTrapezoid::validated(l_, std::move(rows));
        if (!visit_(a)) stop_ = true;
    }

    int n_;
    int l_;
    const std::function<bool(const ASTrapezoid&)>& visit_;
    std::vector<char> open_;
    long central_open_ = 0;
    std::vector<std::vector<int>> rows_top_down_;
    std::vector<int> row_;
    bool stop_ = false;
};

}  // namespace

void enumerate_trapezoids(int n, int l, const std::function<bool(const ASTrapezoid&)>& visit,
                          const ResourceLimits& limits) {
    if (n < 1 || l < 1) throw ValidationError("enumeration needs n >= 1 and l >= 1");
    limits.require_rows(n);
    Enumerator(n, l, visit).run();
}

std::uint64_t count_trapezoids(int n, int l, const ResourceLimits& limits) {
    std::uint64_t count = 0;
    enumerate_trapezoids(n, l, [&](const ASTrapezoid&) {
        ++count;
        return true;
    }, limits);
    return count;
}

std::uint64_t RefinedCount::total() const {
    std::uint64_t sum = 0;
    for (const auto& [key, c] : counts) sum += c;
    return sum;
}

std::uint64_t RefinedCount::at(const std::string& key) const {
    auto it = counts.find(key);
    return it == counts.end() ? 0 : it->second;
}

std::string RefinedCount::to_json_lines() const {
    std::string out;
    for (const auto& [key, count] : counts) {
        nlohmann::json record{{"n", n}, {"l", l}, {"key", key}, {"count", count}};
        out += record.dump() + "\n";
    }
    return out;
}

RefinedCount refine_counts(int n, int l, RefineBy by, const ResourceLimits& limits) {
    RefinedCount result;
    result.n = n;
    result.l = l;
    result.by = by;
    enumerate_trapezoids(n, l, [&](const ASTrapezoid& a) {
        std::string key = by == RefineBy::catalan ? catalan_set_of(a).encode()
                                                  : motzkin_of(a).encode();
        ++result.counts[key];
        return true;
    }, limits);
    return result;
}

std::pair<ASTrapezoid, ASTrapezoid> split(const ASTrapezoid& a, int n1) {
    const int n = a.rows();
    if (n1 < 1 || n1 >= n) throw ValidationError("split position must satisfy 1 <= n1 < n");
    MotzkinPath m = motzkin_of(a);
    if (m.heights()[static_cast<std::size_t>(n1)] != 0) {
        throw ValidationError("S(A) does not factor after " + std::to_string(n1) + " rows");
    }
    const auto& rows = a.row_data();
    std::vector<std::vector<int>> bottom(rows.begin(), rows.begin() + n1);
    std::vector<std::vector<int>> top(rows.begin() + n1, rows.end());
    try {
        return {ASTrapezoid::validated(a.base(), std::move(bottom)),
                ASTrapezoid::validated(a.base() + 2 * n1, std::move(top))};
    } catch (const ValidationError& e) {
        throw InternalError(std::string("split produced an invalid part: ") + e.what());
    }
}

ASTrapezoid join(const ASTrapezoid& bottom, const ASTrapezoid& top) {
    if (top.base() != bottom.base() + 2 * bottom.rows()) {
        throw ValidationError("join requires top base " +
                              std::to_string(bottom.base() + 2 * bottom.rows()) + ", got " +
                              std::to_string(top.base()));
    }
    std::vector<std::vector<int>> rows = bottom.row_data();
    rows.insert(rows.end(), top.row_data().begin(), top.row_data().end());
    try {
        return ASTrapezoid::validated(bottom.base(), std::move(rows));
    } catch (const ValidationError& e) {
        throw InternalError(std::string("join produced an invalid trapezoid: ") + e.what());
    }
}

long max_ones_bound(const CentredCatalanSet& s, int i) {
    MotzkinPath m = motzkin_of_set(s);
    if (i < 1 || i > m.length() + 1) throw ValidationError("row index out of range");
    long bound = 1;
    for (int j = 1; j <= std::min(i, m.length()); ++j) {
        bound += m.steps()[static_cast<std::size_t>(j - 1)];
    }
    return bound;
}

ASTrapezoid max_ones_witness(const CentredCatalanSet& s, int l) {
    if (l < 2) throw ValidationError("the sharp construction needs l >= 2");
    const int n = s.size() - 1;
    if (n < 1) throw ValidationError("witness needs a set of size >= 2");

    auto label_in_set = [&](int c) {
        if (c <= 0) return s.contains(c - 1);
        if (c >= l) return s.contains(c - (l - 1));
        return false;  // central columns carry no label
    };

    std::vector<int> top_sign(static_cast<std::size_t>(l + 2 * n - 1), 0);
    auto idx = [&](int c) { return static_cast<std::size_t>(c + n - 1); };

    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= n; ++i) {
        std::vector<int> row(static_cast<std::size_t>(l + 2 * i - 1), 0);
        std::vector<int> allowed;
        for (int c = row_low(i); c <= row_high(i, l); ++c) {
            int sign = top_sign[idx(c)];
            if (sign == -1 || (sign == 0 && label_in_set(c))) allowed.push_back(c);
        }
        if (allowed.empty()) throw InternalError("greedy construction found no allowed position");
        for (std::size_t k = 0; k < allowed.size(); ++k) {
            int c = allowed[k];
            row[static_cast<std::size_t>(c - row_low(i))] = 1;
            top_sign[idx(c)] = 1;
            if (k + 1 < allowed.size()) {
                int gap = c + 1;
                if (gap >= allowed[k + 1]) {
                    throw InternalError("adjacent allowed positions in greedy construction");
                }
                row[static_cast<std::size_t>(gap - row_low(i))] = -1;
                top_sign[idx(gap)] = -1;
            }
        }
        rows.push_back(std::move(row));
    }
    try {
        return ASTrapezoid::validated(l, std::move(rows));
    } catch (const ValidationError& e) {
        throw InternalError(std::string("greedy construction invalid: ") + e.what());
    }
}

}  // namespace astlab
