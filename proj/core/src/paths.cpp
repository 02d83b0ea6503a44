#include "astlab/paths.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace astlab {

int dilate(int x, int l) {
    if (x > 0) return x + l;
    if (x < 0) return x - l;
    return 0;
}

CentredCatalanSet CentredCatalanSet::validated(std::vector<int> elements) {
    const int n = static_cast<int>(elements.size());
    if (n == 0) throw ValidationError("a centred Catalan set is nonempty");
    for (int i = 1; i < n; ++i) {
        if (elements[i - 1] >= elements[i]) {
            throw ValidationError("elements must be strictly increasing");
        }
    }
    if (!std::binary_search(elements.begin(), elements.end(), 0)) {
        throw ValidationError("0 must be an element");
    }
    if (elements.front() <= -n || elements.back() >= n) {
        throw ValidationError("elements out of range {-n+1,...,n-1} for n=" + std::to_string(n));
    }
    // |S cap {-i,...,i}| >= i+1
    for (int i = 0; i < n; ++i) {
        int count = 0;
        for (int x : elements) {
            if (-i <= x && x <= i) ++count;
        }
        if (count < i + 1) {
            throw ValidationError("density condition fails at i=" + std::to_string(i) + " for " +
                                  [&] {
                                      std::string repr;
                                      for (int x : elements) repr += std::to_string(x) + " ";
                                      return repr;
                                  }());
        }
    }
    CentredCatalanSet s;
    s.elems_ = std::move(elements);
    return s;
}

CentredCatalanSet CentredCatalanSet::parse(const std::string& text) {
    std::string body = text;
    auto drop = [&](char c) {
        body.erase(std::remove(body.begin(), body.end(), c), body.end());
    };
    drop('{');
    drop('}');
    drop(' ');
    std::vector<int> elements;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw ValidationError("empty element in set literal '" + text + "'");
        std::size_t pos = 0;
        int value = std::stoi(item, &pos);
        if (pos != item.size()) throw ValidationError("bad element '" + item + "'");
        elements.push_back(value);
    }
    return validated(std::move(elements));
}

bool CentredCatalanSet::contains(int x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

std::vector<int> CentredCatalanSet::negatives() const {
    std::vector<int> out;
    for (int x : elems_) {
        if (x < 0) out.push_back(x);
    }
    return out;
}

std::vector<int> CentredCatalanSet::positives() const {
    std::vector<int> out;
    for (int x : elems_) {
        if (x > 0) out.push_back(x);
    }
    return out;
}

CentredCatalanSet CentredCatalanSet::reflected() const {
    std::vector<int> out(elems_.rbegin(), elems_.rend());
    for (int& x : out) x = -x;
    return validated(std::move(out));
}

std::string CentredCatalanSet::encode() const {
    std::string out = "{";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(elems_[i]);
    }
    return out + "}";
}

DyckPath DyckPath::validated(std::vector<DyckStep> steps) {
    int height = 0;
    for (DyckStep s : steps) {
        height += static_cast<int>(s);
        if (height < 0) throw ValidationError("Dyck path dips below the axis");
    }
    if (height != 0) throw ValidationError("Dyck path does not return to the axis");
    return DyckPath{std::move(steps)};
}

std::string DyckPath::encode() const {
    std::string out;
    for (DyckStep s : steps) out += (s == DyckStep::NE ? 'U' : 'D');
    return out;
}

MotzkinPath MotzkinPath::validated(std::vector<int> steps) {
    int height = 0;
    for (int s : steps) {
        if (s < -1 || s > 1) throw ValidationError("Motzkin steps must be -1, 0 or +1");
        height += s;
        if (height < 0) throw ValidationError("Motzkin path dips below the axis");
    }
    if (height != 0) throw ValidationError("Motzkin path does not return to the axis");
    MotzkinPath m;
    m.steps_ = std::move(steps);
    return m;
}

MotzkinPath MotzkinPath::parse(const std::string& text) {
    std::vector<int> steps;
    steps.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case 'U': steps.push_back(1); break;
            case 'F': steps.push_back(0); break;
            case 'D': steps.push_back(-1); break;
            default: throw ValidationError(std::string("bad Motzkin step '") + c + "'");
        }
    }
    return validated(std::move(steps));
}

std::vector<int> MotzkinPath::heights() const {
    std::vector<int> h(steps_.size() + 1, 0);
    for (std::size_t i = 0; i < steps_.size(); ++i) h[i + 1] = h[i] + steps_[i];
    return h;
}

bool MotzkinPath::is_irreducible() const {
    if (steps_.empty()) return false;
    int height = 0;
    for (std::size_t i = 0; i + 1 < steps_.size(); ++i) {
        height += steps_[i];
        if (height == 0) return false;
    }
    return true;
}

std::string MotzkinPath::encode() const {
    std::string out;
    for (int s : steps_) out += (s == 1 ? 'U' : s == 0 ? 'F' : 'D');
    return out;
}

DyckPath dyck_of_set(const CentredCatalanSet& s) {
    const int n = s.size();
    std::vector<DyckStep> steps;
    steps.reserve(2 * static_cast<std::size_t>(n));
    auto emit = [&](int x) {
        steps.push_back(s.contains(x) ? DyckStep::NE : DyckStep::SE);
    };
    emit(0);
    for (int i = 1; i < n; ++i) {
        emit(-i);
        emit(i);
    }
    emit(n);  // never in S
    return DyckPath::validated(std::move(steps));
}

MotzkinPath motzkin_of_set(const CentredCatalanSet& s) {
    const int n = s.size();
    std::vector<int> steps;
    steps.reserve(static_cast<std::size_t>(n) - 1);
    for (int i = 1; i < n; ++i) {
        steps.push_back((s.contains(-i) ? 1 : 0) + (s.contains(i) ? 1 : 0) - 1);
    }
    return MotzkinPath::validated(std::move(steps));
}

MotzkinPath motzkin_of_dyck(const DyckPath& d) {
    if (d.steps.size() % 2 != 0) throw ValidationError("Dyck path of odd length");
    const std::size_t n = d.steps.size() / 2;
    std::vector<int> steps;
    for (std::size_t i = 1; i < n; ++i) {
        int sum = static_cast<int>(d.steps[2 * i - 1]) + static_cast<int>(d.steps[2 * i]);
        steps.push_back(sum / 2);
    }
    return MotzkinPath::validated(std::move(steps));
}

CentredCatalanSet concat_sets(const CentredCatalanSet& s1, const CentredCatalanSet& s2) {
    const int shift = s1.size() - 1;
    std::vector<int> out;
    for (int x : s2.elements()) {
        if (x != 0) out.push_back(dilate(x, shift));
    }
    out.insert(out.end(), s1.elements().begin(), s1.elements().end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return CentredCatalanSet::validated(std::move(out));
}

MotzkinPath concat_paths(const MotzkinPath& m1, const MotzkinPath& m2) {
    std::vector<int> steps = m1.steps();
    steps.insert(steps.end(), m2.steps().begin(), m2.steps().end());
    return MotzkinPath::validated(std::move(steps));
}

bool is_irreducible(const CentredCatalanSet& s) {
    if (s.size() <= 2) return true;
    return motzkin_of_set(s).is_irreducible();
}

std::vector<CentredCatalanSet> irreducible_decomposition(const CentredCatalanSet& s) {
    if (s.size() == 1) return {s};
    std::vector<CentredCatalanSet> factors;
    CentredCatalanSet rest = s;
    while (rest.size() >= 2) {
        MotzkinPath m = motzkin_of_set(rest);
        const auto h = m.heights();
        int cut = m.length();
        for (int j = 1; j < m.length(); ++j) {
            if (h[static_cast<std::size_t>(j)] == 0) {
                cut = j;
                break;
            }
        }
        // first factor spans [-cut, cut]
        std::vector<int> head, tail;
        for (int x : rest.elements()) {
            if (-cut <= x && x <= cut) {
                head.push_back(x);
            } else {
                tail.push_back(dilate(x, -cut));
            }
        }
        factors.push_back(CentredCatalanSet::validated(std::move(head)));
        if (tail.empty()) break;
        tail.push_back(0);
        std::sort(tail.begin(), tail.end());
        rest = CentredCatalanSet::validated(std::move(tail));
    }
    return factors;
}

std::vector<MotzkinPath> irreducible_components(const MotzkinPath& m) {
    std::vector<MotzkinPath> out;
    std::vector<int> current;
    int height = 0;
    for (int s : m.steps()) {
        current.push_back(s);
        height += s;
        if (height == 0) {
            out.push_back(MotzkinPath::validated(std::move(current)));
            current.clear();
        }
    }
    return out;
}

long area(const MotzkinPath& m) {
    const auto h = m.heights();
    long twice = 0;
    for (std::size_t i = 1; i < h.size(); ++i) twice += h[i - 1] + h[i];
    if (twice % 2 != 0) throw InternalError("non-integral Motzkin area");
    return twice / 2;
}

namespace {

template <typename T>
void sort_by_encoding(std::vector<T>& items) {
    std::sort(items.begin(), items.end(),
              [](const T& a, const T& b) { return a.encode() < b.encode(); });
}

}  // namespace

std::vector<CentredCatalanSet> enumerate_sets(int n, const ResourceLimits& limits) {
    if (n < 1) throw ValidationError("set size must be >= 1");
    limits.require_set_size(n);
    std::vector<CentredCatalanSet> out;
    std::vector<int> acc;
    auto emit = [&](const std::vector<int>& chosen) {
        std::vector<int> elements = chosen;
        elements.push_back(0);
        std::sort(elements.begin(), elements.end());
        // density check without exceptions
        for (int i = 0; i < n; ++i) {
            int count = 0;
            for (int x : elements) {
                if (-i <= x && x <= i) ++count;
            }
            if (count < i + 1) return;
        }
        out.push_back(CentredCatalanSet::validated(std::move(elements)));
    };
    // choose the n-1 nonzero elements from {-n+1..-1, 1..n-1}
    std::vector<int> pool;
    for (int x = -n + 1; x <= n - 1; ++x) {
        if (x != 0) pool.push_back(x);
    }
    std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int need) {
        if (need == 0) {
            emit(acc);
            return;
        }
        if (pool.size() - idx < static_cast<std::size_t>(need)) return;
        acc.push_back(pool[idx]);
        rec(idx + 1, need - 1);
        acc.pop_back();
        rec(idx + 1, need);
    };
    rec(0, n - 1);
    sort_by_encoding(out);
    return out;
}

std::vector<MotzkinPath> enumerate_motzkin(int n, const ResourceLimits& limits) {
    if (n < 0) throw ValidationError("path length must be >= 0");
    limits.require_set_size(n + 1);
    std::vector<MotzkinPath> out;
    std::vector<int> steps;
    std::function<void(int)> rec = [&](int height) {
        if (static_cast<int>(steps.size()) == n) {
            if (height == 0) out.push_back(MotzkinPath::validated(steps));
            return;
        }
        int remaining = n - static_cast<int>(steps.size());
        for (int s : {-1, 0, 1}) {
            int h = height + s;
            if (h < 0 || h > remaining - 1) continue;
            steps.push_back(s);
            rec(h);
            steps.pop_back();
        }
    };
    rec(0);
    sort_by_encoding(out);
    return out;
}

std::vector<CentredCatalanSet> enumerate_irreducible_sets(int n, const ResourceLimits& limits) {
    std::vector<CentredCatalanSet> out = enumerate_sets(n, limits);
    std::erase_if(out, [](const CentredCatalanSet& s) { return !is_irreducible(s); });
    return out;
}

std::vector<MotzkinPath> enumerate_irreducible_motzkin(int n, const ResourceLimits& limits) {
    std::vector<MotzkinPath> out = enumerate_motzkin(n, limits);
    std::erase_if(out, [](const MotzkinPath& m) { return !m.is_irreducible(); });
    return out;
}

std::vector<CentredCatalanSet> sets_with_motzkin(const MotzkinPath& m) {
    std::vector<CentredCatalanSet> out;
    std::vector<int> elements{0};
    std::function<void(int)> rec = [&](int i) {
        if (i > m.length()) {
            std::vector<int> sorted = elements;
            std::sort(sorted.begin(), sorted.end());
            out.push_back(CentredCatalanSet::validated(std::move(sorted)));
            return;
        }
        int step = m.steps()[static_cast<std::size_t>(i - 1)];
        if (step == 1) {
            elements.push_back(-i);
            elements.push_back(i);
            rec(i + 1);
            elements.pop_back();
            elements.pop_back();
        } else if (step == -1) {
            rec(i + 1);
        } else {
            for (int x : {-i, i}) {
                elements.push_back(x);
                rec(i + 1);
                elements.pop_back();
            }
        }
    };
    rec(1);
    std::sort(out.begin(), out.end(),
              [](const CentredCatalanSet& a, const CentredCatalanSet& b) {
                  return a.encode() < b.encode();
              });
    return out;
}

}  // namespace astlab
