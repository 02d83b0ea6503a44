#include "astlab/tables.hpp"

#include "astlab/tableaux.hpp"

#include <algorithm>
#include <map>

namespace astlab {

namespace {

UniPoly lin(long c) { return UniPoly::affine(Rational(c), 1); }  // l + c

UniPoly poly(std::vector<long> ascending) {
    std::vector<Rational> coeffs;
    for (long c : ascending) coeffs.emplace_back(c);
    return UniPoly(std::move(coeffs));
}

std::vector<TableRow> build_set_reference() {
    std::vector<TableRow> rows;
    auto add = [&](const std::string& key, const UniPoly& w) { rows.push_back({key, w}); };
    add("{0,1}", UniPoly(Rational(1)));
    add("{-1,0,1}", lin(1));
    add("{-1,0,1,2}", Rational(1, 2) * lin(1) * lin(4));
    add("{-2,-1,0,1,2}", Rational(1, 12) * lin(1) * lin(2) * lin(6) * lin(7));
    add("{-3,-1,0,1,2}", Rational(1, 6) * lin(1) * lin(6) * poly({7, 2}));
    add("{-1,0,1,2,3}", Rational(1, 6) * lin(1) * lin(5) * lin(6));
    add("{-2,-1,0,1,2,3}",
        Rational(1, 144) * lin(1) * lin(2) * lin(7) * poly({360, 168, 23, 1}));
    add("{-2,-1,0,1,2,4}", Rational(1, 24) * lin(1) * lin(2) * lin(6) * lin(7) * lin(8));
    add("{-3,-1,0,1,2,3}", Rational(1, 24) * lin(1) * poly({1176, 864, 226, 25, 1}));
    add("{-1,0,1,2,3,4}", Rational(1, 24) * lin(1) * lin(6) * lin(7) * lin(8));
    add("{-2,-1,0,1,3,4}", Rational(1, 24) * lin(1) * lin(6) * poly({92, 37, 3}));
    add("{-3,-1,0,1,2,4}", Rational(1, 24) * lin(1) * lin(6) * poly({132, 55, 5}));
    add("{-4,-1,0,1,2,3}", Rational(1, 24) * lin(1) * lin(6) * lin(8) * poly({13, 3}));
    return rows;
}

std::vector<TableRow> build_motzkin_reference() {
    std::vector<TableRow> rows;
    auto add = [&](const std::string& key, const UniPoly& w) { rows.push_back({key, w}); };
    add("F", UniPoly(Rational(2)));
    add("UD", lin(1));
    add("UFD", lin(1) * lin(4));
    add("UUDD", Rational(1, 12) * lin(1) * lin(2) * lin(6) * lin(7));
    add("UFFD", lin(1) * lin(4) * lin(6));
    add("UUFDD", Rational(1, 72) * lin(1) * lin(2) * lin(7) * poly({360, 168, 23, 1}));
    add("UUDFD", Rational(1, 12) * lin(1) * lin(2) * lin(6) * lin(7) * lin(8));
    add("UFUDD", Rational(1, 12) * lin(1) * poly({1176, 864, 226, 25, 1}));
    add("UFFFD", lin(1) * lin(4) * lin(6) * lin(8));
    return rows;
}

}  // namespace

const std::vector<TableRow>& reference_set_table() {
    static const std::vector<TableRow> rows = build_set_reference();
    return rows;
}

const std::vector<TableRow>& reference_motzkin_table() {
    static const std::vector<TableRow> rows = build_motzkin_reference();
    return rows;
}

CentredCatalanSet reflection_representative(const CentredCatalanSet& s) {
    CentredCatalanSet mirror = s.reflected();
    const long negs = static_cast<long>(s.negatives().size());
    const long mirror_negs = static_cast<long>(mirror.negatives().size());
    if (negs != mirror_negs) return negs < mirror_negs ? s : mirror;
    return s.elements() <= mirror.elements() ? s : mirror;
}

namespace {

std::vector<TableRow> sorted_rows(std::vector<std::pair<CentredCatalanSet, UniPoly>> entries) {
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        if (a.second.degree() != b.second.degree()) return a.second.degree() > b.second.degree();
        return a.first.elements() > b.first.elements();
    });
    std::vector<TableRow> rows;
    rows.reserve(entries.size());
    for (auto& [key, w] : entries) rows.push_back({key.encode(), std::move(w)});
    return rows;
}

}  // namespace

std::vector<TableRow> generate_set_table(WeightEngine& engine) {
    std::vector<std::pair<CentredCatalanSet, UniPoly>> entries;
    for (int size = 2; size <= 6; ++size) {
        std::map<std::string, CentredCatalanSet> representatives;
        for (const auto& s : enumerate_irreducible_sets(size, engine.limits())) {
            CentredCatalanSet rep = reflection_representative(s);
            representatives.try_emplace(rep.encode(), rep);
        }
        for (const auto& [key, rep] : representatives) {
            const WeightRecord& record = engine.set_weight(rep, WeightMethod::interpolation);
            // reflection leaves the weight unchanged; make sure of it
            const WeightRecord& mirrored =
                engine.set_weight(rep.reflected(), WeightMethod::interpolation);
            if (record.w != mirrored.w) {
                throw InternalError("weight not reflection-invariant for " + key);
            }
            entries.emplace_back(rep, record.w);
        }
    }
    return sorted_rows(std::move(entries));
}

std::vector<TableRow> generate_motzkin_table(WeightEngine& engine) {
    std::vector<std::pair<MotzkinPath, UniPoly>> entries;
    for (int length = 1; length <= 5; ++length) {
        for (const auto& m : enumerate_irreducible_motzkin(length, engine.limits())) {
            entries.emplace_back(m, engine.motzkin_weight(m, WeightMethod::interpolation).w);
        }
    }
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        if (a.first.length() != b.first.length()) return a.first.length() < b.first.length();
        if (a.second.degree() != b.second.degree()) return a.second.degree() > b.second.degree();
        return a.first.steps() > b.first.steps();
    });
    std::vector<TableRow> rows;
    rows.reserve(entries.size());
    for (auto& [m, w] : entries) rows.push_back({m.encode(), std::move(w)});
    return rows;
}

std::string render_tables_markdown(WeightEngine& engine) {
    std::string out;
    out += "| S | w_l(S) |\n|---|---|\n";
    for (const auto& row : generate_set_table(engine)) {
        out += "| " + row.key + " | " + row.w.factored() + " |\n";
    }
    out += "\n| M | w_l(M) |\n|---|---|\n";
    for (const auto& row : generate_motzkin_table(engine)) {
        out += "| " + row.key + " | " + row.w.factored() + " |\n";
    }
    return out;
}

std::vector<IdentityCheck> verify_appendix_tables(WeightEngine& engine) {
    std::vector<IdentityCheck> checks;
    auto compare = [&](const std::vector<TableRow>& generated,
                       const std::vector<TableRow>& reference, const std::string& label) {
        std::map<std::string, const UniPoly*> by_key;
        for (const auto& row : generated) by_key[row.key] = &row.w;
        for (const auto& row : reference) {
            auto it = by_key.find(row.key);
            bool equal = it != by_key.end() && *it->second == row.w;
            checks.push_back({"appendix", label + " " + row.key,
                              it == by_key.end() ? "(missing)" : it->second->factored(),
                              row.w.factored(), equal});
        }
        checks.push_back({"appendix", label + " row count",
                          std::to_string(generated.size()), std::to_string(reference.size()),
                          generated.size() == reference.size()});
    };
    compare(generate_set_table(engine), reference_set_table(), "w_l(S),");
    compare(generate_motzkin_table(engine), reference_motzkin_table(), "w_l(M),");
    return checks;
}

}  // namespace astlab
