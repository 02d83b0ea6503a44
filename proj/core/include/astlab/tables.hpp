#pragma once

#include "astlab/identities.hpp"
#include "astlab/paths.hpp"
#include "astlab/polynomial.hpp"
#include "astlab/weights.hpp"

#include <string>
#include <vector>

namespace astlab {

struct TableRow {
    std::string key;
    UniPoly w;
};

// Golden weight tables: the 13 irreducible sets of size up to 6 (one
// representative per reflection class) and the 9 irreducible Motzkin paths
// of length up to 5, with their exact weight polynomials.
const std::vector<TableRow>& reference_set_table();
const std::vector<TableRow>& reference_motzkin_table();

// Representative of {S, -S}: fewer negative elements wins, ties resolved by
// the lexicographically smaller element tuple.
CentredCatalanSet reflection_representative(const CentredCatalanSet& s);

// Regenerated tables, computed by interpolation of enumeration counts.
// Rows sorted by size, then degree descending, then element tuple descending.
std::vector<TableRow> generate_set_table(WeightEngine& engine);
std::vector<TableRow> generate_motzkin_table(WeightEngine& engine);

// Both tables as markdown, factored polynomial form.
std::string render_tables_markdown(WeightEngine& engine);

// Compares the regenerated tables against the references, row by row.
std::vector<IdentityCheck> verify_appendix_tables(WeightEngine& engine);

}  // namespace astlab
