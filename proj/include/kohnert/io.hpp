#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "kohnert/criteria.hpp"
#include "kohnert/diagram.hpp"
#include "kohnert/polynomial.hpp"
#include "kohnert/poset.hpp"
#include "kohnert/tableau.hpp"

namespace kohnert {

// Diagram text format (.kd): one "r c" pair per line, rows 1-indexed from the
// bottom, columns from the left. '#' starts a comment. Cells may appear in any
// order; duplicates and non-positive coordinates are ParseErrors.

Diagram parse_diagram(std::string_view text);
Diagram read_diagram_file(const std::filesystem::path& path);
std::string write_diagram(const Diagram& d);

/// Comma-separated non-negative parts, e.g. "1,3,1,0,2". Throws ParseError.
WeakComposition parse_composition(std::string_view text);

/// Rows top-to-bottom over the bounding box, 'O' for a cell and '.' otherwise.
/// The box grows to at least min_rows x min_cols; an empty result is "".
std::string render_grid(const Diagram& d, int min_rows = 0, int min_cols = 0);
/// Same layout with each cell replaced by its label, columns padded to a common width.
std::string render_tableau(const Tableau& t);

nlohmann::json cells_to_json(const Diagram& d);
nlohmann::json poset_to_json(const KohnertPoset& p);
/// Hasse diagram drawn top-down. With `label_moves`, a cover that is also a
/// single move is annotated with the move's source row.
std::string poset_to_dot(const KohnertPoset& p, bool label_moves = false);
nlohmann::json polynomial_to_json(const KohnertPolynomial& f);
nlohmann::json witness_to_json(const Diagram& d, const PatternWitness& w);

}  // namespace kohnert
