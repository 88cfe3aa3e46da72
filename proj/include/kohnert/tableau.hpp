#pragma once

#include <map>
#include <vector>

#include "kohnert/diagram.hpp"

namespace kohnert {

/// Label sets per column; entry c-1 holds the sorted labels of column c.
using ColumnContent = std::vector<std::vector<int>>;

/// A diagram together with a positive integer label on every cell.
class Tableau {
 public:
  Tableau() = default;
  /// Throws std::invalid_argument unless the labeling's domain is exactly the
  /// cell set of `diagram` and every label is positive.
  Tableau(Diagram diagram, const std::map<Cell, int>& labeling);

  const Diagram& diagram() const noexcept { return diagram_; }
  /// Labels aligned with diagram().cells().
  const std::vector<int>& labels() const noexcept { return labels_; }
  /// Throws CellNotFound if `cell` is not in the diagram.
  int label(Cell cell) const;
  std::map<Cell, int> labeling() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  Tableau(Diagram diagram, std::vector<int> labels)
      : diagram_(std::move(diagram)), labels_(std::move(labels)) {}

  Diagram diagram_;
  std::vector<int> labels_;

  friend Tableau super_standard(const Diagram& d);
  friend Tableau standard_labeling(const Diagram& d, const Diagram& initial);
};

/// Labels each cell with its row index.
Tableau super_standard(const Diagram& d);

/// Labels strictly increase from bottom to top within every column.
bool is_strict(const Tableau& t);

ColumnContent column_content(const Tableau& t);
bool is_column_equivalent(const Tableau& a, const Tableau& b);

/// The unique strict labeling of `d` that is column-equivalent to the
/// super-standard labeling of `initial`. Computed per column by sorting.
/// Throws NotColumnCompatible if the column weights differ.
Tableau standard_labeling(const Diagram& d, const Diagram& initial);

/// Checks the four northeast-labeling properties:
///   1. strict;
///   2. every label in row i is at least i;
///   3. if x' lies in a column right of x and L(x') < L(x), the column of x'
///      also carries the label L(x);
///   4. if x' lies in a column right of x and L(x') = L(x), x' is weakly below x.
bool is_northeast_labeling(const Tableau& t);

/// Label minus row. Throws CellNotFound if `cell` is not in the tableau.
int displacement(const Tableau& t, Cell cell);

/// Sum of displacements. Throws NegativeDisplacement if some cell sits above
/// its label.
long total_displacement(const Tableau& t);

/// Carries a labeling through the Kohnert move `move`. An elementary move keeps
/// the moved cell's label; a jump pushes every label of the skipped string one
/// position down and gives the landing cell the lowest skipped label. Throws
/// IllegalMove if `move` is not what apply_kohnert_move produces on the row.
Tableau push_labels_through_move(const Tableau& t, const MoveRecord& move);

/// One upward step towards the initial tableau: picks the largest label among
/// displaced cells, then the leftmost such cell, and raises it by one row.
/// The result is column-equivalent, northeast, has total displacement one less,
/// and its diagram reaches the input diagram by one elementary move.
/// Throws NotNortheast for a non-northeast labeling and AlreadyInitial when the
/// total displacement is zero.
Tableau raise_once(const Tableau& t);

/// Decides d in P(initial) for a northeast `initial` via the labeling test:
/// the standard labeling of `d` must be a northeast labeling. Mismatched column
/// weights give false. Throws NotNortheast if `initial` is not northeast.
bool membership_test(const Diagram& d, const Diagram& initial);

}  // namespace kohnert
