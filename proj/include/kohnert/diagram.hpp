#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace kohnert {

/// A cell (row, col) of the positive quadrant. Rows are counted bottom to top
/// and columns left to right, both starting at 1.
struct Cell {
  int row = 1;
  int col = 1;

  friend constexpr bool operator==(const Cell&, const Cell&) = default;
  /// Column-major order: this is the canonical storage order of a Diagram.
  friend constexpr std::strong_ordering operator<=>(const Cell& a, const Cell& b) {
    if (auto c = a.col <=> b.col; c != 0) return c;
    return a.row <=> b.row;
  }
};

/// Finite sequence of nonnegative integers (row weights, column weights,
/// lock-diagram shapes).
using WeakComposition = std::vector<int>;

/// Describes one Kohnert move: the rightmost cell of `source_row` in column
/// `col` drops to `dest_row`, skipping `jumped` occupied positions.
struct MoveRecord {
  int source_row = 0;
  int col = 0;
  int dest_row = 0;
  int jumped = 0;
  bool elementary = false;

  friend bool operator==(const MoveRecord&, const MoveRecord&) = default;
};

/// A finite set of cells, kept sorted in column-major order so that two
/// diagrams compare equal exactly when their cell sets are equal.
class Diagram {
 public:
  Diagram() = default;

  /// Builds a diagram from (row, col) pairs, dropping duplicates. Throws
  /// InvalidCoordinate if any coordinate is below 1. Columns are not normalized.
  static Diagram from_cells(std::span<const std::pair<int, int>> pairs);
  static Diagram from_cells(std::initializer_list<std::pair<int, int>> pairs) {
    return from_cells(std::span<const std::pair<int, int>>(pairs.begin(), pairs.size()));
  }
  static Diagram from_cells(std::span<const Cell> cells);

  const std::vector<Cell>& cells() const noexcept { return cells_; }
  std::size_t size() const noexcept { return cells_.size(); }
  bool empty() const noexcept { return cells_.empty(); }
  bool contains(Cell cell) const noexcept;

  /// Highest occupied row / rightmost occupied column; 0 for the empty diagram.
  int max_row() const noexcept;
  int max_col() const noexcept;

  /// Rightmost cell of `row`, if the row is nonempty.
  std::optional<Cell> rightmost_in_row(int row) const noexcept;

  /// Sum of the row indices of all cells. Every Kohnert move lowers it.
  long row_index_sum() const noexcept;

  friend bool operator==(const Diagram&, const Diagram&) = default;
  friend bool operator<(const Diagram& a, const Diagram& b) { return a.cells_ < b.cells_; }

 private:
  explicit Diagram(std::vector<Cell> sorted_unique) : cells_(std::move(sorted_unique)) {}

  std::vector<Cell> cells_;

  friend Diagram relocate_cell(const Diagram& d, Cell from, Cell to);
  friend Diagram normalize_columns(const Diagram& d);
};

struct DiagramHash {
  std::size_t operator()(const Diagram& d) const noexcept;
};

Diagram normalize_columns(const Diagram& d);

/// `d` with the cell `from` moved to the empty position `to`.
Diagram relocate_cell(const Diagram& d, Cell from, Cell to);

/// (#cells in row 1, ..., #cells in row l), l the highest nonempty row.
WeakComposition row_weight(const Diagram& d);
/// (#cells in column 1, ..., #cells in column m), m the rightmost nonempty column.
WeakComposition column_weight(const Diagram& d);

/// Number of cells of column `col` weakly (or, if `strict`, strictly) below `row`.
int column_weight_bounded(const Diagram& d, int col, int row, bool strict);

bool is_northeast(const Diagram& d);
bool is_southeast(const Diagram& d);
/// Both northeast and southeast.
bool is_lock(const Diagram& d);
/// Direct right-justification test: (r,c) in D implies (r,c+1) in D for every
/// c below the rightmost occupied column.
bool is_right_justified(const Diagram& d);

/// Right-justified diagram with alpha[i-1] cells in row i, flush against
/// column max(alpha).
Diagram lock_diagram(const WeakComposition& alpha);

/// Applies the Kohnert move to `row`: its rightmost cell drops to the first
/// empty position below it. Absent when the row is empty or no such position
/// exists.
std::optional<std::pair<Diagram, MoveRecord>> apply_kohnert_move(const Diagram& d, int row);

/// Every single-move result, ordered by source row.
std::vector<std::pair<Diagram, MoveRecord>> kohnert_successors(const Diagram& d);

struct EnumerateOptions {
  /// Only yield diagrams without empty columns left of the rightmost one.
  bool normalized_only = true;
  /// max_row * max_col may not exceed this; the count grows as 2^positions.
  std::size_t max_positions = 25;
};

/// Visits every diagram inside the max_row x max_col box that passes `filter`,
/// in increasing bitmask order over column-major positions. Throws
/// BoundExceeded when the box has more than `options.max_positions` positions.
void for_each_diagram(int max_row, int max_col,
                      const std::function<bool(const Diagram&)>& filter,
                      const std::function<void(const Diagram&)>& visit,
                      const EnumerateOptions& options = {});

std::vector<Diagram> enumerate_diagrams(int max_row, int max_col,
                                        const std::function<bool(const Diagram&)>& filter = {},
                                        const EnumerateOptions& options = {});

/// All weak compositions of length <= max_len with parts <= max_part, shorter
/// first, then lexicographic.
std::vector<WeakComposition> enumerate_compositions(int max_len, int max_part);

}  // namespace kohnert
