#include "kohnert/tableau.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "kohnert/error.hpp"

namespace kohnert {

namespace {

std::string cell_text(Cell c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

std::size_t index_of(const Diagram& d, Cell cell) {
  const auto& cells = d.cells();
  auto it = std::lower_bound(cells.begin(), cells.end(), cell);
  if (it == cells.end() || *it != cell) {
    throw KohnertError(ErrorCode::CellNotFound, cell_text(cell) + " is not in the diagram");
  }
  return static_cast<std::size_t>(it - cells.begin());
}

}  // namespace

Tableau::Tableau(Diagram diagram, const std::map<Cell, int>& labeling) : diagram_(std::move(diagram)) {
  if (labeling.size() != diagram_.size()) {
    throw std::invalid_argument("labeling domain differs from the diagram's cells");
  }
  labels_.reserve(diagram_.size());
  for (const Cell& c : diagram_.cells()) {
    auto it = labeling.find(c);
    if (it == labeling.end()) {
      throw std::invalid_argument("labeling misses cell " + cell_text(c));
    }
    if (it->second < 1) throw std::invalid_argument("labels must be positive");
    labels_.push_back(it->second);
  }
}

int Tableau::label(Cell cell) const { return labels_[index_of(diagram_, cell)]; }

std::map<Cell, int> Tableau::labeling() const {
  std::map<Cell, int> out;
  for (std::size_t i = 0; i < labels_.size(); ++i) out.emplace(diagram_.cells()[i], labels_[i]);
  return out;
}

Tableau super_standard(const Diagram& d) {
  std::vector<int> labels;
  labels.reserve(d.size());
  for (const Cell& c : d.cells()) labels.push_back(c.row);
  return Tableau(d, std::move(labels));
}

bool is_strict(const Tableau& t) {
  const auto& cells = t.diagram().cells();
  const auto& labels = t.labels();
  for (std::size_t i = 1; i < cells.size(); ++i) {
    if (cells[i].col == cells[i - 1].col && labels[i] <= labels[i - 1]) return false;
  }
  return true;
}

ColumnContent column_content(const Tableau& t) {
  ColumnContent content(static_cast<std::size_t>(t.diagram().max_col()));
  const auto& cells = t.diagram().cells();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    content[static_cast<std::size_t>(cells[i].col - 1)].push_back(t.labels()[i]);
  }
  for (auto& col : content) std::sort(col.begin(), col.end());
  return content;
}

bool is_column_equivalent(const Tableau& a, const Tableau& b) {
  return column_content(a) == column_content(b);
}

Tableau standard_labeling(const Diagram& d, const Diagram& initial) {
  if (column_weight(d) != column_weight(initial)) {
    throw KohnertError(ErrorCode::NotColumnCompatible,
                       "diagram and initial diagram have different column weights");
  }
  // Both cell lists are column-major with rows ascending inside a column, and
  // the per-column counts agree, so position i of one pairs with position i of
  // the other.
  std::vector<int> labels;
  labels.reserve(d.size());
  for (const Cell& c : initial.cells()) labels.push_back(c.row);
  return Tableau(d, std::move(labels));
}

bool is_northeast_labeling(const Tableau& t) {
  if (!is_strict(t)) return false;
  const auto& cells = t.diagram().cells();
  const auto& labels = t.labels();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (labels[i] < cells[i].row) return false;
  }
  const ColumnContent content = column_content(t);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = 0; j < cells.size(); ++j) {
      if (cells[j].col <= cells[i].col) continue;
      if (labels[j] < labels[i]) {
        const auto& col = content[static_cast<std::size_t>(cells[j].col - 1)];
        if (!std::binary_search(col.begin(), col.end(), labels[i])) return false;
      } else if (labels[j] == labels[i] && cells[j].row > cells[i].row) {
        return false;
      }
    }
  }
  return true;
}

int displacement(const Tableau& t, Cell cell) { return t.label(cell) - cell.row; }

long total_displacement(const Tableau& t) {
  long total = 0;
  const auto& cells = t.diagram().cells();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const int delta = t.labels()[i] - cells[i].row;
    if (delta < 0) {
      throw KohnertError(ErrorCode::NegativeDisplacement,
                         "cell " + cell_text(cells[i]) + " has label " +
                             std::to_string(t.labels()[i]) + " below its row");
    }
    total += delta;
  }
  return total;
}

Tableau push_labels_through_move(const Tableau& t, const MoveRecord& move) {
  const auto result = apply_kohnert_move(t.diagram(), move.source_row);
  if (!result || result->second != move) {
    throw KohnertError(ErrorCode::IllegalMove,
                       "no such Kohnert move from row " + std::to_string(move.source_row));
  }
  std::map<Cell, int> old = t.labeling();
  std::map<Cell, int> next = old;
  next.erase({move.source_row, move.col});
  for (int r = move.dest_row; r < move.source_row; ++r) {
    next[{r, move.col}] = old.at({r + 1, move.col});
  }
  return Tableau(result->first, next);
}

Tableau raise_once(const Tableau& t) {
  if (!is_northeast_labeling(t)) {
    throw KohnertError(ErrorCode::NotNortheast, "raise_once needs a northeast labeling");
  }
  const long delta = total_displacement(t);
  if (delta == 0) throw KohnertError(ErrorCode::AlreadyInitial, "total displacement is zero");

  const auto& cells = t.diagram().cells();
  const auto& labels = t.labels();
  std::size_t pick = cells.size();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (labels[i] == cells[i].row) continue;
    // Column-major order makes the first hit of a label its leftmost cell.
    if (pick == cells.size() || labels[i] > labels[pick]) pick = i;
  }
  const Cell from = cells[pick];
  const Cell to{from.row + 1, from.col};
  if (t.diagram().contains(to)) {
    throw std::logic_error("raise_once: position above the selected cell is occupied");
  }
  std::map<Cell, int> next = t.labeling();
  next.erase(from);
  next[to] = labels[pick];
  Tableau raised(relocate_cell(t.diagram(), from, to), next);

  if (!is_northeast_labeling(raised) || total_displacement(raised) != delta - 1 ||
      !is_column_equivalent(raised, t)) {
    throw std::logic_error("raise_once: raised tableau violates its postconditions");
  }
  const auto down = apply_kohnert_move(raised.diagram(), to.row);
  if (!down || down->first != t.diagram() || !down->second.elementary) {
    throw std::logic_error("raise_once: input is not one elementary move below the result");
  }
  return raised;
}

bool membership_test(const Diagram& d, const Diagram& initial) {
  if (!is_northeast(initial)) {
    throw KohnertError(ErrorCode::NotNortheast, "membership test needs a northeast initial diagram");
  }
  if (column_weight(d) != column_weight(initial)) return false;
  return is_northeast_labeling(standard_labeling(d, initial));
}

}  // namespace kohnert
