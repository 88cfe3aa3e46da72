#include "kohnert/diagram.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "kohnert/error.hpp"

namespace kohnert {

namespace {

std::vector<Cell> sorted_unique(std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return cells;
}

void check_coordinate(int row, int col) {
  if (row < 1 || col < 1) {
    throw KohnertError(ErrorCode::InvalidCoordinate,
                       "cell (" + std::to_string(row) + "," + std::to_string(col) +
                           ") has a coordinate below 1");
  }
}

}  // namespace

Diagram Diagram::from_cells(std::span<const std::pair<int, int>> pairs) {
  std::vector<Cell> cells;
  cells.reserve(pairs.size());
  for (auto [row, col] : pairs) {
    check_coordinate(row, col);
    cells.push_back({row, col});
  }
  return Diagram(sorted_unique(std::move(cells)));
}

Diagram Diagram::from_cells(std::span<const Cell> cells) {
  for (const Cell& c : cells) check_coordinate(c.row, c.col);
  return Diagram(sorted_unique({cells.begin(), cells.end()}));
}

bool Diagram::contains(Cell cell) const noexcept {
  return std::binary_search(cells_.begin(), cells_.end(), cell);
}

int Diagram::max_row() const noexcept {
  int m = 0;
  for (const Cell& c : cells_) m = std::max(m, c.row);
  return m;
}

int Diagram::max_col() const noexcept { return cells_.empty() ? 0 : cells_.back().col; }

std::optional<Cell> Diagram::rightmost_in_row(int row) const noexcept {
  for (auto it = cells_.rbegin(); it != cells_.rend(); ++it) {
    if (it->row == row) return *it;
  }
  return std::nullopt;
}

long Diagram::row_index_sum() const noexcept {
  long s = 0;
  for (const Cell& c : cells_) s += c.row;
  return s;
}

std::size_t DiagramHash::operator()(const Diagram& d) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const Cell& c : d.cells()) {
    h ^= static_cast<std::size_t>(c.col) * 0x9e3779b97f4a7c15ULL + static_cast<std::size_t>(c.row);
    h *= 0x100000001b3ULL;
  }
  return h;
}

Diagram normalize_columns(const Diagram& d) {
  std::vector<Cell> out;
  out.reserve(d.size());
  int prev = 0;
  int next = 0;
  for (const Cell& c : d.cells_) {
    if (c.col != prev) {
      prev = c.col;
      ++next;
    }
    out.push_back({c.row, next});
  }
  return Diagram(std::move(out));
}

Diagram relocate_cell(const Diagram& d, Cell from, Cell to) {
  std::vector<Cell> cells = d.cells_;
  auto it = std::lower_bound(cells.begin(), cells.end(), from);
  if (it == cells.end() || *it != from) {
    throw std::logic_error("relocate_cell: source cell absent");
  }
  cells.erase(it);
  auto pos = std::lower_bound(cells.begin(), cells.end(), to);
  if (pos != cells.end() && *pos == to) {
    throw std::logic_error("relocate_cell: destination occupied");
  }
  cells.insert(pos, to);
  return Diagram(std::move(cells));
}

WeakComposition row_weight(const Diagram& d) {
  WeakComposition w(static_cast<std::size_t>(d.max_row()), 0);
  for (const Cell& c : d.cells()) ++w[static_cast<std::size_t>(c.row - 1)];
  return w;
}

WeakComposition column_weight(const Diagram& d) {
  WeakComposition w(static_cast<std::size_t>(d.max_col()), 0);
  for (const Cell& c : d.cells()) ++w[static_cast<std::size_t>(c.col - 1)];
  return w;
}

int column_weight_bounded(const Diagram& d, int col, int row, bool strict) {
  int n = 0;
  for (const Cell& c : d.cells()) {
    if (c.col == col && (strict ? c.row < row : c.row <= row)) ++n;
  }
  return n;
}

bool is_northeast(const Diagram& d) {
  for (const Cell& a : d.cells()) {
    for (const Cell& b : d.cells()) {
      if (!d.contains({std::max(a.row, b.row), std::max(a.col, b.col)})) return false;
    }
  }
  return true;
}

bool is_southeast(const Diagram& d) {
  for (const Cell& a : d.cells()) {
    for (const Cell& b : d.cells()) {
      if (!d.contains({std::min(a.row, b.row), std::max(a.col, b.col)})) return false;
    }
  }
  return true;
}

bool is_lock(const Diagram& d) { return is_northeast(d) && is_southeast(d); }

bool is_right_justified(const Diagram& d) {
  const int m = d.max_col();
  for (const Cell& c : d.cells()) {
    if (c.col < m && !d.contains({c.row, c.col + 1})) return false;
  }
  return true;
}

Diagram lock_diagram(const WeakComposition& alpha) {
  int m = 0;
  for (int a : alpha) {
    if (a < 0) throw std::invalid_argument("lock_diagram: negative part");
    m = std::max(m, a);
  }
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    for (int c = m - alpha[i] + 1; c <= m; ++c) cells.push_back({static_cast<int>(i) + 1, c});
  }
  return Diagram::from_cells(std::span<const Cell>(cells));
}

std::optional<std::pair<Diagram, MoveRecord>> apply_kohnert_move(const Diagram& d, int row) {
  const auto top = d.rightmost_in_row(row);
  if (!top) return std::nullopt;
  for (int r = row - 1; r >= 1; --r) {
    if (!d.contains({r, top->col})) {
      MoveRecord m{row, top->col, r, row - r - 1, row - r == 1};
      return std::pair{relocate_cell(d, *top, {r, top->col}), m};
    }
  }
  return std::nullopt;
}

std::vector<std::pair<Diagram, MoveRecord>> kohnert_successors(const Diagram& d) {
  std::vector<std::pair<Diagram, MoveRecord>> out;
  const int top = d.max_row();
  for (int r = 2; r <= top; ++r) {
    if (auto next = apply_kohnert_move(d, r)) out.push_back(std::move(*next));
  }
  return out;
}

void for_each_diagram(int max_row, int max_col,
                      const std::function<bool(const Diagram&)>& filter,
                      const std::function<void(const Diagram&)>& visit,
                      const EnumerateOptions& options) {
  if (max_row < 1 || max_col < 1) {
    throw KohnertError(ErrorCode::InvalidCoordinate, "enumeration box must be at least 1x1");
  }
  const auto positions = static_cast<std::size_t>(max_row) * static_cast<std::size_t>(max_col);
  if (positions > options.max_positions || positions > 40) {
    throw KohnertError(ErrorCode::BoundExceeded,
                       "box " + std::to_string(max_row) + "x" + std::to_string(max_col) + " has " +
                           std::to_string(positions) + " positions (limit " +
                           std::to_string(std::min<std::size_t>(options.max_positions, 40)) + ")");
  }
  const std::uint64_t count = std::uint64_t{1} << positions;
  std::vector<Cell> cells;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    cells.clear();
    bool normalized = true;
    int last_col = 0;
    for (std::size_t i = 0; i < positions; ++i) {
      if ((mask >> i & 1U) == 0) continue;
      const int col = static_cast<int>(i) / max_row + 1;
      if (col > last_col + 1) normalized = false;
      last_col = col;
      cells.push_back({static_cast<int>(i) % max_row + 1, col});
    }
    if (options.normalized_only && !normalized) continue;
    // Bit order is already column-major, so the cells are sorted.
    Diagram d = Diagram::from_cells(std::span<const Cell>(cells));
    if (filter && !filter(d)) continue;
    visit(d);
  }
}

std::vector<Diagram> enumerate_diagrams(int max_row, int max_col,
                                        const std::function<bool(const Diagram&)>& filter,
                                        const EnumerateOptions& options) {
  std::vector<Diagram> out;
  for_each_diagram(max_row, max_col, filter, [&](const Diagram& d) { out.push_back(d); }, options);
  return out;
}

std::vector<WeakComposition> enumerate_compositions(int max_len, int max_part) {
  std::vector<WeakComposition> out;
  if (max_len < 0 || max_part < 0) return out;
  for (int len = 0; len <= max_len; ++len) {
    WeakComposition a(static_cast<std::size_t>(len), 0);
    while (true) {
      out.push_back(a);
      int i = len - 1;
      while (i >= 0 && a[static_cast<std::size_t>(i)] == max_part) {
        a[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++a[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

}  // namespace kohnert
