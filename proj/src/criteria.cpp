#include "kohnert/criteria.hpp"

#include <algorithm>
#include <stdexcept>

#include "kohnert/error.hpp"

namespace kohnert {

std::string_view to_string(PatternKind kind) noexcept {
  switch (kind) {
    case PatternKind::Mmf: return "mmf";
    case PatternKind::Ranked: return "ranked";
    case PatternKind::Bounded: return "bounded";
  }
  return "unknown";
}

namespace {

// Direct counts, used only for clause re-verification.
int empties_strictly_below(const Diagram& d, int col, int row) {
  return (row - 1) - column_weight_bounded(d, col, row, true);
}

int empties_weakly_below(const Diagram& d, int col, int row) {
  return row - column_weight_bounded(d, col, row, false);
}

int column_count(const Diagram& d, int col) {
  const WeakComposition w = column_weight(d);
  return col >= 1 && col <= static_cast<int>(w.size()) ? w[static_cast<std::size_t>(col - 1)] : 0;
}

void require_northeast(const Diagram& d) {
  if (!is_northeast(d)) {
    throw KohnertError(ErrorCode::NotNortheast, "pattern criteria apply to northeast diagrams only");
  }
}

// Precomputed column statistics over the bounding box.
class ColumnTable {
 public:
  explicit ColumnTable(const Diagram& d)
      : rows_(d.max_row()), cols_(d.max_col()),
        weakly_(static_cast<std::size_t>((rows_ + 1) * (cols_ + 1)), 0) {
    for (const Cell& c : d.cells()) ++at(c.col, c.row);
    for (int col = 1; col <= cols_; ++col) {
      for (int r = 1; r <= rows_; ++r) at(col, r) += at(col, r - 1);
    }
  }

  int cols() const { return cols_; }
  /// Cells of `col` in rows <= row.
  int weakly_below(int col, int row) const { return at(col, std::min(row, rows_)); }
  int strictly_below(int col, int row) const { return weakly_below(col, row - 1); }
  int weight(int col) const { return at(col, rows_); }
  bool has_empty_strictly_below(int col, int row) const { return strictly_below(col, row) < row - 1; }

 private:
  int& at(int col, int row) { return weakly_[static_cast<std::size_t>(col * (rows_ + 1) + row)]; }
  int at(int col, int row) const {
    return weakly_[static_cast<std::size_t>(col * (rows_ + 1) + std::max(row, 0))];
  }

  int rows_;
  int cols_;
  std::vector<int> weakly_;
};

void tick(std::size_t* operations) {
  if (operations) ++*operations;
}

PatternWitness verified(const Diagram& d, PatternKind kind, std::vector<Cell> cells) {
  if (!satisfies_all_clauses(d, kind, cells)) {
    throw std::logic_error("pattern search produced a witness that fails its clauses");
  }
  return {kind, std::move(cells)};
}

}  // namespace

std::vector<std::pair<char, bool>> evaluate_clauses(const Diagram& d, PatternKind kind,
                                                    std::span<const Cell> cells) {
  const std::size_t need = kind == PatternKind::Mmf ? 2 : 3;
  if (cells.size() != need) throw std::invalid_argument("wrong number of witness cells");
  for (const Cell& c : cells) {
    if (!d.contains(c)) throw KohnertError(ErrorCode::CellNotFound, "witness cell not in diagram");
  }
  const int m = d.max_col();
  const auto [r1, c1] = std::pair{cells[0].row, cells[0].col};
  const auto [r2, c2] = std::pair{cells[1].row, cells[1].col};
  std::vector<std::pair<char, bool>> out;

  if (kind == PatternKind::Mmf) {
    bool d_clause = true;
    for (int c = c1 + 1; c <= m; ++c) d_clause = d_clause && empties_weakly_below(d, c, r1) >= 2;
    out = {{'a', r1 < r2}, {'b', c1 < c2}, {'c', empties_strictly_below(d, c1, r1) >= 1}, {'d', d_clause}};
    return out;
  }

  const auto [r3, c3] = std::pair{cells[2].row, cells[2].col};
  if (kind == PatternKind::Ranked) {
    bool c_clause = true;
    for (int c = c1; c < c3; ++c) c_clause = c_clause && empties_strictly_below(d, c, r1) >= 1;
    bool d_clause = true;
    for (int c = c3; c <= m; ++c) d_clause = d_clause && column_weight_bounded(d, c, r3, true) < r1;
    out = {{'a', r1 < r2 && r2 <= r3}, {'b', c1 == c2 && c2 < c3}, {'c', c_clause}, {'d', d_clause}};
    return out;
  }

  bool c_clause = true;
  for (int c = c1; c < c2; ++c) c_clause = c_clause && column_count(d, c) < column_count(d, c2);
  bool d_clause = true;
  for (int c = c1; c <= m; ++c) d_clause = d_clause && empties_strictly_below(d, c, r1) >= 1;
  bool e_clause = true;
  for (int r = r1 + 1; r <= r3; ++r) e_clause = e_clause && !d.contains({r, c1});
  out = {{'a', r1 <= r2 && r2 < r3}, {'b', c1 < c2 && c2 == c3}, {'c', c_clause}, {'d', d_clause},
         {'e', e_clause}};
  return out;
}

bool satisfies_all_clauses(const Diagram& d, PatternKind kind, std::span<const Cell> cells) {
  const auto clauses = evaluate_clauses(d, kind, cells);
  return std::all_of(clauses.begin(), clauses.end(), [](const auto& c) { return c.second; });
}

std::optional<PatternWitness> mmf_pattern(const Diagram& d, std::size_t* operations) {
  require_northeast(d);
  const ColumnTable table(d);
  const auto& cells = d.cells();
  for (const Cell& x1 : cells) {
    tick(operations);
    if (!table.has_empty_strictly_below(x1.col, x1.row)) continue;
    bool wide_gap = true;
    for (int c = x1.col + 1; c <= table.cols() && wide_gap; ++c) {
      tick(operations);
      wide_gap = x1.row - table.weakly_below(c, x1.row) >= 2;
    }
    if (!wide_gap) continue;
    for (const Cell& x2 : cells) {
      tick(operations);
      if (x2.col > x1.col && x2.row > x1.row) return verified(d, PatternKind::Mmf, {x1, x2});
    }
  }
  return std::nullopt;
}

std::optional<PatternWitness> ranked_pattern(const Diagram& d, std::size_t* operations) {
  require_northeast(d);
  const ColumnTable table(d);
  const auto& cells = d.cells();
  for (const Cell& x1 : cells) {
    for (const Cell& x2 : cells) {
      tick(operations);
      if (x2.col != x1.col || x2.row <= x1.row) continue;
      for (const Cell& x3 : cells) {
        tick(operations);
        if (x3.col <= x1.col || x3.row < x2.row) continue;
        bool ok = true;
        for (int c = x1.col; c < x3.col && ok; ++c) {
          tick(operations);
          ok = table.has_empty_strictly_below(c, x1.row);
        }
        for (int c = x3.col; c <= table.cols() && ok; ++c) {
          tick(operations);
          ok = table.strictly_below(c, x3.row) < x1.row;
        }
        if (ok) return verified(d, PatternKind::Ranked, {x1, x2, x3});
      }
    }
  }
  return std::nullopt;
}

std::optional<PatternWitness> bounded_pattern(const Diagram& d, std::size_t* operations) {
  require_northeast(d);
  const ColumnTable table(d);
  const auto& cells = d.cells();
  for (const Cell& x1 : cells) {
    tick(operations);
    bool gaps = true;
    for (int c = x1.col; c <= table.cols() && gaps; ++c) {
      tick(operations);
      gaps = table.has_empty_strictly_below(c, x1.row);
    }
    if (!gaps) continue;
    for (const Cell& x2 : cells) {
      tick(operations);
      if (x2.col <= x1.col || x2.row < x1.row) continue;
      bool lighter = true;
      for (int c = x1.col; c < x2.col && lighter; ++c) {
        tick(operations);
        lighter = table.weight(c) < table.weight(x2.col);
      }
      if (!lighter) continue;
      for (const Cell& x3 : cells) {
        tick(operations);
        if (x3.col != x2.col || x3.row <= x2.row) continue;
        bool clear = true;
        for (int r = x1.row + 1; r <= x3.row && clear; ++r) {
          tick(operations);
          clear = !d.contains({r, x1.col});
        }
        if (clear) return verified(d, PatternKind::Bounded, {x1, x2, x3});
      }
    }
  }
  return std::nullopt;
}

bool lock_mmf(const WeakComposition& alpha) {
  int zeros = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) {
      ++zeros;
    } else if (alpha[i] > 1 && zeros >= 2) {
      if (std::any_of(alpha.begin() + static_cast<long>(i) + 1, alpha.end(), [](int a) { return a > 0; })) {
        return false;
      }
    }
  }
  return true;
}

bool lock_ranked(const WeakComposition& alpha) {
  int zeros_before = 0;
  int ones_since = 0;
  std::optional<int> zeros_at_last_big;
  for (int a : alpha) {
    if (a >= 2) {
      if (zeros_at_last_big && ones_since < *zeros_at_last_big) return false;
      zeros_at_last_big = zeros_before;
      ones_since = 0;
    } else if (a == 1) {
      ++ones_since;
    } else {
      ++zeros_before;
    }
  }
  return true;
}

bool lock_bounded(const WeakComposition& alpha) {
  auto it = std::find(alpha.begin(), alpha.end(), 0);
  int prev = 0;
  for (; it != alpha.end(); ++it) {
    if (*it == 0) continue;
    if (*it < prev) return false;
    prev = *it;
  }
  return true;
}

bool lock_ranked_and_bounded(const WeakComposition& alpha) {
  const bool combined = lock_ranked(alpha) && lock_bounded(alpha);
  bool shape = true;
  const auto first_zero = std::find(alpha.begin(), alpha.end(), 0);
  if (first_zero != alpha.end()) {
    const auto last_nonzero =
        std::find_if(alpha.rbegin(), alpha.rend(), [](int a) { return a != 0; }).base() - 1;
    for (auto it = first_zero + 1; it != alpha.end(); ++it) {
      if (*it > 1 && it != last_nonzero) shape = false;
    }
  }
  if (shape != combined) {
    throw std::logic_error("lock_ranked_and_bounded: shape test disagrees with the combined test");
  }
  return combined;
}

}  // namespace kohnert
