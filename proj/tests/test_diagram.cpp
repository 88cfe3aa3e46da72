#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "kohnert/diagram.hpp"
#include "kohnert/error.hpp"
#include "oracle.hpp"

using namespace kohnert;

namespace {

Diagram D(std::initializer_list<std::pair<int, int>> cells) { return Diagram::from_cells(cells); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const KohnertError& e) {
    return e.code();
  }
  FAIL("expected a KohnertError");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("cells are stored column-major, then by row") {
  const Diagram d = D({{3, 1}, {1, 2}, {2, 1}, {1, 1}});
  const std::vector<Cell> expected{{1, 1}, {2, 1}, {3, 1}, {1, 2}};
  CHECK(d.cells() == expected);
  CHECK(d.max_row() == 3);
  CHECK(d.max_col() == 2);
  CHECK(d.contains({2, 1}));
  CHECK_FALSE(d.contains({2, 2}));
  CHECK(d.rightmost_in_row(1) == Cell{1, 2});
  CHECK_FALSE(d.rightmost_in_row(4).has_value());
}

TEST_CASE("invalid coordinates are rejected") {
  CHECK(code_of([] { D({{0, 1}}); }) == ErrorCode::InvalidCoordinate);
  CHECK(code_of([] { D({{1, -2}}); }) == ErrorCode::InvalidCoordinate);
}

TEST_CASE("row and column weights") {
  const Diagram d = lock_diagram({1, 3, 1, 0, 2});
  CHECK(row_weight(d) == WeakComposition{1, 3, 1, 0, 2});
  CHECK(column_weight(d) == WeakComposition{1, 2, 4});
  CHECK(row_weight(Diagram{}).empty());
  CHECK(column_weight_bounded(d, 3, 3, true) == 2);
  CHECK(column_weight_bounded(d, 3, 3, false) == 3);
}

TEST_CASE("lock diagram of (1,3,1,0,2)") {
  const Diagram d = lock_diagram({1, 3, 1, 0, 2});
  CHECK(d == D({{1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 3}, {5, 2}, {5, 3}}));
  CHECK(is_lock(d));
  CHECK(is_right_justified(d));
  CHECK(lock_diagram(row_weight(d)) == d);
  CHECK(lock_diagram({0, 2, 0}) == D({{2, 1}, {2, 2}}));
  CHECK_THROWS_AS(lock_diagram({1, -1}), std::invalid_argument);
  CHECK(lock_diagram({}).empty());
}

TEST_CASE("northeast and southeast examples") {
  const Diagram ne = D({{2, 1}, {3, 2}, {4, 1}, {4, 2}, {5, 2}, {5, 3}});
  CHECK(is_northeast(ne));
  CHECK_FALSE(is_southeast(ne));
  CHECK_FALSE(is_lock(ne));

  const Diagram se = D({{2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}, {4, 1}, {4, 2}, {5, 1}});
  CHECK(is_southeast(se));
  CHECK_FALSE(is_northeast(se));

  CHECK(is_northeast(Diagram{}));
  CHECK(is_southeast(Diagram{}));
  CHECK(is_lock(Diagram{}));
}

TEST_CASE("predicates agree with the naive definition over a 3x3 box") {
  for (const Diagram& d : enumerate_diagrams(3, 3, {}, {.normalized_only = false})) {
    CHECK(is_northeast(d) == oracle::northeast(oracle::to_cells(d)));
  }
}

TEST_CASE("lock iff northeast and southeast; lock diagrams round-trip through row weight") {
  std::size_t locks = 0;
  for_each_diagram(3, 4, {}, [&](const Diagram& d) {
    const bool lock = is_lock(d);
    CHECK(lock == (is_northeast(d) && is_southeast(d)));
    if (lock) {
      ++locks;
      const Diagram n = normalize_columns(d);
      CHECK(lock_diagram(row_weight(n)) == n);
      CHECK(is_right_justified(n));
    }
  }, {.normalized_only = false});
  CHECK(locks > 0);
}

TEST_CASE("row_weight inverts lock_diagram on compositions without trailing zeros") {
  for (const WeakComposition& alpha : enumerate_compositions(4, 3)) {
    if (!alpha.empty() && alpha.back() == 0) continue;
    CHECK(row_weight(lock_diagram(alpha)) == alpha);
  }
}

TEST_CASE("Kohnert move: jump over occupied positions") {
  const Diagram d = D({{1, 3}, {2, 2}, {3, 1}, {3, 2}, {3, 3}, {4, 3}, {5, 1}, {5, 3}});
  const auto result = apply_kohnert_move(d, 5);
  REQUIRE(result.has_value());
  const auto& [next, move] = *result;
  CHECK(move == MoveRecord{5, 3, 2, 2, false});
  CHECK(next == D({{1, 3}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}, {4, 3}, {5, 1}}));

  const auto second = apply_kohnert_move(next, 5);
  REQUIRE(second.has_value());
  CHECK(second->second == MoveRecord{5, 1, 4, 0, true});
}

TEST_CASE("Kohnert move: absent cases") {
  const Diagram d = D({{1, 1}, {2, 1}, {3, 2}});
  CHECK_FALSE(apply_kohnert_move(d, 1).has_value());  // bottom row
  CHECK_FALSE(apply_kohnert_move(d, 2).has_value());  // column full below
  CHECK_FALSE(apply_kohnert_move(d, 7).has_value());  // empty row
  CHECK_FALSE(apply_kohnert_move(Diagram{}, 1).has_value());
  CHECK(kohnert_successors(D({{1, 1}})).empty());
}

TEST_CASE("moves preserve column weight and lower exactly one row index") {
  for_each_diagram(3, 3, {}, [](const Diagram& d) {
    const auto naive = oracle::moves(oracle::to_cells(d));
    const auto succ = kohnert_successors(d);
    REQUIRE(succ.size() == naive.size());
    for (std::size_t i = 0; i < succ.size(); ++i) {
      const auto& [next, move] = succ[i];
      CHECK(oracle::to_cells(next) == naive[i]);
      CHECK(column_weight(next) == column_weight(d));
      CHECK(next.size() == d.size());
      CHECK(d.row_index_sum() - next.row_index_sum() == move.source_row - move.dest_row);
      CHECK(move.elementary == (move.jumped == 0));
      CHECK(apply_kohnert_move(d, move.source_row)->first == next);
    }
  }, {.normalized_only = false});
}

TEST_CASE("weights conserve the cell count") {
  for_each_diagram(2, 3, {}, [](const Diagram& d) {
    const auto r = row_weight(d);
    const auto c = column_weight(d);
    CHECK(std::accumulate(r.begin(), r.end(), std::size_t{0}) == d.size());
    CHECK(std::accumulate(c.begin(), c.end(), std::size_t{0}) == d.size());
  }, {.normalized_only = false});
}

TEST_CASE("normalize_columns closes interior empty columns") {
  const Diagram d = D({{2, 1}, {1, 3}, {4, 5}});
  CHECK(normalize_columns(d) == D({{2, 1}, {1, 2}, {4, 3}}));
  CHECK(is_northeast(D({{1, 1}, {1, 3}})) == is_northeast(normalize_columns(D({{1, 1}, {1, 3}}))));
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_diagrams(2, 2, [](const Diagram& d) { return is_northeast(d); }).size() == 11);
  CHECK(enumerate_diagrams(1, 1, {}, {.normalized_only = false}).size() == 2);
  CHECK(enumerate_diagrams(3, 3, [](const Diagram& d) { return is_northeast(d); }, {.normalized_only = false})
            .size() == 230);
  CHECK(enumerate_diagrams(3, 3, [](const Diagram& d) { return is_northeast(d); }).size() == 154);
  CHECK(code_of([] { enumerate_diagrams(6, 5); }) == ErrorCode::BoundExceeded);
  CHECK(code_of([] { enumerate_diagrams(0, 3); }) == ErrorCode::InvalidCoordinate);
}

TEST_CASE("composition enumeration") {
  const auto all = enumerate_compositions(2, 1);
  const std::vector<WeakComposition> expected{{}, {0}, {1}, {0, 0}, {0, 1}, {1, 0}, {1, 1}};
  CHECK(all == expected);
  CHECK(enumerate_compositions(5, 3).size() == 1 + 4 + 16 + 64 + 256 + 1024);
}
