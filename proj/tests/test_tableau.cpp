#include <doctest.h>

#include <array>
#include <map>
#include <random>

#include "kohnert/error.hpp"
#include "kohnert/poset.hpp"
#include "kohnert/tableau.hpp"

using namespace kohnert;

namespace {

Diagram D(std::initializer_list<std::pair<int, int>> cells) { return Diagram::from_cells(cells); }

// Builds a tableau from (row, col, label) triples.
Tableau T(std::initializer_list<std::array<int, 3>> entries) {
  std::vector<Cell> cells;
  std::map<Cell, int> labels;
  for (const auto& [r, c, l] : entries) {
    cells.push_back({r, c});
    labels[{r, c}] = l;
  }
  return Tableau(Diagram::from_cells(std::span<const Cell>(cells)), labels);
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const KohnertError& e) {
    return e.code();
  }
  FAIL("expected a KohnertError");
  return ErrorCode::ParseError;
}

// A northeast diagram, a diagram below it, and its standard labeling.
const Diagram kInitial = D({{1, 2}, {3, 2}, {4, 1}, {4, 2}, {5, 3}, {5, 4}, {6, 3}, {6, 4}});
const Diagram kLower = D({{1, 2}, {1, 4}, {2, 2}, {2, 3}, {3, 2}, {3, 4}, {4, 1}, {6, 3}});
const Tableau kLowerLabeled =
    T({{1, 2, 1}, {1, 4, 5}, {2, 2, 3}, {2, 3, 5}, {3, 2, 4}, {3, 4, 6}, {4, 1, 4}, {6, 3, 6}});

}  // namespace

TEST_CASE("tableau construction validates the labeling") {
  const Diagram d = D({{1, 1}, {2, 1}});
  CHECK_THROWS_AS(Tableau(d, {{{1, 1}, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Tableau(d, {{{1, 1}, 1}, {{3, 1}, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Tableau(d, {{{1, 1}, 0}, {{2, 1}, 2}}), std::invalid_argument);
  const Tableau t(d, {{{1, 1}, 2}, {{2, 1}, 5}});
  CHECK(t.label({2, 1}) == 5);
  CHECK(code_of([&] { t.label({1, 2}); }) == ErrorCode::CellNotFound);
}

TEST_CASE("strict labelings") {
  const Tableau strict = T({{1, 3, 2}, {2, 2, 1}, {2, 3, 4}, {2, 4, 4}, {4, 1, 2}, {4, 2, 6}, {4, 3, 5}});
  CHECK(is_strict(strict));
  const Tableau flat = T({{1, 3, 2}, {2, 2, 2}, {2, 3, 2}, {2, 4, 2}, {4, 1, 4}, {4, 2, 4}, {4, 3, 4}});
  CHECK_FALSE(is_strict(flat));
  CHECK(is_strict(super_standard(kInitial)));
}

TEST_CASE("standard labeling sorts each column's initial rows onto the cells") {
  const Tableau t = standard_labeling(kLower, kInitial);
  CHECK(t.labeling() == kLowerLabeled.labeling());
  CHECK(is_column_equivalent(t, super_standard(kInitial)));
  CHECK(is_strict(t));
  CHECK(code_of([] { standard_labeling(D({{1, 1}}), D({{1, 2}})); }) == ErrorCode::NotColumnCompatible);
}

TEST_CASE("column content") {
  const ColumnContent content = column_content(kLowerLabeled);
  const ColumnContent expected{{4}, {1, 3, 4}, {5, 6}, {5, 6}};
  CHECK(content == expected);
}

TEST_CASE("northeast labeling and displacement") {
  CHECK(is_northeast_labeling(kLowerLabeled));
  CHECK(total_displacement(kLowerLabeled) == 12);
  CHECK(displacement(kLowerLabeled, {1, 4}) == 4);
  CHECK(displacement(kLowerLabeled, {6, 3}) == 0);
  CHECK(is_northeast_labeling(super_standard(kInitial)));
  CHECK(total_displacement(super_standard(kInitial)) == 0);

  // Equal labels must weakly descend to the right.
  CHECK_FALSE(is_northeast_labeling(T({{1, 1, 2}, {2, 2, 2}})));
  // A label below its row.
  CHECK_FALSE(is_northeast_labeling(T({{2, 1, 1}})));
  // Label 2 to the left of a smaller label, with no 2 in the right column.
  CHECK_FALSE(is_northeast_labeling(T({{1, 1, 2}, {1, 2, 1}})));

  CHECK(code_of([] { total_displacement(T({{3, 1, 1}})); }) == ErrorCode::NegativeDisplacement);
}

TEST_CASE("raise_once moves the leftmost largest displaced label up one row") {
  const Tableau raised = raise_once(kLowerLabeled);
  const Tableau expected =
      T({{1, 2, 1}, {1, 4, 5}, {2, 2, 3}, {2, 3, 5}, {3, 2, 4}, {4, 4, 6}, {4, 1, 4}, {6, 3, 6}});
  CHECK(raised.labeling() == expected.labeling());
  CHECK(total_displacement(raised) == 11);

  const Tableau bottom = T({{1, 2, 2}, {2, 1, 3}, {2, 2, 3}, {1, 3, 3}, {2, 3, 4}});
  CHECK(total_displacement(bottom) == 7);
  const Tableau up = raise_once(bottom);
  CHECK(up.diagram() == D({{1, 2}, {2, 1}, {2, 2}, {1, 3}, {3, 3}}));
  CHECK(total_displacement(up) == 6);

  CHECK(code_of([] { raise_once(super_standard(kInitial)); }) == ErrorCode::AlreadyInitial);
  CHECK(code_of([] { raise_once(T({{1, 1, 2}, {1, 2, 1}})); }) == ErrorCode::NotNortheast);
}

TEST_CASE("repeated raising climbs back to the super-standard tableau") {
  Tableau t = kLowerLabeled;
  long steps = 0;
  while (total_displacement(t) > 0) {
    t = raise_once(t);
    ++steps;
  }
  CHECK(steps == 12);
  CHECK(t.diagram() == kInitial);
  CHECK(t.labeling() == super_standard(kInitial).labeling());
}

TEST_CASE("every poset element has a northeast standard labeling and raises to the root") {
  const KohnertPoset p = build_poset(kInitial);
  CHECK(p.contains(kLower));
  for (const Diagram& d : p.nodes()) {
    Tableau t = standard_labeling(d, kInitial);
    REQUIRE(is_northeast_labeling(t));
    while (total_displacement(t) > 0) t = raise_once(t);
    CHECK(t.diagram() == kInitial);
  }
}

TEST_CASE("pushing labels through moves reproduces the standard labeling") {
  std::mt19937 rng(7);
  for (const Diagram& d0 : {kInitial, D({{2, 2}, {3, 1}, {3, 2}, {3, 3}, {4, 3}}), lock_diagram({0, 2, 2})}) {
    for (int walk = 0; walk < 50; ++walk) {
      Diagram d = d0;
      Tableau t = super_standard(d0);
      long delta = 0;
      while (true) {
        const auto succ = kohnert_successors(d);
        if (succ.empty()) break;
        const auto& [next, move] = succ[std::uniform_int_distribution<std::size_t>(0, succ.size() - 1)(rng)];
        t = push_labels_through_move(t, move);
        CHECK(t.labeling() == standard_labeling(next, d0).labeling());
        delta += move.source_row - move.dest_row;
        CHECK(total_displacement(t) == delta);
        d = next;
      }
    }
  }
  const MoveRecord bogus{3, 1, 1, 1, false};
  CHECK(code_of([&] { push_labels_through_move(super_standard(kInitial), bogus); }) == ErrorCode::IllegalMove);
}

TEST_CASE("membership test") {
  CHECK(membership_test(kLower, kInitial));
  CHECK(membership_test(kInitial, kInitial));
  CHECK_FALSE(membership_test(D({{1, 1}}), kInitial));
  const Diagram lock = lock_diagram({0, 2, 2});
  CHECK(membership_test(D({{1, 1}, {3, 1}, {1, 2}, {2, 2}}), lock));
  CHECK(code_of([] { membership_test(D({{1, 1}}), D({{2, 1}, {1, 2}})); }) == ErrorCode::NotNortheast);
}

TEST_CASE("membership test agrees with the poset over a 3x3 box") {
  std::size_t pairs = 0;
  const auto all = enumerate_diagrams(3, 3, {}, {.normalized_only = false});
  for (const Diagram& d0 : all) {
    if (!is_northeast(d0)) continue;
    const KohnertPoset p = build_poset(d0);
    for (const Diagram& d : all) {
      if (column_weight(d) != column_weight(d0)) continue;
      CHECK(membership_test(d, d0) == p.contains(d));
      ++pairs;
    }
  }
  CHECK(pairs > 1000);
}
