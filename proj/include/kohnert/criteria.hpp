#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "kohnert/diagram.hpp"

namespace kohnert {

enum class PatternKind { Mmf, Ranked, Bounded };

std::string_view to_string(PatternKind kind) noexcept;

/// Cells x1, x2[, x3] of a forbidden configuration found in a northeast diagram.
struct PatternWitness {
  PatternKind kind = PatternKind::Mmf;
  std::vector<Cell> cells;

  friend bool operator==(const PatternWitness&, const PatternWitness&) = default;
};

/// Per-clause truth values ('a', 'b', ...) of a candidate configuration,
/// evaluated directly from the diagram. Used to re-verify witnesses.
std::vector<std::pair<char, bool>> evaluate_clauses(const Diagram& d, PatternKind kind,
                                                    std::span<const Cell> cells);
bool satisfies_all_clauses(const Diagram& d, PatternKind kind, std::span<const Cell> cells);

// The searches below scan candidates in lexicographic order of
// (c1, r1, c2, r2[, c3, r3]) and return the first configuration meeting every
// clause. They throw NotNortheast for other diagrams; the empty diagram has no
// pattern. When `operations` is given it is incremented once per candidate
// clause check, which bounds the running time.

/// Multiplicity-freeness obstruction: x1=(r1,c1), x2=(r2,c2) with
///   (a) r1 < r2, (b) c1 < c2,
///   (c) an empty (r, c1) with r < r1,
///   (d) every column c > c1 has at least two empty positions (r, c) with r <= r1.
std::optional<PatternWitness> mmf_pattern(const Diagram& d, std::size_t* operations = nullptr);

/// Rankedness obstruction: x1, x2, x3 with
///   (a) r1 < r2 <= r3, (b) c1 = c2 < c3,
///   (c) every column c1 <= c < c3 has an empty (r, c) with r < r1,
///   (d) every column c >= c3 has fewer than r1 cells strictly below row r3.
std::optional<PatternWitness> ranked_pattern(const Diagram& d, std::size_t* operations = nullptr);

/// Boundedness obstruction: x1, x2, x3 with
///   (a) r1 <= r2 < r3, (b) c1 < c2 = c3,
///   (c) cwt_c < cwt_{c2} for every c1 <= c < c2,
///   (d) every column c >= c1 has an empty (r, c) with r < r1,
///   (e) (r, c1) is empty for r1 < r <= r3.
std::optional<PatternWitness> bounded_pattern(const Diagram& d, std::size_t* operations = nullptr);

// Lock-diagram specializations, read directly off the composition.

/// No subcomposition (0, 0, a, b) with a > 1 and b > 0.
bool lock_mmf(const WeakComposition& alpha);
/// For each pair of parts >= 2 with only 0s and 1s between them, the number of
/// 1s between is at least the number of 0s before the first of the pair.
bool lock_ranked(const WeakComposition& alpha);
/// The nonzero parts after the first 0 are weakly increasing.
bool lock_bounded(const WeakComposition& alpha);
/// lock_ranked && lock_bounded, cross-checked against the direct shape test:
/// after the first 0, a part exceeds 1 only if it is the last nonzero part.
bool lock_ranked_and_bounded(const WeakComposition& alpha);

}  // namespace kohnert
