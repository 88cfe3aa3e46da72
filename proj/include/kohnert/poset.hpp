#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "kohnert/diagram.hpp"

namespace kohnert {

inline constexpr std::size_t kDefaultMaxNodes = 200000;

/// Single Kohnert move between two poset nodes (indices into nodes()).
struct MoveEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  MoveRecord move;
};

/// Covering relation of the Kohnert order: `to` is covered by `from`.
struct CoverEdge {
  std::size_t from = 0;
  std::size_t to = 0;

  friend auto operator<=>(const CoverEdge&, const CoverEdge&) = default;
};

/// All diagrams reachable from a root by Kohnert moves (or by elementary
/// moves only), with the single-move edges and the Hasse diagram.
///
/// Node 0 is the root; nodes are numbered in breadth-first discovery order,
/// visiting successors by increasing source row, so numbering is deterministic.
/// Single-move edges are not necessarily covers: a jump can be implied by a
/// longer path. cover_edges() holds the transitive reduction.
class KohnertPoset {
 public:
  const Diagram& root() const noexcept { return nodes_.front(); }
  const std::vector<Diagram>& nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const std::vector<MoveEdge>& move_edges() const noexcept { return move_edges_; }
  const std::vector<CoverEdge>& cover_edges() const noexcept { return cover_edges_; }
  bool elementary_only() const noexcept { return elementary_only_; }

  std::optional<std::size_t> index_of(const Diagram& d) const;
  bool contains(const Diagram& d) const { return index_of(d).has_value(); }

  /// Indices of move edges leaving node `i`.
  std::span<const std::size_t> out_moves(std::size_t i) const noexcept;
  /// Nodes covered by node `i`.
  std::span<const std::size_t> covered_by(std::size_t i) const noexcept;

  /// True when node `below` lies weakly below node `above` in the order.
  bool reaches(std::size_t above, std::size_t below) const;

 private:
  friend KohnertPoset build_poset(const Diagram&, bool, std::size_t);

  bool elementary_only_ = false;
  std::vector<Diagram> nodes_;
  std::vector<long> potential_;  // row index sums; strictly decrease along edges
  std::unordered_map<Diagram, std::size_t, DiagramHash> index_;
  std::vector<MoveEdge> move_edges_;
  std::vector<std::size_t> out_offsets_;
  std::vector<std::size_t> out_list_;
  std::vector<CoverEdge> cover_edges_;
  std::vector<std::size_t> cover_offsets_;
  std::vector<std::size_t> cover_list_;
};

/// Breadth-first closure of `root` under Kohnert moves. Throws BoundExceeded
/// once more than `max_nodes` diagrams are discovered.
KohnertPoset build_poset(const Diagram& root, bool elementary_only = false,
                         std::size_t max_nodes = kDefaultMaxNodes);

bool equal_as_sets(const KohnertPoset& a, const KohnertPoset& b);

/// Same node sets, and every relation of `coarse` also holds in `fine`.
bool is_refinement(const KohnertPoset& coarse, const KohnertPoset& fine);

/// Nodes with no outgoing move, in node order.
std::vector<std::size_t> minimal_indices(const KohnertPoset& p);
std::vector<Diagram> minimal_elements(const KohnertPoset& p);

bool is_bounded(const KohnertPoset& p);

/// Longest cover-path distance from the root for every node.
std::vector<long> depth_from_root(const KohnertPoset& p);

/// Ranked iff every cover edge joins consecutive depths under depth_from_root.
bool is_ranked(const KohnertPoset& p);

/// For a ranked poset of a northeast root, node i gets minus the total
/// displacement of its standard labeling; every cover spans exactly one under
/// this map (std::logic_error otherwise). Absent for unranked posets.
/// Throws NotNortheast for a non-northeast root.
std::optional<std::vector<long>> rank_by_displacement(const KohnertPoset& p);

/// Saturated chain D_1 > D_2 > ... > D_M with the move between each pair.
struct Chain {
  std::vector<Diagram> diagrams;
  std::vector<MoveRecord> moves;

  friend bool operator==(const Chain&, const Chain&) = default;
};

/// Replays Kohnert moves of the given source rows from `start`.
/// Throws IllegalMove if a row has no legal move.
Chain chain_from_rows(const Diagram& start, std::span<const int> rows);

/// Throws InvalidChain unless consecutive diagrams are joined by the recorded moves.
void validate_chain(const Chain& chain);

/// Shortest move path from the root to node `target`.
Chain chain_to(const KohnertPoset& p, std::size_t target);

/// Labels of the moved cells along an elementary chain, using standard
/// labelings with respect to `initial`. Throws NotElementary on a jump.
std::vector<int> move_labels(const Chain& chain, const Diagram& initial);

/// Pairs of steps where a larger label moves before a smaller one.
long move_inversions(const Chain& chain, const Diagram& initial);

/// Reorders an elementary chain starting at `initial` into one with the same
/// endpoints and length and no move inversions: repeatedly takes the
/// lexicographically least inversion (a, b) and moves step b in front of step a.
/// Throws NotElementary on a jump and InvalidChain if the chain does not start
/// at `initial`.
Chain shuffle_chain(const Chain& chain, const Diagram& initial);

struct CanonicalResult {
  Diagram minimal;
  Chain chain;
};

/// Greedy inversion-free procedure: for labels ascending, and within a label
/// from the rightmost cell leftwards, move the cell down by elementary moves
/// until it is blocked. The result is a minimal element of P(initial).
/// Throws NotNortheast; throws std::logic_error if a jump ever becomes
/// available to the moving cell.
CanonicalResult canonical_minimal_element(const Diagram& initial);

}  // namespace kohnert
