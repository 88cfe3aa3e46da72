#include "kohnert/poset.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>

#include "kohnert/error.hpp"
#include "kohnert/tableau.hpp"

namespace kohnert {

namespace {

// Builds CSR adjacency from (source, payload) pairs already grouped by source.
template <typename Edges, typename Source, typename Payload>
void build_csr(std::size_t n, const Edges& edges, Source source, Payload payload,
               std::vector<std::size_t>& offsets, std::vector<std::size_t>& list) {
  offsets.assign(n + 1, 0);
  for (const auto& e : edges) ++offsets[source(e) + 1];
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  list.assign(edges.size(), 0);
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  for (std::size_t i = 0; i < edges.size(); ++i) list[fill[source(edges[i])]++] = payload(edges[i], i);
}

// Breadth-first search over move edges from `start`, never entering a node
// whose potential is at or below `floor`, except for `goal` itself.
bool reachable_above(const std::vector<long>& potential, const std::vector<MoveEdge>& edges,
                     const std::vector<std::size_t>& offsets, const std::vector<std::size_t>& list,
                     std::size_t start, std::size_t goal, std::vector<std::uint32_t>& stamp,
                     std::uint32_t mark) {
  if (start == goal) return true;
  const long floor = potential[goal];
  if (potential[start] <= floor) return false;
  std::vector<std::size_t> stack{start};
  stamp[start] = mark;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t k = offsets[u]; k < offsets[u + 1]; ++k) {
      const std::size_t v = edges[list[k]].to;
      if (v == goal) return true;
      if (potential[v] <= floor || stamp[v] == mark) continue;
      stamp[v] = mark;
      stack.push_back(v);
    }
  }
  return false;
}

}  // namespace

std::optional<std::size_t> KohnertPoset::index_of(const Diagram& d) const {
  auto it = index_.find(d);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::span<const std::size_t> KohnertPoset::out_moves(std::size_t i) const noexcept {
  return {out_list_.data() + out_offsets_[i], out_offsets_[i + 1] - out_offsets_[i]};
}

std::span<const std::size_t> KohnertPoset::covered_by(std::size_t i) const noexcept {
  return {cover_list_.data() + cover_offsets_[i], cover_offsets_[i + 1] - cover_offsets_[i]};
}

bool KohnertPoset::reaches(std::size_t above, std::size_t below) const {
  std::vector<std::uint32_t> stamp(nodes_.size(), 0);
  return reachable_above(potential_, move_edges_, out_offsets_, out_list_, above, below, stamp, 1);
}

KohnertPoset build_poset(const Diagram& root, bool elementary_only, std::size_t max_nodes) {
  KohnertPoset p;
  p.elementary_only_ = elementary_only;
  p.nodes_.push_back(root);
  p.potential_.push_back(root.row_index_sum());
  p.index_.emplace(root, 0);
  const int top_row = root.max_row();
  const int top_col = root.max_col();

  for (std::size_t u = 0; u < p.nodes_.size(); ++u) {
    for (auto& [child, move] : kohnert_successors(p.nodes_[u])) {
      if (elementary_only && !move.elementary) continue;
      if (child.max_row() > top_row || child.max_col() > top_col) {
        throw std::logic_error("build_poset: a move left the root's bounding box");
      }
      auto [it, inserted] = p.index_.try_emplace(child, p.nodes_.size());
      if (inserted) {
        if (p.nodes_.size() >= max_nodes) {
          throw KohnertError(ErrorCode::BoundExceeded,
                             "poset has more than " + std::to_string(max_nodes) + " nodes");
        }
        p.potential_.push_back(child.row_index_sum());
        p.nodes_.push_back(std::move(child));
      }
      p.move_edges_.push_back({u, it->second, move});
    }
  }
  const std::size_t n = p.nodes_.size();
  build_csr(n, p.move_edges_, [](const MoveEdge& e) { return e.from; },
            [](const MoveEdge&, std::size_t i) { return i; }, p.out_offsets_, p.out_list_);

  // A move edge u -> v is a cover unless v is also reachable from another child
  // of u. Potentials drop by the distance moved, so an elementary edge is always
  // a cover and the search for a jump edge never goes below v's potential.
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t mark = 0;
  for (std::size_t u = 0; u < n; ++u) {
    const auto out = p.out_moves(u);
    for (std::size_t k : out) {
      const MoveEdge& e = p.move_edges_[k];
      bool cover = true;
      if (!e.move.elementary) {
        for (std::size_t other : out) {
          if (other == k) continue;
          ++mark;
          if (reachable_above(p.potential_, p.move_edges_, p.out_offsets_, p.out_list_,
                              p.move_edges_[other].to, e.to, stamp, mark)) {
            cover = false;
            break;
          }
        }
      }
      if (cover) p.cover_edges_.push_back({u, e.to});
    }
  }
  std::sort(p.cover_edges_.begin(), p.cover_edges_.end());
  build_csr(n, p.cover_edges_, [](const CoverEdge& e) { return e.from; },
            [](const CoverEdge& e, std::size_t) { return e.to; }, p.cover_offsets_, p.cover_list_);
  return p;
}

bool equal_as_sets(const KohnertPoset& a, const KohnertPoset& b) {
  if (a.size() != b.size()) return false;
  return std::all_of(a.nodes().begin(), a.nodes().end(), [&](const Diagram& d) { return b.contains(d); });
}

bool is_refinement(const KohnertPoset& coarse, const KohnertPoset& fine) {
  if (!equal_as_sets(coarse, fine)) return false;
  std::vector<std::size_t> to_fine(coarse.size());
  for (std::size_t i = 0; i < coarse.size(); ++i) to_fine[i] = *fine.index_of(coarse.nodes()[i]);
  // Transitivity: checking the generating move edges of `coarse` suffices.
  return std::all_of(coarse.move_edges().begin(), coarse.move_edges().end(), [&](const MoveEdge& e) {
    return fine.reaches(to_fine[e.from], to_fine[e.to]);
  });
}

std::vector<std::size_t> minimal_indices(const KohnertPoset& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.out_moves(i).empty()) out.push_back(i);
  }
  return out;
}

std::vector<Diagram> minimal_elements(const KohnertPoset& p) {
  std::vector<Diagram> out;
  for (std::size_t i : minimal_indices(p)) out.push_back(p.nodes()[i]);
  return out;
}

bool is_bounded(const KohnertPoset& p) { return minimal_indices(p).size() == 1; }

std::vector<long> depth_from_root(const KohnertPoset& p) {
  std::vector<std::size_t> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<long> potential(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) potential[i] = p.nodes()[i].row_index_sum();
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return potential[a] > potential[b]; });
  std::vector<long> depth(p.size(), 0);
  for (std::size_t u : order) {
    for (std::size_t v : p.covered_by(u)) depth[v] = std::max(depth[v], depth[u] + 1);
  }
  return depth;
}

bool is_ranked(const KohnertPoset& p) {
  const std::vector<long> depth = depth_from_root(p);
  return std::all_of(p.cover_edges().begin(), p.cover_edges().end(),
                     [&](const CoverEdge& e) { return depth[e.to] == depth[e.from] + 1; });
}

std::optional<std::vector<long>> rank_by_displacement(const KohnertPoset& p) {
  if (!is_northeast(p.root())) {
    throw KohnertError(ErrorCode::NotNortheast, "displacement ranks need a northeast root");
  }
  if (!is_ranked(p)) return std::nullopt;
  std::vector<long> rank(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    rank[i] = -total_displacement(standard_labeling(p.nodes()[i], p.root()));
  }
  for (const CoverEdge& e : p.cover_edges()) {
    if (rank[e.from] != rank[e.to] + 1) {
      throw std::logic_error("rank_by_displacement: a cover does not span exactly one");
    }
  }
  return rank;
}

Chain chain_from_rows(const Diagram& start, std::span<const int> rows) {
  Chain chain;
  chain.diagrams.push_back(start);
  for (int row : rows) {
    auto next = apply_kohnert_move(chain.diagrams.back(), row);
    if (!next) {
      throw KohnertError(ErrorCode::IllegalMove, "no Kohnert move from row " + std::to_string(row));
    }
    chain.diagrams.push_back(std::move(next->first));
    chain.moves.push_back(next->second);
  }
  return chain;
}

void validate_chain(const Chain& chain) {
  if (chain.diagrams.empty() || chain.moves.size() + 1 != chain.diagrams.size()) {
    throw KohnertError(ErrorCode::InvalidChain, "chain needs one move per consecutive pair");
  }
  for (std::size_t k = 0; k < chain.moves.size(); ++k) {
    const auto next = apply_kohnert_move(chain.diagrams[k], chain.moves[k].source_row);
    if (!next || next->second != chain.moves[k] || next->first != chain.diagrams[k + 1]) {
      throw KohnertError(ErrorCode::InvalidChain, "step " + std::to_string(k) + " is not a Kohnert move");
    }
  }
}

Chain chain_to(const KohnertPoset& p, std::size_t target) {
  std::vector<std::size_t> via(p.size(), SIZE_MAX);
  std::deque<std::size_t> queue{0};
  std::vector<bool> seen(p.size(), false);
  seen[0] = true;
  while (!queue.empty() && !seen[target]) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t k : p.out_moves(u)) {
      const std::size_t v = p.move_edges()[k].to;
      if (seen[v]) continue;
      seen[v] = true;
      via[v] = k;
      queue.push_back(v);
    }
  }
  std::vector<std::size_t> steps;
  for (std::size_t v = target; v != 0; v = p.move_edges()[via[v]].from) steps.push_back(via[v]);
  Chain chain;
  chain.diagrams.push_back(p.root());
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    chain.diagrams.push_back(p.nodes()[p.move_edges()[*it].to]);
    chain.moves.push_back(p.move_edges()[*it].move);
  }
  return chain;
}

std::vector<int> move_labels(const Chain& chain, const Diagram& initial) {
  validate_chain(chain);
  std::vector<int> labels;
  labels.reserve(chain.moves.size());
  Tableau t = standard_labeling(chain.diagrams.front(), initial);
  for (const MoveRecord& m : chain.moves) {
    if (!m.elementary) {
      throw KohnertError(ErrorCode::NotElementary,
                         "jump move from row " + std::to_string(m.source_row) + " in an elementary chain");
    }
    labels.push_back(t.label({m.source_row, m.col}));
    t = push_labels_through_move(t, m);
  }
  return labels;
}

namespace {

long count_inversions(const std::vector<int>& labels) {
  long n = 0;
  for (std::size_t a = 0; a < labels.size(); ++a) {
    for (std::size_t b = a + 1; b < labels.size(); ++b) {
      if (labels[a] > labels[b]) ++n;
    }
  }
  return n;
}

std::pair<std::size_t, std::size_t> least_inversion(const std::vector<int>& labels) {
  for (std::size_t a = 0; a < labels.size(); ++a) {
    for (std::size_t b = a + 1; b < labels.size(); ++b) {
      if (labels[a] > labels[b]) return {a, b};
    }
  }
  throw std::logic_error("least_inversion: no inversion");
}

}  // namespace

long move_inversions(const Chain& chain, const Diagram& initial) {
  return count_inversions(move_labels(chain, initial));
}

Chain shuffle_chain(const Chain& chain, const Diagram& initial) {
  std::vector<int> labels = move_labels(chain, initial);
  if (chain.diagrams.front() != initial) {
    throw KohnertError(ErrorCode::InvalidChain, "chain must start at the initial diagram");
  }
  std::vector<Cell> sources;
  for (const MoveRecord& m : chain.moves) sources.push_back({m.source_row, m.col});

  Chain current = chain;
  long inversions = count_inversions(labels);
  while (inversions > 0) {
    const auto [a, b] = least_inversion(labels);
    // Step b is performed first, then steps a..b-1 from the same positions.
    std::rotate(sources.begin() + static_cast<long>(a), sources.begin() + static_cast<long>(b),
                sources.begin() + static_cast<long>(b) + 1);
    std::rotate(labels.begin() + static_cast<long>(a), labels.begin() + static_cast<long>(b),
                labels.begin() + static_cast<long>(b) + 1);

    Chain next;
    next.diagrams.push_back(initial);
    for (const Cell& src : sources) {
      auto step = apply_kohnert_move(next.diagrams.back(), src.row);
      if (!step || step->second.col != src.col || !step->second.elementary) {
        throw std::logic_error("shuffle_chain: reordered step is not an elementary move");
      }
      next.diagrams.push_back(std::move(step->first));
      next.moves.push_back(step->second);
    }
    const long after = count_inversions(labels);
    if (after != inversions - static_cast<long>(b - a) || next.diagrams.back() != chain.diagrams.back()) {
      throw std::logic_error("shuffle_chain: repair did not remove b - a inversions");
    }
    inversions = after;
    current = std::move(next);
  }
  return current;
}

CanonicalResult canonical_minimal_element(const Diagram& initial) {
  if (!is_northeast(initial)) {
    throw KohnertError(ErrorCode::NotNortheast, "canonical procedure needs a northeast diagram");
  }
  Diagram d = initial;
  Chain chain;
  chain.diagrams.push_back(d);
  for (int label = 2; label <= initial.max_row(); ++label) {
    // Cells labeled `label` have not moved yet; visit them right to left.
    std::vector<Cell> movers;
    for (const Cell& c : initial.cells()) {
      if (c.row == label) movers.push_back(c);
    }
    for (auto it = movers.rbegin(); it != movers.rend(); ++it) {
      Cell pos = *it;
      while (pos.row > 1 && d.rightmost_in_row(pos.row) == pos) {
        auto step = apply_kohnert_move(d, pos.row);
        if (!step) break;
        if (!step->second.elementary) {
          throw std::logic_error("canonical procedure: a jump became available to the moving cell");
        }
        d = std::move(step->first);
        chain.diagrams.push_back(d);
        chain.moves.push_back(step->second);
        pos.row -= 1;
      }
    }
  }
  return {std::move(d), std::move(chain)};
}

}  // namespace kohnert
