#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "kohnert/diagram.hpp"
#include "kohnert/poset.hpp"

namespace kohnert {

enum class SweepProperty { Mmf, Ranked, Bounded, Refinement, Membership, Lock };

std::string_view to_string(SweepProperty p) noexcept;
/// Throws ParseError for an unknown name.
SweepProperty parse_property(std::string_view name);
std::vector<SweepProperty> all_properties();

struct Mismatch {
  std::string subject;  // diagram cells or composition
  std::string property;
  std::string criterion_answer;
  std::string brute_force_answer;
};

struct SweepOptions {
  int rows = 3;
  int cols = 3;
  std::vector<SweepProperty> properties = all_properties();
  unsigned jobs = 1;
  /// Include diagrams with empty columns left of the rightmost one.
  bool include_empty_columns = true;
  std::size_t max_positions = 25;
  std::size_t max_nodes = kDefaultMaxNodes;
};

struct SweepReport {
  int rows = 0;
  int cols = 0;
  std::size_t diagrams_checked = 0;
  std::size_t compositions_checked = 0;
  /// Checks performed and mismatches found, per property name.
  std::map<std::string, std::size_t> checks;
  std::map<std::string, std::size_t> failures;
  /// Diagrams whose elementary order is strictly coarser than the full order.
  std::size_t strict_refinements = 0;
  std::vector<Mismatch> mismatches;
  std::chrono::duration<double> wall_time{};
};

/// Checks every northeast diagram of the box (and, for Lock, every weak
/// composition of length <= rows with parts <= cols) against brute force.
/// Work is spread over `jobs` threads; the report does not depend on `jobs`.
SweepReport run_sweep(const SweepOptions& options);

struct ShuffleReport {
  std::size_t chains = 0;
  std::size_t total_moves = 0;
  std::size_t inversions_removed = 0;
  std::vector<std::string> violations;
};

/// Samples `chains` random elementary chains, each a random walk from a root
/// drawn uniformly from `roots`, and checks that shuffle_chain keeps endpoints
/// and length and leaves no move inversion. Deterministic for a given seed.
ShuffleReport run_shuffle_check(const std::vector<Diagram>& roots, std::size_t chains, std::uint64_t seed);

std::string render_report(const SweepReport& report);
nlohmann::json report_to_json(const SweepReport& report);

}  // namespace kohnert
