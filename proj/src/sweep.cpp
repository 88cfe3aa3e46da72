#include "kohnert/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iomanip>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "kohnert/criteria.hpp"
#include "kohnert/error.hpp"
#include "kohnert/polynomial.hpp"
#include "kohnert/tableau.hpp"

namespace kohnert {

namespace {

struct WeightHash {
  std::size_t operator()(const WeakComposition& w) const noexcept {
    std::size_t h = w.size();
    for (int x : w) h = h * 31 + static_cast<std::size_t>(x);
    return h;
  }
};

using ByColumnWeight = std::unordered_map<WeakComposition, std::vector<Diagram>, WeightHash>;

std::string diagram_text(const Diagram& d) {
  std::string out = "{";
  for (const Cell& c : d.cells()) {
    if (out.size() > 1) out += ",";
    out += "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
  }
  return out + "}";
}

std::string composition_text(const WeakComposition& alpha) {
  std::string out = "(";
  for (std::size_t i = 0; i < alpha.size(); ++i) out += (i ? "," : "") + std::to_string(alpha[i]);
  return out + ")";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Outcome of checking one subject; merged in subject order afterwards.
struct Partial {
  std::vector<std::pair<std::string, bool>> checks;  // property, passed
  std::vector<Mismatch> mismatches;
  bool strict_refinement = false;

  void record(const std::string& subject, const std::string& property, bool criterion, bool brute) {
    checks.emplace_back(property, criterion == brute);
    if (criterion != brute) mismatches.push_back({subject, property, yes_no(criterion), yes_no(brute)});
  }
};

bool wants(const SweepOptions& o, SweepProperty p) {
  return std::find(o.properties.begin(), o.properties.end(), p) != o.properties.end();
}

Partial check_diagram(const Diagram& d0, const SweepOptions& o, const ByColumnWeight& candidates) {
  Partial out;
  const std::string subject = diagram_text(d0);
  const KohnertPoset p = build_poset(d0, false, o.max_nodes);

  if (wants(o, SweepProperty::Mmf)) {
    out.record(subject, "mmf", !mmf_pattern(d0).has_value(),
               is_monomial_multiplicity_free(kohnert_polynomial(p)).first);
  }
  if (wants(o, SweepProperty::Ranked)) out.record(subject, "ranked", !ranked_pattern(d0).has_value(), is_ranked(p));
  if (wants(o, SweepProperty::Bounded)) {
    out.record(subject, "bounded", !bounded_pattern(d0).has_value(), is_bounded(p));
  }
  if (wants(o, SweepProperty::Refinement)) {
    const KohnertPoset ele = build_poset(d0, true, o.max_nodes);
    out.record(subject, "refinement", true, equal_as_sets(p, ele) && is_refinement(ele, p));
    out.strict_refinement = !is_refinement(p, ele);
  }
  if (wants(o, SweepProperty::Membership)) {
    const auto it = candidates.find(column_weight(d0));
    if (it != candidates.end()) {
      for (const Diagram& d : it->second) {
        const bool test = membership_test(d, d0);
        const bool brute = p.contains(d);
        out.checks.emplace_back("membership", test == brute);
        if (test != brute) {
          out.mismatches.push_back({diagram_text(d) + " in P" + subject, "membership", yes_no(test), yes_no(brute)});
        }
      }
    }
  }
  return out;
}

Partial check_composition(const WeakComposition& alpha, const SweepOptions& o) {
  Partial out;
  const std::string subject = "lock" + composition_text(alpha);
  const Diagram d = lock_diagram(alpha);
  const KohnertPoset p = build_poset(d, false, o.max_nodes);
  const bool mmf = is_monomial_multiplicity_free(kohnert_polynomial(p)).first;
  const bool ranked = is_ranked(p);
  const bool bounded = is_bounded(p);

  out.record(subject, "lock-mmf", lock_mmf(alpha), mmf);
  out.record(subject, "lock-mmf-general", !mmf_pattern(d).has_value(), mmf);
  out.record(subject, "lock-ranked", lock_ranked(alpha), ranked);
  out.record(subject, "lock-ranked-general", !ranked_pattern(d).has_value(), ranked);
  out.record(subject, "lock-bounded", lock_bounded(alpha), bounded);
  out.record(subject, "lock-bounded-general", !bounded_pattern(d).has_value(), bounded);
  out.record(subject, "lock-ranked-and-bounded", lock_ranked_and_bounded(alpha), ranked && bounded);
  return out;
}

// Runs f(i) for i in [0, n) on `jobs` threads; results keep index order.
template <typename F>
std::vector<Partial> parallel_map(std::size_t n, unsigned jobs, F f) {
  std::vector<Partial> results(n);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        results[i] = f(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = n;
      }
    }
  };
  const unsigned count = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

void merge(SweepReport& report, std::vector<Partial>& parts) {
  for (Partial& part : parts) {
    for (const auto& [property, passed] : part.checks) {
      ++report.checks[property];
      report.failures[property] += passed ? 0 : 1;
    }
    if (part.strict_refinement) ++report.strict_refinements;
    std::move(part.mismatches.begin(), part.mismatches.end(), std::back_inserter(report.mismatches));
  }
}

}  // namespace

std::string_view to_string(SweepProperty p) noexcept {
  switch (p) {
    case SweepProperty::Mmf: return "mmf";
    case SweepProperty::Ranked: return "ranked";
    case SweepProperty::Bounded: return "bounded";
    case SweepProperty::Refinement: return "refinement";
    case SweepProperty::Membership: return "membership";
    case SweepProperty::Lock: return "lock";
  }
  return "unknown";
}

std::vector<SweepProperty> all_properties() {
  return {SweepProperty::Mmf,        SweepProperty::Ranked,     SweepProperty::Bounded,
          SweepProperty::Refinement, SweepProperty::Membership, SweepProperty::Lock};
}

SweepProperty parse_property(std::string_view name) {
  for (SweepProperty p : all_properties()) {
    if (to_string(p) == name) return p;
  }
  throw KohnertError(ErrorCode::ParseError, "unknown property '" + std::string(name) + "'");
}

SweepReport run_sweep(const SweepOptions& o) {
  const auto start = std::chrono::steady_clock::now();
  SweepReport report;
  report.rows = o.rows;
  report.cols = o.cols;

  EnumerateOptions enumerate;
  enumerate.normalized_only = !o.include_empty_columns;
  enumerate.max_positions = o.max_positions;

  const bool diagram_checks = std::any_of(o.properties.begin(), o.properties.end(),
                                          [](SweepProperty p) { return p != SweepProperty::Lock; });
  if (diagram_checks) {
    const std::vector<Diagram> roots =
        enumerate_diagrams(o.rows, o.cols, [](const Diagram& d) { return is_northeast(d); }, enumerate);
    ByColumnWeight candidates;
    if (wants(o, SweepProperty::Membership)) {
      EnumerateOptions every = enumerate;
      every.normalized_only = false;
      for_each_diagram(o.rows, o.cols, {}, [&](const Diagram& d) { candidates[column_weight(d)].push_back(d); }, every);
    }
    auto parts = parallel_map(roots.size(), o.jobs,
                              [&](std::size_t i) { return check_diagram(roots[i], o, candidates); });
    report.diagrams_checked = roots.size();
    merge(report, parts);
  }

  if (wants(o, SweepProperty::Lock)) {
    const std::vector<WeakComposition> alphas = enumerate_compositions(o.rows, o.cols);
    auto parts = parallel_map(alphas.size(), o.jobs, [&](std::size_t i) { return check_composition(alphas[i], o); });
    report.compositions_checked = alphas.size();
    merge(report, parts);
  }

  report.wall_time = std::chrono::steady_clock::now() - start;
  return report;
}

ShuffleReport run_shuffle_check(const std::vector<Diagram>& roots, std::size_t chains, std::uint64_t seed) {
  ShuffleReport report;
  if (roots.empty()) return report;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_root(0, roots.size() - 1);
  for (std::size_t n = 0; n < chains; ++n) {
    const Diagram& root = roots[pick_root(rng)];
    std::vector<int> rows;
    Diagram current = root;
    while (true) {
      std::vector<int> options;
      for (const auto& [next, move] : kohnert_successors(current)) {
        if (move.elementary) options.push_back(move.source_row);
      }
      // Stop with probability 1/(options+1) so walks reach varied depths.
      std::uniform_int_distribution<std::size_t> step(0, options.size());
      const std::size_t k = step(rng);
      if (k == options.size()) break;
      rows.push_back(options[k]);
      current = apply_kohnert_move(current, options[k])->first;
    }
    const Chain chain = chain_from_rows(root, rows);
    const Chain shuffled = shuffle_chain(chain, root);
    ++report.chains;
    report.total_moves += chain.moves.size();
    report.inversions_removed += static_cast<std::size_t>(move_inversions(chain, root));
    std::string problem;
    if (shuffled.diagrams.front() != chain.diagrams.front() || shuffled.diagrams.back() != chain.diagrams.back()) {
      problem = "endpoints differ";
    } else if (shuffled.moves.size() != chain.moves.size()) {
      problem = "length differs";
    } else if (move_inversions(shuffled, root) != 0) {
      problem = "inversions remain";
    }
    if (!problem.empty()) report.violations.push_back(diagram_text(root) + ": " + problem);
  }
  return report;
}

std::string render_report(const SweepReport& r) {
  std::ostringstream out;
  out << "box " << r.rows << "x" << r.cols << ": " << r.diagrams_checked << " northeast diagrams, "
      << r.compositions_checked << " compositions, " << std::fixed << std::setprecision(2)
      << r.wall_time.count() << " s\n";
  out << std::left << std::setw(26) << "property" << std::right << std::setw(10) << "checks" << std::setw(12)
      << "mismatches" << "\n";
  for (const auto& [property, count] : r.checks) {
    out << std::left << std::setw(26) << property << std::right << std::setw(10) << count << std::setw(12)
        << r.failures.at(property) << "\n";
  }
  if (r.checks.count("refinement")) out << "strict refinements: " << r.strict_refinements << "\n";
  for (const Mismatch& m : r.mismatches) {
    out << "MISMATCH " << m.property << " " << m.subject << ": criterion=" << m.criterion_answer
        << " brute-force=" << m.brute_force_answer << "\n";
  }
  out << (r.mismatches.empty() ? "OK" : "FAILED") << ": " << r.mismatches.size() << " mismatches\n";
  return out.str();
}

nlohmann::json report_to_json(const SweepReport& r) {
  nlohmann::json mismatches = nlohmann::json::array();
  for (const Mismatch& m : r.mismatches) {
    mismatches.push_back({{"subject", m.subject},
                          {"property", m.property},
                          {"criterion", m.criterion_answer},
                          {"brute_force", m.brute_force_answer}});
  }
  return {{"box", {r.rows, r.cols}},
          {"diagrams_checked", r.diagrams_checked},
          {"compositions_checked", r.compositions_checked},
          {"checks", r.checks},
          {"failures", r.failures},
          {"strict_refinements", r.strict_refinements},
          {"mismatches", std::move(mismatches)},
          {"wall_time_seconds", r.wall_time.count()}};
}

}  // namespace kohnert
