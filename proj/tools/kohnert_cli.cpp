// Command-line front end for the kohnert library.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "kohnert/criteria.hpp"
#include "kohnert/error.hpp"
#include "kohnert/io.hpp"
#include "kohnert/polynomial.hpp"
#include "kohnert/poset.hpp"
#include "kohnert/sweep.hpp"

namespace {

using namespace kohnert;
using nlohmann::json;

constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitBound = 4;

struct Globals {
  std::string input;
  std::string format;
  std::string out;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t seed = 20240611;
  std::size_t max_nodes = 0;
};

std::size_t resolve_max_nodes(const Globals& g) {
  if (g.max_nodes > 0) return g.max_nodes;
  if (const char* env = std::getenv("KOHNERT_MAX_NODES")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw KohnertError(ErrorCode::ParseError, "KOHNERT_MAX_NODES is not a number");
    }
  }
  return kDefaultMaxNodes;
}

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(g.out);
  if (!file) throw std::runtime_error("cannot write " + g.out);
  file << text;
}

Diagram load(const Globals& g, const std::string& positional) {
  const std::string& path = positional.empty() ? g.input : positional;
  if (path.empty()) throw KohnertError(ErrorCode::ParseError, "no input diagram (give a file or --input)");
  Diagram d = path == "-" ? parse_diagram(std::string(std::istreambuf_iterator<char>(std::cin), {}))
                          : read_diagram_file(path);
  if (d.empty()) std::cerr << "warning: empty diagram\n";
  return d;
}

std::string composition_text(const WeakComposition& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + std::to_string(w[i]);
  return out + ")";
}

std::string cells_text(const std::vector<Cell>& cells) {
  std::string out;
  for (const Cell& c : cells) {
    if (!out.empty()) out += ",";
    out += "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
  }
  return out;
}

std::string verdict(const std::optional<PatternWitness>& w) {
  return w ? "NO, witness " + cells_text(w->cells) : "yes";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// classify

int run_classify(const Globals& g, const std::string& file, bool require_ne) {
  const Diagram d = load(g, file);
  const bool ne = is_northeast(d);
  if (require_ne && !ne) throw KohnertError(ErrorCode::NotNortheast, "diagram is not northeast");

  std::optional<PatternWitness> mmf, ranked, bounded;
  if (ne) {
    mmf = mmf_pattern(d);
    ranked = ranked_pattern(d);
    bounded = bounded_pattern(d);
  }
  if (g.format == "json") {
    json out = {{"cells", cells_to_json(d)},
                {"row_weight", row_weight(d)},
                {"column_weight", column_weight(d)},
                {"northeast", ne},
                {"southeast", is_southeast(d)},
                {"lock", is_lock(d)}};
    if (ne) {
      const auto entry = [&](const std::optional<PatternWitness>& w) {
        return w ? json{{"holds", false}, {"witness", witness_to_json(d, *w)}} : json{{"holds", true}};
      };
      out["multiplicity_free"] = entry(mmf);
      out["ranked"] = entry(ranked);
      out["bounded"] = entry(bounded);
    }
    emit(g, out.dump(2) + "\n");
    return 0;
  }
  std::ostringstream out;
  out << render_grid(d) << "cells: " << d.size() << "\n"
      << "rwt: " << composition_text(row_weight(d)) << "\n"
      << "cwt: " << composition_text(column_weight(d)) << "\n"
      << "northeast: " << yes_no(ne) << "\n"
      << "southeast: " << yes_no(is_southeast(d)) << "\n"
      << "lock: " << yes_no(is_lock(d)) << "\n";
  if (ne) {
    out << "multiplicity-free: " << verdict(mmf) << "\n"
        << "ranked: " << verdict(ranked) << "\n"
        << "bounded: " << verdict(bounded) << "\n";
  } else {
    out << "criteria: not applicable to a non-northeast diagram\n";
  }
  emit(g, out.str());
  return 0;
}

// poset

int run_poset(const Globals& g, const std::string& file, bool elementary, bool stats, bool label_moves) {
  const Diagram d = load(g, file);
  const KohnertPoset p = build_poset(d, elementary, resolve_max_nodes(g));
  if (stats) {
    emit(g, "nodes=" + std::to_string(p.size()) + " covers=" + std::to_string(p.cover_edges().size()) +
                " minimal=" + std::to_string(minimal_indices(p).size()) + "\n");
  } else if (g.format == "json") {
    emit(g, poset_to_json(p).dump(2) + "\n");
  } else if (g.format == "text") {
    std::ostringstream out;
    for (std::size_t i = 0; i < p.size(); ++i) out << "node " << i << "\n" << render_grid(p.nodes()[i]);
    for (const CoverEdge& e : p.cover_edges()) out << e.from << " > " << e.to << "\n";
    emit(g, out.str());
  } else {
    emit(g, poset_to_dot(p, label_moves));
  }
  return 0;
}

// poly

int run_poly(const Globals& g, const std::string& file) {
  const Diagram d = load(g, file);
  const KohnertPolynomial f = kohnert_polynomial(build_poset(d, false, resolve_max_nodes(g)));
  const auto [free, witness] = is_monomial_multiplicity_free(f);
  if (g.format == "json") {
    json out = {{"terms", polynomial_to_json(f)}, {"multiplicity_free", free}};
    if (witness) out["witness"] = {{"exponents", *witness}, {"coefficient", f.at(*witness)}};
    emit(g, out.dump(2) + "\n");
    return 0;
  }
  std::string text = render_polynomial(f) + "\nmultiplicity-free: ";
  text += free ? std::string("yes")
               : "NO (witness monomial " + render_monomial(*witness) + ", coefficient " +
                     std::to_string(f.at(*witness)) + ")";
  emit(g, text + "\n");
  return 0;
}

// verify

struct VerifyArgs {
  int rows = 3;
  int cols = 3;
  std::string properties = "all";
  bool json = false;
  bool allow_large = false;
  bool normalized_only = false;
  std::size_t chains = 0;
};

int run_verify(const Globals& g, const VerifyArgs& a) {
  SweepOptions o;
  o.rows = a.rows;
  o.cols = a.cols;
  o.jobs = g.jobs;
  o.include_empty_columns = !a.normalized_only;
  o.max_nodes = resolve_max_nodes(g);
  if (a.properties != "all") {
    o.properties.clear();
    std::stringstream list(a.properties);
    for (std::string name; std::getline(list, name, ',');) o.properties.push_back(parse_property(name));
  }
  if (a.allow_large) {
    o.max_positions = 40;
    if (a.rows * a.cols > 25) {
      std::cerr << "warning: " << a.rows * a.cols << " positions means 2^" << a.rows * a.cols
                << " subsets to enumerate\n";
    }
  }
  const SweepReport report = run_sweep(o);
  bool ok = report.mismatches.empty();
  json out = report_to_json(report);
  std::string text = render_report(report);

  if (a.chains > 0) {
    const auto roots =
        enumerate_diagrams(o.rows, o.cols, [](const Diagram& d) { return is_northeast(d); },
                           {.normalized_only = a.normalized_only, .max_positions = o.max_positions});
    const ShuffleReport shuffle = run_shuffle_check(roots, a.chains, g.seed);
    ok = ok && shuffle.violations.empty();
    out["shuffle"] = {{"chains", shuffle.chains},
                      {"seed", g.seed},
                      {"total_moves", shuffle.total_moves},
                      {"inversions_removed", shuffle.inversions_removed},
                      {"violations", shuffle.violations}};
    text += "shuffle: " + std::to_string(shuffle.chains) + " chains (seed " + std::to_string(g.seed) + "), " +
            std::to_string(shuffle.inversions_removed) + " inversions removed, " +
            std::to_string(shuffle.violations.size()) + " violations\n";
    for (const std::string& v : shuffle.violations) text += "VIOLATION shuffle " + v + "\n";
  }
  emit(g, a.json || g.format == "json" ? out.dump(2) + "\n" : text);
  return ok ? 0 : kExitFailure;
}

// lock

int run_lock(const Globals& g, const std::string& alpha_text, const std::string& check) {
  const WeakComposition alpha = parse_composition(alpha_text);
  const Diagram d = lock_diagram(alpha);
  const bool all = check == "all";

  std::ostringstream out;
  json report = {{"alpha", alpha}, {"cells", cells_to_json(d)}};
  out << "alpha: " << composition_text(alpha) << "\n" << render_grid(d);
  bool agree = true;
  const auto line = [&](const std::string& name, bool corollary, const std::optional<PatternWitness>& general) {
    agree = agree && corollary == !general.has_value();
    out << name << ": " << (corollary ? "yes" : "NO") << " (corollary " << yes_no(corollary) << ", general "
        << verdict(general) << ")\n";
    report[name] = {{"corollary", corollary}, {"general", !general.has_value()}};
  };
  if (all || check == "mmf") line("multiplicity-free", lock_mmf(alpha), mmf_pattern(d));
  if (all || check == "ranked") line("ranked", lock_ranked(alpha), ranked_pattern(d));
  if (all || check == "bounded") line("bounded", lock_bounded(alpha), bounded_pattern(d));
  if (all) {
    const bool both = lock_ranked_and_bounded(alpha);
    out << "ranked and bounded: " << (both ? "yes" : "NO") << "\n";
    report["ranked_and_bounded"] = both;
  }
  emit(g, g.format == "json" ? report.dump(2) + "\n" : out.str());
  if (!agree) {
    std::cerr << "error: corollary and general criterion disagree\n";
    return kExitFailure;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kohnert diagrams: posets, polynomials and classification criteria"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--input", g.input, "Diagram file (.kd); '-' reads stdin");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"dot", "json", "text"}));
  app.add_option("--out", g.out, "Write output to FILE instead of stdout");
  app.add_option("--jobs", g.jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for randomized checks");
  app.add_option("--max-nodes", g.max_nodes, "Poset size bound (default 200000, or KOHNERT_MAX_NODES)");

  std::string file;
  bool require_ne = false;
  auto* classify = app.add_subcommand("classify", "Report weights, shape flags and criteria verdicts");
  classify->add_option("file", file, "Diagram file");
  classify->add_flag("--require-ne", require_ne, "Fail with exit code 3 unless the diagram is northeast");

  bool elementary = false, stats = false, label_moves = false;
  auto* poset = app.add_subcommand("poset", "Export the Kohnert poset");
  poset->add_option("file", file, "Diagram file");
  poset->add_flag("--elementary", elementary, "Use elementary moves only");
  poset->add_flag("--stats", stats, "Print node, cover and minimal-element counts");
  poset->add_flag("--label-moves", label_moves, "Annotate DOT edges with move rows");

  auto* poly = app.add_subcommand("poly", "Print the Kohnert polynomial");
  poly->add_option("file", file, "Diagram file");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check criteria against brute force over a box");
  verify->add_option("--rows", verify_args.rows, "Box height")->check(CLI::Range(1, 40));
  verify->add_option("--cols", verify_args.cols, "Box width")->check(CLI::Range(1, 40));
  verify->add_option("--properties", verify_args.properties,
                     "Comma-separated subset of mmf,ranked,bounded,refinement,membership,lock, or all");
  verify->add_flag("--json", verify_args.json, "Print the report as JSON");
  verify->add_flag("--allow-large", verify_args.allow_large, "Allow boxes of up to 40 positions");
  verify->add_flag("--normalized-only", verify_args.normalized_only, "Skip diagrams with interior empty columns");
  verify->add_option("--chains", verify_args.chains, "Also shuffle this many random elementary chains");

  std::string alpha, check = "all";
  auto* lock = app.add_subcommand("lock", "Classify the lock diagram of a weak composition");
  lock->add_option("--alpha", alpha, "Composition, e.g. 1,3,1,0,2")->required();
  lock->add_option("--check", check, "Property to check")->check(CLI::IsMember({"all", "mmf", "ranked", "bounded"}));

  for (auto* sub : {classify, poset, poly, verify, lock}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*classify) return run_classify(g, file, require_ne);
    if (*poset) return run_poset(g, file, elementary, stats, label_moves);
    if (*poly) return run_poly(g, file);
    if (*verify) return run_verify(g, verify_args);
    if (*lock) return run_lock(g, alpha, check);
  } catch (const KohnertError& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::ParseError:
      case ErrorCode::InvalidCoordinate: return kExitParse;
      case ErrorCode::BoundExceeded: return kExitBound;
      default: return kExitPrecondition;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}
