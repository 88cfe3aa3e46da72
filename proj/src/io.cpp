#include "kohnert/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "kohnert/error.hpp"

namespace kohnert {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_int(std::string_view token, int& out) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw KohnertError(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

json cell_list(std::span<const Cell> cells) {
  json out = json::array();
  for (const Cell& c : cells) out.push_back({c.row, c.col});
  return out;
}

// Grid over rows `rows`..1 and columns 1..`cols`; `text` gives a cell's glyph.
template <typename F>
std::string grid(const Diagram& d, int rows, int cols, std::size_t width, F text) {
  std::string out;
  for (int r = std::max(rows, d.max_row()); r >= 1; --r) {
    for (int c = 1; c <= std::max(cols, d.max_col()); ++c) {
      std::string glyph = d.contains({r, c}) ? text(Cell{r, c}) : ".";
      if (c > 1 && width > 1) out += ' ';
      out += std::string(width - std::min(width, glyph.size()), ' ') + glyph;
    }
    out += '\n';
  }
  return out;
}

}  // namespace

Diagram parse_diagram(std::string_view text) {
  std::vector<Cell> cells;
  std::set<Cell> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto gap = line.find_first_of(" \t");
    if (gap == std::string_view::npos) parse_fail(line_no, "expected two integers 'r c'");
    int row = 0;
    int col = 0;
    if (!parse_int(line.substr(0, gap), row) || !parse_int(trim(line.substr(gap)), col)) {
      parse_fail(line_no, "expected two integers 'r c', got '" + std::string(line) + "'");
    }
    if (row < 1 || col < 1) parse_fail(line_no, "coordinates must be positive");
    if (!seen.insert({row, col}).second) {
      parse_fail(line_no, "duplicate cell " + std::to_string(row) + " " + std::to_string(col));
    }
    cells.push_back({row, col});
  }
  return Diagram::from_cells(std::span<const Cell>(cells));
}

Diagram read_diagram_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw KohnertError(ErrorCode::ParseError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_diagram(buf.str());
}

std::string write_diagram(const Diagram& d) {
  std::string out = "# rows 1-indexed bottom-to-top, columns left-to-right\n";
  for (const Cell& c : d.cells()) out += std::to_string(c.row) + " " + std::to_string(c.col) + "\n";
  return out;
}

WeakComposition parse_composition(std::string_view text) {
  WeakComposition alpha;
  text = trim(text);
  if (text.empty()) return alpha;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view token = trim(text.substr(0, comma));
    int part = 0;
    if (!parse_int(token, part) || part < 0) {
      throw KohnertError(ErrorCode::ParseError,
                         "composition parts must be non-negative integers, got '" + std::string(token) + "'");
    }
    alpha.push_back(part);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return alpha;
}

std::string render_grid(const Diagram& d, int min_rows, int min_cols) {
  return grid(d, min_rows, min_cols, 1, [](Cell) { return std::string("O"); });
}

std::string render_tableau(const Tableau& t) {
  std::size_t width = 1;
  for (int label : t.labels()) width = std::max(width, std::to_string(label).size());
  return grid(t.diagram(), 0, 0, width, [&](Cell c) { return std::to_string(t.label(c)); });
}

json cells_to_json(const Diagram& d) { return cell_list(d.cells()); }

json poset_to_json(const KohnertPoset& p) {
  json nodes = json::array();
  for (const Diagram& d : p.nodes()) nodes.push_back(cells_to_json(d));
  json moves = json::array();
  for (const MoveEdge& e : p.move_edges()) {
    moves.push_back({{"from", e.from}, {"to", e.to}, {"row", e.move.source_row}, {"elementary", e.move.elementary}});
  }
  json covers = json::array();
  for (const CoverEdge& e : p.cover_edges()) covers.push_back({{"from", e.from}, {"to", e.to}});
  return {{"root", cells_to_json(p.root())},
          {"nodes", std::move(nodes)},
          {"move_edges", std::move(moves)},
          {"cover_edges", std::move(covers)},
          {"minimal", minimal_indices(p)},
          {"ranked", is_ranked(p)},
          {"bounded", is_bounded(p)}};
}

std::string poset_to_dot(const KohnertPoset& p, bool label_moves) {
  std::ostringstream out;
  out << "digraph kohnert {\n  rankdir=TB;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::string label = render_grid(p.nodes()[i], p.root().max_row(), p.root().max_col());
    std::string escaped;
    for (char ch : label) escaped += ch == '\n' ? std::string("\\l") : std::string(1, ch);
    if (escaped.empty()) escaped = "(empty)";
    out << "  n" << i << " [label=\"" << escaped << "\"];\n";
  }
  for (const CoverEdge& e : p.cover_edges()) {
    out << "  n" << e.from << " -> n" << e.to;
    if (label_moves) {
      for (std::size_t m : p.out_moves(e.from)) {
        const MoveEdge& move = p.move_edges()[m];
        if (move.to == e.to) {
          out << " [label=\"" << move.move.source_row << "\"]";
          break;
        }
      }
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

json polynomial_to_json(const KohnertPolynomial& f) {
  json out = json::array();
  for (const auto& [exponents, coefficient] : f) {
    out.push_back({{"exponents", exponents}, {"coefficient", coefficient}});
  }
  return out;
}

json witness_to_json(const Diagram& d, const PatternWitness& w) {
  json clauses = json::object();
  for (const auto& [name, holds] : evaluate_clauses(d, w.kind, w.cells)) clauses[std::string(1, name)] = holds;
  return {{"kind", std::string(to_string(w.kind))}, {"cells", cell_list(w.cells)}, {"clauses", std::move(clauses)}};
}

}  // namespace kohnert
