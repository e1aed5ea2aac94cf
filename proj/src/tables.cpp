#include "monocurve/tables.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "monocurve/curve.hpp"

namespace monocurve {

namespace {

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::string pair(std::int64_t x, std::int64_t y) { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }

const std::vector<std::vector<std::int64_t>> kTable2{
    {1, 4, 21, 85}, {1, 5, 11, 46}, {12, 17, 20, 29}, {45, 46, 65, 121},
    {3, 4, 17, 55}, {4, 10, 21, 61}, {25, 35, 44, 123}};
const std::vector<std::vector<std::int64_t>> kTable3{
    {2, 10, 22, 57}, {2, 7, 12, 14}, {39, 58, 68, 129, 158}};

TextTable table1() {
  const CurveSpec c({5, 9, 11, 20});
  const WProfile w = build_profile(c);
  TextTable t;
  t.header = {"i", "w", "deg", "delta", "I"};
  for (std::int64_t i = 1; i < c.d(); ++i) {
    if (c.is_inner(i)) continue;
    const WEntry& e = w.entries[static_cast<std::size_t>(i)];
    t.rows.push_back({std::to_string(i), pair(e.w.u1, e.w.u2), std::to_string(e.deg), pair(e.d1, e.d2),
                      e.in_I ? std::to_string(i) : ""});
  }
  return t;
}

std::vector<std::string> curve_row(const std::vector<std::int64_t>& gens, bool with_buchsbaum) {
  const CurveSpec c(gens);
  const CohomologyProfile p = first_cohomology(c);
  std::vector<std::string> row{"(" + join(gens) + ")", join(p.I)};
  if (with_buchsbaum) row.push_back(p.buchsbaum ? "Yes" : "No");
  row.push_back(std::to_string(p.ell_h1));
  row.push_back(p.a1 ? std::to_string(*p.a1) : "");
  row.push_back(std::to_string(p.a2));
  row.push_back(std::to_string(p.reg));
  return row;
}

std::size_t list_size(const std::string& cell) {
  if (cell.empty()) return 0;
  return static_cast<std::size_t>(std::count(cell.begin(), cell.end(), ',')) + 1;
}

// Golden cells of the form "#I=n" give only the size of the index set.
bool cells_match(const std::string& column, const std::string& golden, const std::string& computed) {
  if (column == "I" && golden.rfind("#I=", 0) == 0) return golden.substr(3) == std::to_string(list_size(computed));
  return golden == computed;
}

}  // namespace

const std::vector<KnownDiscrepancy>& known_discrepancies() {
  static const std::vector<KnownDiscrepancy> list{
      {1, "1", "deg", "2", "3",
       "w_1 = (21,39) has degree 60/20 = 3; degree 2 would also put 1 in I since delta = (3,3)"},
      {1, "15", "I", "4", "",
       "delta_1 = 3 equals deg = 3, so 15 is not in I; the row is otherwise identical and I = {4}"},
      {2, "(1,4,21,85)", "I", "20,41,63,62,83", "20,41,62,83",
       "five entries contradict ell = 4 in the same row (the w_i, i in I, lie in L'); 63 is not in I"},
  };
  return list;
}

bool TableDiff::ok() const {
  if (!structural.empty()) return false;
  return std::all_of(cells.begin(), cells.end(), [](const CellDiff& c) { return c.known != nullptr; });
}

std::vector<std::string> parse_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quote in CSV line: " + line);
  out.push_back(cur);
  return out;
}

TextTable parse_csv(const std::string& text) {
  TextTable t;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line == "\r") continue;
    if (first) {
      t.header = parse_csv_line(line);
      first = false;
    } else {
      t.rows.push_back(parse_csv_line(line));
    }
  }
  return t;
}

std::string render_csv(const TextTable& t) {
  auto cell = [](const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  };
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << cell(r[i]);
    os << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return os.str();
}

std::string render_pretty(const TextTable& t) {
  std::vector<std::size_t> width(t.header.size(), 0);
  auto measure = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
  };
  measure(t.header);
  for (const auto& r : t.rows) measure(r);
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) {
      s += r[i];
      if (i + 1 < r.size()) s += std::string(width[i] - r[i].size() + 2, ' ');
    }
    os << s << '\n';
  };
  line(t.header);
  std::size_t total = 0;
  for (auto w : width) total += w + 2;
  os << std::string(total > 2 ? total - 2 : 0, '-') << '\n';
  for (const auto& r : t.rows) line(r);
  return os.str();
}

TextTable compute_table(int which) {
  switch (which) {
    case 1: return table1();
    case 2: {
      TextTable t;
      t.header = {"curve", "I", "buchsbaum", "ell", "a1", "a2", "reg"};
      for (const auto& g : kTable2) t.rows.push_back(curve_row(g, true));
      return t;
    }
    case 3: {
      TextTable t;
      t.header = {"curve", "I", "ell", "a1", "a2", "reg"};
      for (const auto& g : kTable3) t.rows.push_back(curve_row(g, false));
      return t;
    }
  }
  throw std::out_of_range("no table " + std::to_string(which));
}

TableDiff diff_tables(int which, const TextTable& golden, const TextTable& computed) {
  TableDiff diff;
  if (golden.header != computed.header) {
    diff.structural.push_back("header differs: golden " + join(golden.header) + ", computed " + join(computed.header));
    return diff;
  }
  for (const auto& g : golden.rows) {
    if (g.size() != golden.header.size()) {
      diff.structural.push_back("golden row " + (g.empty() ? std::string() : g[0]) + " has the wrong number of cells");
      continue;
    }
    auto it = std::find_if(computed.rows.begin(), computed.rows.end(),
                           [&](const std::vector<std::string>& r) { return r[0] == g[0]; });
    if (it == computed.rows.end()) {
      diff.structural.push_back("row " + g[0] + " missing from computed table");
      continue;
    }
    for (std::size_t col = 1; col < g.size(); ++col) {
      if (cells_match(golden.header[col], g[col], (*it)[col])) continue;
      CellDiff d{g[0], golden.header[col], g[col], (*it)[col], nullptr};
      for (const auto& k : known_discrepancies())
        if (k.table == which && k.row_key == d.row_key && k.column == d.column && k.golden == d.golden &&
            k.computed == d.computed)
          d.known = &k;
      diff.cells.push_back(d);
    }
  }
  for (const auto& r : computed.rows) {
    const bool present = std::any_of(golden.rows.begin(), golden.rows.end(),
                                     [&](const std::vector<std::string>& g) { return !g.empty() && g[0] == r[0]; });
    if (!present) diff.structural.push_back("computed row " + r[0] + " absent from golden table");
  }
  return diff;
}

TableResult run_table(int which) {
  TableResult r;
  r.which = which;
  r.computed = compute_table(which);
  r.golden = parse_csv(golden_csv(which));
  r.diff = diff_tables(which, r.golden, r.computed);
  return r;
}

}  // namespace monocurve
