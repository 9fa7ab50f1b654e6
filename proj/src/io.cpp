#include "symplectica/io.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace symplectica {

json to_json(const LaurentPoly& p) {
  json out = json::array();
  const Integer lo = std::numeric_limits<std::int64_t>::min(), hi = std::numeric_limits<std::int64_t>::max();
  for (const auto& [e, c] : p.terms()) {
    if (c >= lo && c <= hi) {
      out.push_back({e, static_cast<std::int64_t>(c)});
    } else {
      out.push_back({e, c.str()});
    }
  }
  return out;
}

LaurentPoly laurent_from_json(const json& j) {
  if (j.is_string()) return parse_laurent(j.get<std::string>());
  LaurentPoly out;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) throw std::invalid_argument("polynomial term must be [exponent, coefficient]");
    const int e = term[0].get<int>();
    Integer c = term[1].is_string() ? Integer(term[1].get<std::string>()) : Integer(term[1].get<std::int64_t>());
    out += LaurentPoly::monomial(e, c);
  }
  return out;
}

json to_json(const Tabloid& t) {
  json out = json::array();
  for (const auto& c : t.columns) {
    json col = json::array();
    for (Letter x : c.letters()) col.push_back(to_string(x));
    out.push_back(std::move(col));
  }
  return out;
}

Tabloid tabloid_from_json(const json& j) {
  Tabloid t;
  for (const auto& col : j) {
    std::vector<Letter> letters;
    for (const auto& x : col) letters.push_back(x.is_number() ? Letter(x.get<int>()) : parse_letter(x.get<std::string>()));
    t.columns.emplace_back(std::move(letters));
  }
  return t;
}

json to_json(const WVector& v) {
  json out = json::array();
  for (const auto& [t, c] : v.entries()) out.push_back({{"tabloid", to_json(t)}, {"poly", to_json(c)}});
  return out;
}

WVector wvector_from_json(const json& j, int rank) {
  WVector v(rank);
  for (const auto& term : j) v.add(key_of(tabloid_from_json(term.at("tabloid")), rank), laurent_from_json(term.at("poly")));
  return v;
}

json to_json(const BasisMatrix& m) {
  json cols = json::array(), rows = json::array(), entries = json::array();
  for (const auto& t : m.columns) cols.push_back(to_json(t));
  for (const auto& t : m.rows) rows.push_back(to_json(t));
  for (std::size_t c = 0; c < m.entries.size(); ++c) {
    for (const auto& [r, d] : m.entries[c]) entries.push_back({{"row", r}, {"col", c}, {"d", to_json(d)}});
  }
  return {{"rank", m.rank},
          {"lambda", m.shape.lambda},
          {"weight", m.weight.content},
          {"order", m.descending ? "descending" : "ascending"},
          {"columns", std::move(cols)},
          {"rows", std::move(rows)},
          {"entries", std::move(entries)}};
}

BasisMatrix matrix_from_json(const json& j) {
  BasisMatrix m;
  m.rank = j.at("rank").get<int>();
  m.shape = Shape(j.at("lambda").get<std::vector<int>>());
  m.weight = Weight(j.at("weight").get<std::vector<int>>());
  m.descending = j.value("order", "ascending") == "descending";
  for (const auto& t : j.at("columns")) m.columns.push_back(tabloid_from_json(t));
  for (const auto& t : j.at("rows")) m.rows.push_back(tabloid_from_json(t));
  m.entries.resize(m.columns.size());
  for (const auto& e : j.at("entries")) {
    const auto c = e.at("col").get<std::size_t>(), r = e.at("row").get<std::size_t>();
    if (c >= m.columns.size() || r >= m.rows.size()) throw std::invalid_argument("matrix entry index out of range");
    m.entries[c].emplace_back(r, laurent_from_json(e.at("d")));
  }
  for (auto& col : m.entries) std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return m;
}

Format parse_format(std::string_view s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "latex") return Format::latex;
  if (s == "text") return Format::text;
  throw std::invalid_argument("unknown format: " + std::string(s));
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string latex_letter(Letter x) {
  return x.is_barred() ? "\\bar{" + std::to_string(x.index()) + "}" : std::to_string(x.index());
}

std::string latex_tabloid(const Tabloid& t) {
  std::size_t height = 0;
  for (const auto& c : t.columns) height = std::max(height, c.letters().size());
  std::string out = "\\begin{smallmatrix}";
  for (std::size_t r = 0; r < height; ++r) {
    if (r) out += " \\\\ ";
    bool first = true;
    for (const auto& c : t.columns) {
      if (r >= c.letters().size()) continue;
      if (!first) out += " & ";
      out += latex_letter(c.letters()[r]);
      first = false;
    }
  }
  return out + "\\end{smallmatrix}";
}

}  // namespace

std::string latex_poly(const LaurentPoly& p) {
  if (p.is_zero()) return ".";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (c < 0) {
      out += "-";
    } else if (!first) {
      out += "+";
    }
    first = false;
    if (e == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str();
    out += "q";
    if (e != 1) out += "^{" + std::to_string(e) + "}";
  }
  return out;
}

std::string to_csv(const BasisMatrix& m) {
  std::ostringstream out;
  out << "tabloid";
  for (const auto& c : m.columns) out << ',' << csv_field(to_string(c));
  out << '\n';
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    out << csv_field(to_string(m.rows[r]));
    for (std::size_t c = 0; c < m.columns.size(); ++c) out << ',' << to_string(m.at(r, c));
    out << '\n';
  }
  return out.str();
}

std::string to_latex(const BasisMatrix& m) {
  std::ostringstream out;
  out << "\\begin{array}{c|" << std::string(m.columns.size(), 'c') << "}\n";
  for (const auto& c : m.columns) out << " & " << latex_tabloid(c);
  out << " \\\\ \\hline\n";
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    const bool bold = std::find(m.columns.begin(), m.columns.end(), m.rows[r]) != m.columns.end();
    out << (bold ? "\\boldsymbol{" + latex_tabloid(m.rows[r]) + "}" : latex_tabloid(m.rows[r]));
    for (std::size_t c = 0; c < m.columns.size(); ++c) {
      auto d = m.at(r, c);
      out << " & " << (m.rows[r] == m.columns[c] ? "\\mathbf{" + latex_poly(d) + "}" : latex_poly(d));
    }
    out << " \\\\\n";
  }
  out << "\\end{array}\n";
  return out.str();
}

std::string to_text(const BasisMatrix& m) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back({""});
  for (std::size_t c = 0; c < m.columns.size(); ++c) cells[0].push_back("T" + std::to_string(c + 1));
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    std::vector<std::string> line{to_row_string(m.rows[r])};
    for (std::size_t c = 0; c < m.columns.size(); ++c) line.push_back(to_string(m.at(r, c)));
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(m.columns.size() + 1, 0);
  for (const auto& line : cells) {
    for (std::size_t k = 0; k < line.size(); ++k) width[k] = std::max(width[k], line[k].size());
  }
  std::ostringstream out;
  out << "n = " << m.rank << ", lambda = " << to_string(m.shape) << ", weight = " << to_string(m.weight) << '\n';
  for (std::size_t c = 0; c < m.columns.size(); ++c) out << "T" << c + 1 << " = " << to_row_string(m.columns[c]) << '\n';
  for (const auto& line : cells) {
    for (std::size_t k = 0; k < line.size(); ++k) {
      if (k) out << "  ";
      out << line[k] << std::string(width[k] - line[k].size(), ' ');
    }
    out << '\n';
  }
  return out.str();
}

std::string emit(const BasisMatrix& m, Format f) {
  switch (f) {
    case Format::json:
      return to_json(m).dump(1) + "\n";
    case Format::csv:
      return to_csv(m);
    case Format::latex:
      return to_latex(m);
    case Format::text:
      return to_text(m);
  }
  return {};
}

}  // namespace symplectica
