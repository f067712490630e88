#include "superhom/report_io.hpp"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace superhom {

using nlohmann::ordered_json;

OutputFormat parse_format(std::string_view s) {
  if (s == "text") return OutputFormat::text;
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown output format '" + std::string(s) + "'");
}

namespace {

// Right-aligned columns, first column left-aligned.
std::string aligned(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width;
  for (const auto& r : cells)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (width.size() <= c) width.resize(c + 1, 0);
      width[c] = std::max(width[c], r[c].size());
    }
  std::ostringstream os;
  for (const auto& r : cells) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c == 0) {
        os << r[c] << std::string(width[c] - r[c].size(), ' ');
      } else {
        os << ' ' << std::string(width[c] - r[c].size(), ' ') << r[c];
      }
    }
    os << '\n';
  }
  return os.str();
}

std::size_t max_k(const std::vector<HomologyReport>& reports) {
  std::size_t k = 0;
  for (const auto& r : reports)
    for (const auto& row : r.rows) k = std::max(k, row.k_split.size());
  return k;
}

bool any_h(const std::vector<HomologyReport>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const HomologyReport& r) { return r.h.has_value(); });
}

std::string homology_text(const std::vector<HomologyReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << r.algebra << " w=" << r.w;
    if (r.h) os << " h=" << *r.h;
    os << '\n';
    std::vector<std::vector<std::string>> cells(5);
    cells[0] = {"m"};
    cells[1] = {"dim"};
    cells[2] = {"rank"};
    cells[3] = {"ker"};
    cells[4] = {"betti"};
    for (const auto& row : r.rows) {
      cells[0].push_back(std::to_string(row.m));
      cells[1].push_back(std::to_string(row.dim));
      cells[2].push_back(std::to_string(row.rank));
      cells[3].push_back(std::to_string(row.kernel));
      cells[4].push_back(std::to_string(row.betti));
    }
    std::size_t k = 0;
    for (const auto& row : r.rows) k = std::max(k, row.k_split.size());
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<std::string> line{"k" + std::to_string(j)};
      for (const auto& row : r.rows) line.push_back(std::to_string(j < row.k_split.size() ? row.k_split[j] : 0));
      cells.push_back(std::move(line));
    }
    if (!r.rows.empty()) os << aligned(cells);
    os << "euler " << r.euler << "\n\n";
  }
  return os.str();
}

std::string homology_csv(const std::vector<HomologyReport>& reports) {
  const bool h = any_h(reports);
  const std::size_t k = max_k(reports);
  std::ostringstream os;
  os << "algebra,w" << (h ? ",h" : "") << ",m,dim,rank,kernel,betti,euler";
  for (std::size_t j = 0; j < k; ++j) os << ",k" << j;
  os << '\n';
  for (const auto& r : reports)
    for (const auto& row : r.rows) {
      os << r.algebra << ',' << r.w;
      if (h) os << ',' << (r.h ? std::to_string(*r.h) : "");
      os << ',' << row.m << ',' << row.dim << ',' << row.rank << ',' << row.kernel << ',' << row.betti << ','
         << r.euler;
      for (std::size_t j = 0; j < k; ++j) os << ',' << (j < row.k_split.size() ? row.k_split[j] : 0);
      os << '\n';
    }
  return os.str();
}

std::string homology_json(const std::vector<HomologyReport>& reports) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json j;
    j["algebra"] = r.algebra;
    j["w"] = r.w;
    if (r.h) j["h"] = *r.h;
    ordered_json rows = ordered_json::array();
    for (const auto& row : r.rows) {
      ordered_json x;
      x["m"] = row.m;
      x["dim"] = row.dim;
      x["rank"] = row.rank;
      x["kernel"] = row.kernel;
      x["betti"] = row.betti;
      if (!row.k_split.empty()) x["k_split"] = row.k_split;
      rows.push_back(std::move(x));
    }
    j["rows"] = std::move(rows);
    j["euler"] = r.euler;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

}  // namespace

std::string render_homology(const std::vector<HomologyReport>& reports, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::text: return homology_text(reports);
    case OutputFormat::csv: return homology_csv(reports);
    case OutputFormat::json: return homology_json(reports);
  }
  return {};
}

std::string render_dims(const std::vector<ChainDims>& rows, OutputFormat fmt) {
  const bool formula = std::any_of(rows.begin(), rows.end(), [](const ChainDims& d) { return !d.formula.empty(); });
  std::ostringstream os;
  if (fmt == OutputFormat::json) {
    ordered_json arr = ordered_json::array();
    for (const auto& d : rows) {
      ordered_json j;
      j["algebra"] = d.algebra;
      j["w"] = d.w;
      j["first_m"] = d.first_m;
      j["dims"] = d.dims;
      if (!d.formula.empty()) j["formula"] = d.formula;
      arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
  }
  if (fmt == OutputFormat::csv) {
    os << "algebra,w,m,dim" << (formula ? ",formula" : "") << '\n';
    for (const auto& d : rows)
      for (std::size_t m = 0; m < d.dims.size(); ++m) {
        os << d.algebra << ',' << d.w << ',' << d.first_m + static_cast<int>(m) << ',' << d.dims[m];
        if (formula) os << ',' << (m < d.formula.size() ? std::to_string(d.formula[m]) : "");
        os << '\n';
      }
    return os.str();
  }
  for (const auto& d : rows) {
    os << d.algebra << " w=" << d.w << '\n';
    std::vector<std::vector<std::string>> cells(formula ? 3 : 2);
    cells[0] = {"m"};
    cells[1] = {"dim"};
    if (formula) cells[2] = {"formula"};
    for (std::size_t m = 0; m < d.dims.size(); ++m) {
      cells[0].push_back(std::to_string(d.first_m + static_cast<int>(m)));
      cells[1].push_back(std::to_string(d.dims[m]));
      if (formula) cells[2].push_back(m < d.formula.size() ? std::to_string(d.formula[m]) : "-");
    }
    os << aligned(cells) << '\n';
  }
  return os.str();
}

std::string render_rank_formulas(const std::vector<RankFormulaReport>& reports, OutputFormat fmt) {
  std::ostringstream os;
  if (fmt == OutputFormat::json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) {
      ordered_json j;
      j["algebra"] = r.algebra;
      j["w"] = r.w;
      ordered_json rows = ordered_json::array();
      for (const auto& row : r.rows)
        rows.push_back({{"m", row.m}, {"formula", row.formula}, {"computed", row.computed}, {"match", row.match}});
      j["rows"] = std::move(rows);
      j["all_match"] = r.all_match();
      arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
  }
  if (fmt == OutputFormat::csv) {
    os << "algebra,w,m,formula,computed,match\n";
    for (const auto& r : reports)
      for (const auto& row : r.rows)
        os << r.algebra << ',' << r.w << ',' << row.m << ',' << row.formula << ',' << row.computed << ','
           << (row.match ? 1 : 0) << '\n';
    return os.str();
  }
  for (const auto& r : reports) {
    os << r.algebra << " w=" << r.w << (r.all_match() ? "" : "  MISMATCH") << '\n';
    std::vector<std::vector<std::string>> cells{{"m"}, {"formula"}, {"computed"}};
    for (const auto& row : r.rows) {
      cells[0].push_back(std::to_string(row.m));
      cells[1].push_back(std::to_string(row.formula));
      cells[2].push_back(std::to_string(row.computed) + (row.match ? "" : "*"));
    }
    os << aligned(cells) << '\n';
  }
  return os.str();
}

std::string render_brackets(const BracketTable& t, FormNotation notation, OutputFormat fmt) {
  if (fmt == OutputFormat::text) return render_bracket_table(t, notation);
  if (fmt == OutputFormat::csv) {
    std::ostringstream os;
    os << "a,b,value\n";
    for (std::size_t r = 0; r < t.basis.size(); ++r)
      for (std::size_t c = 0; c < t.basis.size(); ++c)
        os << basis_label(t.dim, t.basis[r], notation) << ',' << basis_label(t.dim, t.basis[c], notation) << ','
           << format_form(labelled_entry(t, r, c, notation), notation) << '\n';
    return os.str();
  }
  ordered_json arr = ordered_json::array();
  for (std::size_t r = 0; r < t.basis.size(); ++r)
    for (std::size_t c = 0; c < t.basis.size(); ++c)
      arr.push_back({{"a", basis_label(t.dim, t.basis[r], notation)},
                     {"b", basis_label(t.dim, t.basis[c], notation)},
                     {"value", format_form(labelled_entry(t, r, c, notation), notation)}});
  return arr.dump(2) + "\n";
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::string> keys;  // in file order
  std::map<std::string, std::vector<std::string>> rows;
};

const std::vector<std::string> kKeyColumns{"algebra", "w", "h", "m"};

CsvTable parse_table(const std::string& text) {
  CsvTable t;
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) return t;
  t.header = split_csv_line(line);
  std::vector<std::size_t> key_idx;
  for (const auto& k : kKeyColumns)
    if (auto it = std::find(t.header.begin(), t.header.end(), k); it != t.header.end())
      key_idx.push_back(static_cast<std::size_t>(it - t.header.begin()));
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto cells = split_csv_line(line);
    cells.resize(t.header.size());
    std::string key;
    for (std::size_t i : key_idx) {
      if (!key.empty()) key += ' ';
      key += t.header[i] + '=' + cells[i];
    }
    if (t.rows.emplace(key, cells).second) t.keys.push_back(key);
  }
  return t;
}

}  // namespace

std::vector<CsvDiff> diff_csv(const std::string& expected, const std::string& got) {
  std::vector<CsvDiff> out;
  CsvTable e = parse_table(expected), g = parse_table(got);
  if (e.header != g.header) {
    auto join = [](const std::vector<std::string>& v) {
      std::string s;
      for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
      return s;
    };
    out.push_back({"", "header", join(e.header), join(g.header)});
    return out;
  }
  for (const auto& key : e.keys) {
    auto it = g.rows.find(key);
    if (it == g.rows.end()) {
      out.push_back({key, "row", "present", "absent"});
      continue;
    }
    const auto& er = e.rows.at(key);
    for (std::size_t c = 0; c < e.header.size(); ++c)
      if (er[c] != it->second[c]) out.push_back({key, e.header[c], er[c], it->second[c]});
  }
  for (const auto& key : g.keys)
    if (!e.rows.count(key)) out.push_back({key, "row", "absent", "present"});
  return out;
}

}  // namespace superhom
