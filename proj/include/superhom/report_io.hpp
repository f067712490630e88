#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "superhom/forms.hpp"
#include "superhom/homology.hpp"

namespace superhom {

enum class OutputFormat { text, csv, json };

// Throws std::invalid_argument on anything but text, csv or json.
OutputFormat parse_format(std::string_view s);

// Betti tables. CSV columns: algebra,w[,h],m,dim,rank,kernel,betti,euler[,k0..kN].
// The h and k columns appear when any report carries them.
std::string render_homology(const std::vector<HomologyReport>& reports, OutputFormat fmt);

struct ChainDims {
  std::string algebra;
  int w = 0;
  int first_m = 1;
  std::vector<std::size_t> dims;  // dims[i] is dim C_{first_m + i}
  std::vector<long> formula;      // same indexing, empty when no closed form applies
};

std::string render_dims(const std::vector<ChainDims>& rows, OutputFormat fmt);
std::string render_rank_formulas(const std::vector<RankFormulaReport>& reports, OutputFormat fmt);
std::string render_brackets(const BracketTable& t, FormNotation notation, OutputFormat fmt);

// One differing cell between two CSV tables with the same header.
struct CsvDiff {
  std::string key;  // "algebra=so3 w=-5 m=2" built from the key columns present
  std::string field;
  std::string expected;
  std::string got;
};

// Rows are matched on algebra, w, h and m (those present in the header).
// A header mismatch or a row present on one side only is reported with
// field "header" or "row".
std::vector<CsvDiff> diff_csv(const std::string& expected, const std::string& got);

}  // namespace superhom
