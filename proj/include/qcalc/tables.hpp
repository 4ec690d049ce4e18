#pragma once

#include <string>
#include <vector>

namespace qcalc {

enum class TableFormat { csv, json, latex, text };

/// Rows of rendered entries; row n holds the entries for index n.
struct Table {
  std::string kind;
  std::string row_index;     // name of the row index ("n", "k")
  std::string column_index;  // name of the column index
  int column_start = 0;      // index of the first column
  std::vector<std::vector<std::string>> rows;
  std::vector<std::vector<std::string>> latex_rows;
};

/// beta, beta-order, beta-inverse, stirling1, stirling1-signed, stirling2,
/// stirling2-gen, stirling2-alt, qbinom.
const std::vector<std::string>& table_kinds();

/// Throws ParseError for an unknown kind and IndexError for max_n < 0.
Table make_table(const std::string& kind, int max_n);

TableFormat parse_table_format(const std::string& name);
std::string render_table(const Table& table, TableFormat format);

}  // namespace qcalc
