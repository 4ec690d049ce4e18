#include "qcalc/tables.hpp"

#include <algorithm>
#include <functional>
#include <nlohmann/json.hpp>
#include <sstream>

#include "qcalc/bernoulli.hpp"
#include "qcalc/errors.hpp"
#include "qcalc/qcore.hpp"
#include "qcalc/stirling.hpp"

namespace qcalc {

namespace {

using Entry = std::function<RationalFunctionQ(int row, int col)>;

Table triangle(const std::string& kind, int max_n, const std::string& col_name, int col_start,
               const std::function<int(int)>& col_end, const Entry& entry) {
  Table t{kind, "n", col_name, col_start, {}, {}};
  for (int n = 0; n <= max_n; ++n) {
    std::vector<std::string> row, latex;
    for (int k = col_start; k <= col_end(n); ++k) {
      RationalFunctionQ v = entry(n, k);
      row.push_back(v.to_string());
      latex.push_back(v.to_latex());
    }
    t.rows.push_back(std::move(row));
    t.latex_rows.push_back(std::move(latex));
  }
  return t;
}

}  // namespace

const std::vector<std::string>& table_kinds() {
  static const std::vector<std::string> kinds{"beta",      "beta-order",    "beta-inverse",  "stirling1", "stirling1-signed",
                                              "stirling2", "stirling2-gen", "stirling2-alt", "qbinom"};
  return kinds;
}

Table make_table(const std::string& kind, int max_n) {
  if (max_n < 0) throw IndexError("max-n must be nonnegative, got " + std::to_string(max_n));
  auto diag = [](int n) { return n; };
  auto square = [max_n](int) { return std::max(1, max_n); };
  if (kind == "beta") {
    return triangle(kind, max_n, "", 0, [](int) { return 0; }, [](int n, int) { return beta(n); });
  }
  if (kind == "beta-order") {
    Table t = triangle(kind, max_n, "k", 1, square, [](int n, int k) { return beta_order(n, k); });
    return t;
  }
  if (kind == "beta-inverse") {
    Table t = triangle(kind, max_n, "n", 1, square, [](int k, int n) { return beta_inverse_order(k, n); });
    t.row_index = "k";
    return t;
  }
  if (kind == "stirling1" || kind == "stirling1-signed") {
    const FirstKind fk = kind == "stirling1" ? FirstKind::generating : FirstKind::signed_product;
    return triangle(kind, max_n, "k", 0, diag, [fk](int n, int k) { return RationalFunctionQ(s1_value(fk, n, k)); });
  }
  if (kind == "stirling2") return triangle(kind, max_n, "k", 0, diag, [](int n, int k) { return s2_explicit(n, k); });
  if (kind == "stirling2-gen") {
    return triangle(kind, max_n, "k", 0, diag, [](int n, int k) { return s2_gen(n, k)[static_cast<std::size_t>(k)]; });
  }
  if (kind == "stirling2-alt") return triangle(kind, max_n, "k", 0, diag, [](int n, int k) { return s2_alt(n, k); });
  if (kind == "qbinom") {
    return triangle(kind, max_n, "k", 0, diag, [](int n, int k) { return RationalFunctionQ(gauss_binom(n, k)); });
  }
  throw ParseError("unknown table kind '" + kind + "'");
}

TableFormat parse_table_format(const std::string& name) {
  if (name == "csv") return TableFormat::csv;
  if (name == "json") return TableFormat::json;
  if (name == "latex") return TableFormat::latex;
  if (name == "text") return TableFormat::text;
  throw ParseError("unknown format '" + name + "' (csv, json, latex, text)");
}

std::string render_table(const Table& table, TableFormat format) {
  std::ostringstream out;
  switch (format) {
    case TableFormat::csv:
      for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << "\n";
      }
      break;
    case TableFormat::json: out << nlohmann::json(table.rows).dump() << "\n"; break;
    case TableFormat::text:
      for (std::size_t n = 0; n < table.rows.size(); ++n) {
        out << table.row_index << "=" << n << ":";
        for (const auto& e : table.rows[n]) out << "  " << e;
        out << "\n";
      }
      break;
    case TableFormat::latex: {
      std::size_t width = 0;
      for (const auto& row : table.latex_rows) width = std::max(width, row.size());
      out << "\\documentclass{standalone}\n\\begin{document}\n";
      out << "\\begin{tabular}{r|" << std::string(width, 'l') << "}\n";
      out << "$" << table.row_index << "$";
      for (std::size_t c = 0; c < width; ++c) {
        out << " & ";
        if (!table.column_index.empty()) out << "$" << table.column_index << "=" << table.column_start + static_cast<int>(c) << "$";
      }
      out << " \\\\\n\\hline\n";
      for (std::size_t n = 0; n < table.latex_rows.size(); ++n) {
        out << n;
        for (const auto& e : table.latex_rows[n]) out << " & $" << e << "$";
        out << " \\\\\n";
      }
      out << "\\end{tabular}\n\\end{document}\n";
      break;
    }
  }
  return out.str();
}

}  // namespace qcalc
