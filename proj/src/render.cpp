#include "ulrich/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ulrich/serialize.hpp"

namespace ulrich {

TableFormat table_format_from_string(const std::string& s) {
  if (s == "text") return TableFormat::text;
  if (s == "csv") return TableFormat::csv;
  if (s == "json") return TableFormat::json;
  throw std::invalid_argument("unknown format '" + s + "' (expected text, csv or json)");
}

std::string render_table(const std::vector<CohomologyProfile>& profiles, TableFormat format) {
  size_t columns = profiles.empty() ? 0 : profiles.front().h.size();
  for (const CohomologyProfile& p : profiles)
    if (p.h.size() != columns)
      throw std::invalid_argument("render_table: profiles from mixed contexts");

  if (format == TableFormat::csv) {
    std::ostringstream out;
    out << "t";
    for (size_t q = 0; q < columns; ++q) out << ",h" << q;
    out << "\n";
    for (const CohomologyProfile& p : profiles) {
      out << p.twist;
      for (const Integer& v : p.h) out << "," << v.str();
      out << "\n";
    }
    return out.str();
  }

  if (format == TableFormat::json) {
    Json rows = Json::array();
    for (const CohomologyProfile& p : profiles) rows.push_back(to_json(p));
    return Json{{"rows", rows}}.dump();
  }

  // Text: fixed-width columns, zeros as dots, nonzero degree marked.
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"t"};
  for (size_t q = 0; q < columns; ++q) header.push_back("h^" + std::to_string(q));
  header.push_back("nonzero");
  cells.push_back(header);
  for (const CohomologyProfile& p : profiles) {
    std::vector<std::string> row{std::to_string(p.twist)};
    for (const Integer& v : p.h) row.push_back(v == 0 ? "." : v.str());
    const int q = p.nonzero_degree();
    row.push_back(q < 0 ? "-" : "h^" + std::to_string(q));
    cells.push_back(std::move(row));
  }

  std::vector<size_t> width(cells.front().size(), 0);
  for (const auto& row : cells)
    for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());

  std::ostringstream out;
  for (const auto& row : cells) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out << "  ";
      out << std::string(width[i] - row[i].size(), ' ') << row[i];
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace ulrich
