#ifndef ULRICH_RENDER_HPP
#define ULRICH_RENDER_HPP

#include <string>
#include <vector>

#include "ulrich/numerology.hpp"

namespace ulrich {

enum class TableFormat { text, csv, json };

TableFormat table_format_from_string(const std::string& s);

/// Renders cohomology profiles as a table, rows = twists ascending,
/// columns h^0..h^n. The text form prints zeros as "." and marks the
/// nonzero degree of each row in a trailing column; CSV and JSON forms are
/// bit-stable. Profiles must share one context (equal column counts).
std::string render_table(const std::vector<CohomologyProfile>& profiles, TableFormat format);

}  // namespace ulrich

#endif
