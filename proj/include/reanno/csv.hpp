#pragma once

#include <string>
#include <vector>

namespace reanno::csv {

/// Quotes a field per RFC 4180 when it contains a comma, quote or newline.
std::string escape(const std::string& field);

std::string join_row(const std::vector<std::string>& fields);

/// Splits one CSV line, honoring quoted fields and doubled quotes.
std::vector<std::string> split_row(const std::string& line);

/// Parses a whole CSV document into rows (no header handling).
std::vector<std::vector<std::string>> parse(const std::string& text);

/// Formats a real with 6 significant digits for CSV tables.
std::string format_real(double v);

}  // namespace reanno::csv
