#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace corpuscope {

// RFC-4180 style CSV: quoted fields may contain commas, doubled quotes and
// newlines. Rows are returned verbatim, header included.
std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& path);
std::vector<std::vector<std::string>> parse_csv(const std::string& content);

std::string csv_escape(const std::string& field);
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

// All floats in emitted tables use 9 significant digits.
std::string format_g9(double value);

}  // namespace corpuscope
