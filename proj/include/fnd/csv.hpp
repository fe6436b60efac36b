#pragma once

#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fnd::csv {

// RFC-4180 style parsing with a configurable delimiter (',' or '\t').
// Quoted fields may contain the delimiter, newlines and doubled quotes.
// Accepts both \n and \r\n line endings.

using Row = std::vector<std::string>;

std::vector<Row> parse(std::string_view content, char delim);

// Reads and parses a whole file; throws IoError if it cannot be opened.
std::vector<Row> read_file(const std::filesystem::path& path, char delim);

// Quotes the field if it contains the delimiter, a quote or a newline.
std::string escape_field(std::string_view field, char delim);

void write_row(std::ostream& os, std::span<const std::string> fields,
               char delim);

}  // namespace fnd::csv
