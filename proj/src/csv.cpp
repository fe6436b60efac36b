#include "fnd/csv.hpp"

#include <fstream>
#include <sstream>

#include "fnd/errors.hpp"

namespace fnd::csv {

std::vector<Row> parse(std::string_view content, char delim) {
  std::vector<Row> rows;
  Row row;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;  // row has at least one field character/sep

  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
  };
  auto end_row = [&] {
    end_field();
    rows.push_back(std::move(row));
    row.clear();
    field_started = false;
  };

  for (std::size_t i = 0; i < content.size(); ++i) {
    char c = content[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < content.size() && content[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        in_quotes = true;
        field_started = true;
        break;
      case '\r':
        break;  // swallowed; \r\n and bare \n both end the line at \n
      case '\n':
        if (field_started || !row.empty() || !field.empty()) end_row();
        break;
      default:
        if (c == delim) {
          end_field();
          field_started = true;
        } else {
          field += c;
          field_started = true;
        }
    }
  }
  if (in_quotes) throw Error("unterminated quoted field");
  if (field_started || !row.empty() || !field.empty()) end_row();
  return rows;
}

std::vector<Row> read_file(const std::filesystem::path& path, char delim) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), delim);
}

std::string escape_field(std::string_view field, char delim) {
  bool needs_quotes = field.find_first_of("\"\r\n") != std::string_view::npos ||
                      field.find(delim) != std::string_view::npos;
  if (!needs_quotes) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_row(std::ostream& os, std::span<const std::string> fields,
               char delim) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) os << delim;
    os << escape_field(fields[i], delim);
  }
  os << '\n';
}

}  // namespace fnd::csv
