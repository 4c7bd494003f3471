#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace refh::csv {

struct Row {
  std::size_t line = 0;  // 1-based line on which the record starts
  std::vector<std::string> fields;
};

struct Table {
  std::vector<std::string> header;
  std::vector<Row> rows;

  std::optional<std::size_t> column(std::string_view name) const;
};

// RFC 4180: quoted fields may contain commas, doubled quotes and newlines.
// A UTF-8 BOM on the first line is skipped. Blank lines are ignored.
Table parse(std::string_view text, std::string_view source_name);
Table read_file(const std::string& path);

std::string escape(std::string_view field);
std::string format_row(std::span<const std::string> fields);

}  // namespace refh::csv
