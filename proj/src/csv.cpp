#include "refh/csv.hpp"

#include <fstream>
#include <sstream>

#include "refh/error.hpp"

namespace refh::csv {

std::optional<std::size_t> Table::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  return std::nullopt;
}

Table parse(std::string_view text, std::string_view source_name) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::vector<Row> records;
  Row current;
  std::string field;
  std::size_t line = 1;
  current.line = 1;
  bool in_quotes = false;
  bool field_started = false;
  bool was_quoted = false;

  auto end_field = [&] {
    current.fields.push_back(std::move(field));
    field.clear();
    field_started = false;
    was_quoted = false;
  };
  auto end_record = [&] {
    bool blank = current.fields.empty() && !field_started && field.empty();
    if (!blank) {
      end_field();
      records.push_back(std::move(current));
    }
    current = Row{};
    current.line = line + 1;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (field_started && !was_quoted) {
          throw IngestError(std::string(source_name), line, "", "unexpected quote inside field");
        }
        in_quotes = true;
        field_started = true;
        was_quoted = true;
        break;
      case ',':
        end_field();
        break;
      case '\r':
        break;
      case '\n':
        end_record();
        ++line;
        break;
      default:
        if (was_quoted) {
          throw IngestError(std::string(source_name), line, "", "text after closing quote");
        }
        field.push_back(c);
        field_started = true;
    }
  }
  if (in_quotes) throw IngestError(std::string(source_name), line, "", "unterminated quoted field");
  end_record();

  Table table;
  if (records.empty()) return table;
  table.header = std::move(records.front().fields);
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].fields.size() != table.header.size()) {
      throw IngestError(std::string(source_name), records[i].line, "",
                        "expected " + std::to_string(table.header.size()) + " fields, found " +
                            std::to_string(records[i].fields.size()));
    }
    table.rows.push_back(std::move(records[i]));
  }
  return table;
}

Table read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), path);
}

std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string format_row(std::span<const std::string> fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out.push_back(',');
    out += escape(fields[i]);
  }
  out.push_back('\n');
  return out;
}

}  // namespace refh::csv
