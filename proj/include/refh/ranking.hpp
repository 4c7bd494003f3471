#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace refh {

enum class Movement { none, up, down, new_entry };

std::string_view to_token(Movement m);  // up|down|none|new
Movement movement_from_token(std::string_view token);

struct RankedEntry {
  int rank = 0;
  std::string institution;
  std::optional<double> value;
  Movement movement = Movement::none;

  friend bool operator==(const RankedEntry&, const RankedEntry&) = default;
};

/// Entries sorted by value descending with competition ranks ("1224").
struct RankedTable {
  std::string discipline;
  std::string measure;
  std::vector<RankedEntry> entries;

  const RankedEntry* find(std::string_view institution) const;

  friend bool operator==(const RankedTable&, const RankedTable&) = default;
};

/// Competition ranking: rank = 1 + number of strictly greater values. Within a
/// tie, entries are listed by institution name; that order carries no meaning.
/// Throws std::invalid_argument for an empty map or a NaN value.
RankedTable rank_table(const std::map<std::string, double>& values, std::string measure,
                       std::string discipline = {});

struct RankShift {
  std::optional<int> old_rank;
  int new_rank = 0;
  Movement movement = Movement::none;
};

struct MovementReport {
  std::string baseline_measure;
  std::string comparison_measure;
  std::map<std::string, RankShift> moves;  // institutions in the comparison table
  std::vector<std::string> dropped;        // only in the baseline, sorted
};

/// Rank shift of every institution in `comparison` relative to `baseline`.
MovementReport movement(const RankedTable& baseline, const RankedTable& comparison);

/// Copy of `table` with each entry's movement taken from the report.
RankedTable apply_movement(RankedTable table, const MovementReport& report);

enum class TableFormat { csv, markdown };

/// Throws std::invalid_argument for anything other than csv or markdown.
TableFormat parse_table_format(std::string_view name);

/// Byte-stable rendering. CSV: `rank,institution,value,movement` with values at
/// six decimals. Markdown: rank, institution, value and an arrow column.
std::string render_table(const RankedTable& table, TableFormat format);

/// Side-by-side markdown columns in the "1. Name ↑ (value)" style, one column
/// per table. Usually [baseline, comparison] or [lead, baseline, comparison].
std::string render_columns_markdown(std::span<const RankedTable> columns);

/// Parses the CSV produced by render_table. Throws IngestError.
RankedTable parse_table_csv(std::string_view text, std::string discipline, std::string measure);

}  // namespace refh
