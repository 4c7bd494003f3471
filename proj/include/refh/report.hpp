#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "refh/metrics.hpp"
#include "refh/stats.hpp"

namespace refh {

inline constexpr int kOutputDecimals = 6;

/// Fixed six-decimal rendering used by every CSV/JSON output.
std::string format_fixed(double value, int decimals = kOutputDecimals);

/// format_fixed with trailing zeros (and a bare point) removed: 84.000000 -> 84.
std::string format_compact(double value, int decimals = kOutputDecimals);

using Cell = std::variant<std::monostate, std::string, std::int64_t, double, bool>;

/// A rectangular output table with named columns.
struct DataTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class OutputFormat { csv, markdown, json };

OutputFormat parse_output_format(std::string_view name);
std::string_view file_extension(OutputFormat format);  // "csv", "md", "json"

/// csv: RFC 4180 with header; markdown: pipe table; json: array of objects.
/// Doubles are rounded to six decimals in every format; empty cells are
/// blank in csv/markdown and null in json.
std::string render(const DataTable& table, OutputFormat format);

DataTable hseries_table(std::span<const HIndexSeries> series);
DataTable scores_table(std::span<const ScoreSet> scores);
DataTable correlations_table(std::span<const CorrelationReport> reports);
/// Rows of correlations_table plus a trailing measurement_year column; rows
/// whose year is 0 (the x-vs-i baseline) leave it empty.
DataTable corr_series_table(std::span<const std::pair<int, CorrelationReport>> rows);
DataTable fig_points_table(const JoinedSample& sample);

}  // namespace refh
