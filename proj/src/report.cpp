#include "refh/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"
#include "refh/csv.hpp"

namespace refh {

std::string format_fixed(double value, int decimals) {
  if (value == 0) value = 0;  // no "-0.000000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  std::string out(buf);
  if (out.starts_with('-') && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
  return out;
}

std::string format_compact(double value, int decimals) {
  auto out = format_fixed(value, decimals);
  if (out.find('.') != std::string::npos) {
    out.erase(out.find_last_not_of('0') + 1);
    if (out.ends_with('.')) out.pop_back();
  }
  return out;
}

OutputFormat parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "markdown" || name == "md") return OutputFormat::markdown;
  if (name == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown output format '" + std::string(name) + "'");
}

std::string_view file_extension(OutputFormat format) {
  switch (format) {
    case OutputFormat::csv: return "csv";
    case OutputFormat::markdown: return "md";
    case OutputFormat::json: return "json";
  }
  return "csv";
}

namespace {

std::string cell_text(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_fixed(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  };
  return std::visit(Visitor{}, cell);
}

nlohmann::json cell_json(const Cell& cell) {
  struct Visitor {
    nlohmann::json operator()(std::monostate) const { return nullptr; }
    nlohmann::json operator()(const std::string& s) const { return s; }
    nlohmann::json operator()(std::int64_t v) const { return v; }
    nlohmann::json operator()(double v) const {
      // round-trip through the fixed rendering so JSON and CSV agree digit for digit
      const auto text = format_fixed(v);
      double rounded = 0;
      std::from_chars(text.data(), text.data() + text.size(), rounded);
      return rounded;
    }
    nlohmann::json operator()(bool v) const { return v; }
  };
  return std::visit(Visitor{}, cell);
}

Cell optional_cell(const std::optional<double>& v) { return v ? Cell(*v) : Cell(std::monostate{}); }

std::vector<Cell> report_cells(const CorrelationReport& r) {
  return {r.discipline,         r.measure_x,          r.measure_y,
          static_cast<std::int64_t>(r.n), r.pearson_r, r.p_pearson,
          r.significant_pearson, r.spearman_rho,      r.p_spearman,
          r.significant_spearman};
}

const std::vector<std::string> kCorrelationColumns = {
    "discipline", "x", "y", "n", "pearson_r", "p_pearson", "sig_pearson", "spearman_rho", "p_spearman",
    "sig_spearman"};

}  // namespace

std::string render(const DataTable& table, OutputFormat format) {
  switch (format) {
    case OutputFormat::csv: {
      std::string out = csv::format_row(table.columns);
      for (const auto& row : table.rows) {
        std::vector<std::string> fields;
        fields.reserve(row.size());
        for (const auto& c : row) fields.push_back(cell_text(c));
        out += csv::format_row(fields);
      }
      return out;
    }
    case OutputFormat::markdown: {
      std::string out = "|";
      std::string rule = "|";
      for (const auto& c : table.columns) {
        out += " " + c + " |";
        rule += "---|";
      }
      out += "\n" + rule + "\n";
      for (const auto& row : table.rows) {
        out += "|";
        for (const auto& c : row) out += " " + cell_text(c) + " |";
        out += "\n";
      }
      return out;
    }
    case OutputFormat::json: {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < table.columns.size(); ++i) obj[table.columns[i]] = cell_json(row[i]);
        arr.push_back(std::move(obj));
      }
      return arr.dump(2) + "\n";
    }
  }
  return {};
}

DataTable hseries_table(std::span<const HIndexSeries> series) {
  DataTable t{{"institution", "discipline", "window_start", "window_end", "measurement_year", "h"}, {}};
  for (const auto& s : series) {
    for (const auto& [year, h] : s.values) {
      t.rows.push_back({s.institution, s.discipline, std::int64_t{s.window.start_year},
                        std::int64_t{s.window.end_year}, std::int64_t{year}, h});
    }
  }
  return t;
}

DataTable scores_table(std::span<const ScoreSet> scores) {
  DataTable t{{"institution", "discipline", "s", "s_prime", "s_output", "strength", "nci"}, {}};
  for (const auto& s : scores) {
    t.rows.push_back({s.institution, s.discipline, s.s, s.s_prime, optional_cell(s.s_output),
                      optional_cell(s.strength), optional_cell(s.nci)});
  }
  return t;
}

DataTable correlations_table(std::span<const CorrelationReport> reports) {
  DataTable t{kCorrelationColumns, {}};
  for (const auto& r : reports) t.rows.push_back(report_cells(r));
  return t;
}

DataTable corr_series_table(std::span<const std::pair<int, CorrelationReport>> rows) {
  DataTable t{kCorrelationColumns, {}};
  t.columns.push_back("measurement_year");
  for (const auto& [year, r] : rows) {
    auto cells = report_cells(r);
    cells.push_back(year == 0 ? Cell(std::monostate{}) : Cell(std::int64_t{year}));
    t.rows.push_back(std::move(cells));
  }
  return t;
}

DataTable fig_points_table(const JoinedSample& sample) {
  DataTable t{{"x_value", "y_value", "institution"}, {}};
  for (std::size_t i = 0; i < sample.x.size(); ++i) {
    t.rows.push_back({sample.x[i], sample.y[i], sample.institutions[i]});
  }
  return t;
}

}  // namespace refh
