#include "refh/ranking.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "refh/csv.hpp"
#include "refh/error.hpp"
#include "refh/report.hpp"

namespace refh {

std::string_view to_token(Movement m) {
  switch (m) {
    case Movement::none: return "none";
    case Movement::up: return "up";
    case Movement::down: return "down";
    case Movement::new_entry: return "new";
  }
  return "none";
}

Movement movement_from_token(std::string_view token) {
  if (token == "none") return Movement::none;
  if (token == "up") return Movement::up;
  if (token == "down") return Movement::down;
  if (token == "new") return Movement::new_entry;
  throw std::invalid_argument("unknown movement token '" + std::string(token) + "'");
}

const RankedEntry* RankedTable::find(std::string_view institution) const {
  auto it = std::find_if(entries.begin(), entries.end(),
                         [&](const RankedEntry& e) { return e.institution == institution; });
  return it == entries.end() ? nullptr : &*it;
}

RankedTable rank_table(const std::map<std::string, double>& values, std::string measure,
                       std::string discipline) {
  if (values.empty()) throw std::invalid_argument("cannot rank an empty set of values");
  RankedTable table{std::move(discipline), std::move(measure), {}};
  table.entries.reserve(values.size());
  for (const auto& [inst, v] : values) {
    if (std::isnan(v)) throw std::invalid_argument("NaN value for " + inst);
    table.entries.push_back({0, inst, v, Movement::none});
  }
  // map iteration is already name-ascending, so a stable sort keeps the tie order
  std::stable_sort(table.entries.begin(), table.entries.end(),
                   [](const RankedEntry& a, const RankedEntry& b) { return *a.value > *b.value; });
  for (std::size_t i = 0; i < table.entries.size(); ++i) {
    auto& e = table.entries[i];
    e.rank = (i > 0 && *e.value == *table.entries[i - 1].value) ? table.entries[i - 1].rank
                                                               : static_cast<int>(i) + 1;
  }
  return table;
}

MovementReport movement(const RankedTable& baseline, const RankedTable& comparison) {
  MovementReport report{baseline.measure, comparison.measure, {}, {}};
  for (const auto& e : comparison.entries) {
    RankShift shift{std::nullopt, e.rank, Movement::new_entry};
    if (const auto* before = baseline.find(e.institution)) {
      shift.old_rank = before->rank;
      shift.movement = e.rank < before->rank   ? Movement::up
                       : e.rank > before->rank ? Movement::down
                                               : Movement::none;
    }
    report.moves.emplace(e.institution, shift);
  }
  for (const auto& e : baseline.entries) {
    if (!comparison.find(e.institution)) report.dropped.push_back(e.institution);
  }
  std::sort(report.dropped.begin(), report.dropped.end());
  return report;
}

RankedTable apply_movement(RankedTable table, const MovementReport& report) {
  for (auto& e : table.entries) {
    auto it = report.moves.find(e.institution);
    e.movement = it == report.moves.end() ? Movement::none : it->second.movement;
  }
  return table;
}

TableFormat parse_table_format(std::string_view name) {
  if (name == "csv") return TableFormat::csv;
  if (name == "markdown" || name == "md") return TableFormat::markdown;
  throw std::invalid_argument("unknown table format '" + std::string(name) + "'");
}

namespace {

std::string_view arrow(Movement m) {
  switch (m) {
    case Movement::up: return "↑";
    case Movement::down: return "↓";
    case Movement::new_entry: return "(new)";
    case Movement::none: return "";
  }
  return "";
}

std::string md_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else out.push_back(c);
  }
  return out;
}

std::string column_cell(const RankedEntry& e) {
  std::string cell = std::to_string(e.rank) + ". " + md_escape(e.institution);
  if (auto a = arrow(e.movement); !a.empty()) cell += " " + std::string(a);
  if (e.value) cell += " (" + format_compact(*e.value) + ")";
  return cell;
}

}  // namespace

std::string render_table(const RankedTable& table, TableFormat format) {
  std::string out;
  if (format == TableFormat::csv) {
    out = "rank,institution,value,movement\n";
    for (const auto& e : table.entries) {
      const std::vector<std::string> row = {std::to_string(e.rank), e.institution,
                                            e.value ? format_fixed(*e.value) : std::string(),
                                            std::string(to_token(e.movement))};
      out += csv::format_row(row);
    }
    return out;
  }
  const std::string measure = table.measure.empty() ? "Value" : md_escape(table.measure);
  out = "| Rank | Institution | " + measure + " | Movement |\n";
  out += "|---:|:---|---:|:---:|\n";
  for (const auto& e : table.entries) {
    out += "| " + std::to_string(e.rank) + " | " + md_escape(e.institution) + " | " +
           (e.value ? format_compact(*e.value) : std::string()) + " | " + std::string(arrow(e.movement)) +
           " |\n";
  }
  return out;
}

std::string render_columns_markdown(std::span<const RankedTable> columns) {
  std::string out = "|";
  std::string rule = "|";
  std::size_t rows = 0;
  for (const auto& t : columns) {
    out += " Ranked by " + md_escape(t.measure) + " |";
    rule += ":---|";
    rows = std::max(rows, t.entries.size());
  }
  out += "\n" + rule + "\n";
  for (std::size_t i = 0; i < rows; ++i) {
    out += "|";
    for (const auto& t : columns) {
      out += " " + (i < t.entries.size() ? column_cell(t.entries[i]) : std::string()) + " |";
    }
    out += "\n";
  }
  return out;
}

RankedTable parse_table_csv(std::string_view text, std::string discipline, std::string measure) {
  const auto parsed = csv::parse(text, "ranked table");
  RankedTable table{std::move(discipline), std::move(measure), {}};
  if (parsed.header.empty()) return table;
  if (parsed.header != std::vector<std::string>{"rank", "institution", "value", "movement"}) {
    throw IngestError("ranked table", 1, "", "expected header rank,institution,value,movement");
  }
  for (const auto& row : parsed.rows) {
    RankedEntry e;
    const auto& f = row.fields;
    auto [p, ec] = std::from_chars(f[0].data(), f[0].data() + f[0].size(), e.rank);
    if (ec != std::errc() || p != f[0].data() + f[0].size() || e.rank < 1) {
      throw IngestError("ranked table", row.line, "rank", "bad rank '" + f[0] + "'");
    }
    e.institution = f[1];
    if (!f[2].empty()) {
      double v = 0;
      auto [q, ec2] = std::from_chars(f[2].data(), f[2].data() + f[2].size(), v);
      if (ec2 != std::errc() || q != f[2].data() + f[2].size()) {
        throw IngestError("ranked table", row.line, "value", "bad value '" + f[2] + "'");
      }
      e.value = v;
    }
    try {
      e.movement = movement_from_token(f[3]);
    } catch (const std::invalid_argument& err) {
      throw IngestError("ranked table", row.line, "movement", err.what());
    }
    table.entries.push_back(std::move(e));
  }
  return table;
}

}  // namespace refh
