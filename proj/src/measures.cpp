#include "refh/measures.hpp"

#include <charconv>
#include <set>
#include <stdexcept>

namespace refh {

Measure Measure::parse(std::string_view label) {
  if (label == "s") return {Kind::s};
  if (label == "s_prime") return {Kind::s_prime};
  if (label == "s_output") return {Kind::s_output};
  if (label == "strength") return {Kind::strength};
  if (label == "i" || label == "nci") return {Kind::nci};

  auto year_after = [&](std::string_view prefix) -> std::optional<int> {
    if (!label.starts_with(prefix)) return std::nullopt;
    auto digits = label.substr(prefix.size());
    int year = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), year);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
    return year;
  };
  if (auto y = year_after("h_hat_")) return {Kind::h_hat, *y};
  if (auto y = year_after("h_")) return {Kind::h, *y};
  throw std::invalid_argument("unknown measure label '" + std::string(label) + "'");
}

std::string Measure::label() const {
  switch (kind) {
    case Kind::s: return "s";
    case Kind::s_prime: return "s_prime";
    case Kind::s_output: return "s_output";
    case Kind::strength: return "strength";
    case Kind::nci: return "i";
    case Kind::h: return "h_" + std::to_string(year);
    case Kind::h_hat: return "h_hat_" + std::to_string(year);
  }
  return {};
}

MeasureTable::MeasureTable(std::span<const ScoreSet> scores, std::span<const GroupMetrics> metrics,
                           std::string_view discipline) {
  const auto key = normalize_label(discipline);
  std::set<std::string> all;
  for (const auto& s : scores) {
    if (normalize_label(s.discipline) != key) continue;
    scores_[s.institution] = &s;
    all.insert(s.institution);
  }
  for (const auto& m : metrics) {
    if (normalize_label(m.discipline) != key) continue;
    metrics_[m.institution] = &m;
    all.insert(m.institution);
  }
  institutions_.assign(all.begin(), all.end());
}

std::optional<double> MeasureTable::value(const std::string& institution, const Measure& measure) const {
  const ScoreSet* s = nullptr;
  const GroupMetrics* g = nullptr;
  if (auto it = scores_.find(institution); it != scores_.end()) s = it->second;
  if (auto it = metrics_.find(institution); it != metrics_.end()) g = it->second;

  auto from_years = [&](const std::map<int, std::int64_t>& series) -> std::optional<double> {
    auto it = series.find(measure.year);
    if (it == series.end()) return std::nullopt;
    return static_cast<double>(it->second);
  };

  switch (measure.kind) {
    case Measure::Kind::s: return s ? std::optional(s->s) : std::nullopt;
    case Measure::Kind::s_prime: return s ? std::optional(s->s_prime) : std::nullopt;
    case Measure::Kind::s_output: return s ? s->s_output : std::nullopt;
    case Measure::Kind::strength: return s ? s->strength : std::nullopt;
    case Measure::Kind::nci:
      if (g && g->nci) return g->nci;
      return s ? s->nci : std::nullopt;
    case Measure::Kind::h: return g ? from_years(g->h) : std::nullopt;
    case Measure::Kind::h_hat: return g ? from_years(g->h_hat) : std::nullopt;
  }
  return std::nullopt;
}

std::map<std::string, double> MeasureTable::values(const Measure& measure) const {
  std::map<std::string, double> out;
  for (const auto& inst : institutions_) {
    if (auto v = value(inst, measure)) out.emplace(inst, *v);
  }
  return out;
}

JoinedSample join_measures(const MeasureTable& table, const Measure& x, const Measure& y) {
  JoinedSample out;
  for (const auto& inst : table.institutions()) {
    auto vx = table.value(inst, x);
    auto vy = table.value(inst, y);
    if (vx && vy) {
      out.institutions.push_back(inst);
      out.x.push_back(*vx);
      out.y.push_back(*vy);
    } else {
      ++out.dropped;
    }
  }
  return out;
}

}  // namespace refh
