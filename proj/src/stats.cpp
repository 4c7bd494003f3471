#include "refh/stats.hpp"

#include <algorithm>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "refh/error.hpp"

namespace refh {

namespace {

void check_inputs(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("correlation inputs differ in length (" + std::to_string(x.size()) +
                                " vs " + std::to_string(y.size()) + ")");
  }
  if (x.size() < kMinCorrelationSample) {
    throw std::invalid_argument("correlation needs at least 3 observations");
  }
}

double mean(std::span<const double> v) { return std::accumulate(v.begin(), v.end(), 0.0) / v.size(); }

}  // namespace

double pearson(std::span<const double> x, std::span<const double> y) {
  check_inputs(x, y);
  const double mx = mean(x);
  const double my = mean(y);
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0 || syy == 0) throw std::invalid_argument("correlation undefined for a constant vector");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::vector<double> fractional_ranks(std::span<const double> x) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return x[a] < x[b]; });

  std::vector<double> ranks(x.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i + 1;
    while (j < order.size() && x[order[j]] == x[order[i]]) ++j;
    // positions i+1 .. j share their mean rank
    const double rank = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = rank;
    i = j;
  }
  return ranks;
}

double spearman(std::span<const double> x, std::span<const double> y) {
  check_inputs(x, y);
  const auto rx = fractional_ranks(x);
  const auto ry = fractional_ranks(y);
  return pearson(rx, ry);
}

Significance significance(double r, std::size_t n, CorrelationKind) {
  if (n < kMinCorrelationSample) throw std::invalid_argument("significance needs n >= 3");
  if (!(std::abs(r) <= 1)) throw std::invalid_argument("correlation coefficient outside [-1, 1]");
  if (std::abs(r) == 1) return {0.0, true};
  if (r == 0) return {1.0, false};

  const double df = static_cast<double>(n - 2);
  const double t = r * std::sqrt(df / ((1 - r) * (1 + r)));
  boost::math::students_t_distribution<double> dist(df);
  const double p = std::min(1.0, 2 * boost::math::cdf(boost::math::complement(dist, std::abs(t))));
  return {p, p < kSignificanceLevel};
}

CorrelationReport correlate(std::span<const double> x, std::span<const double> y) {
  CorrelationReport out;
  out.n = x.size();
  out.pearson_r = pearson(x, y);
  out.spearman_rho = spearman(x, y);
  const auto sp = significance(out.pearson_r, out.n, CorrelationKind::pearson);
  const auto ss = significance(out.spearman_rho, out.n, CorrelationKind::spearman);
  out.p_pearson = sp.p_value;
  out.significant_pearson = sp.significant;
  out.p_spearman = ss.p_value;
  out.significant_spearman = ss.significant;
  return out;
}

MeasurePair MeasurePair::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0 || colon + 1 == text.size()) {
    throw std::invalid_argument("measure pair must look like X:Y, got '" + std::string(text) + "'");
  }
  MeasurePair pair{std::string(text.substr(0, colon)), std::string(text.substr(colon + 1))};
  Measure::parse(pair.x);
  Measure::parse(pair.y);
  return pair;
}

namespace {

CorrelationReport report_for(const MeasureTable& table, const MeasurePair& pair, std::string_view discipline) {
  const auto sample = join_measures(table, Measure::parse(pair.x), Measure::parse(pair.y));
  const std::string name = pair.x + " vs " + pair.y;
  if (sample.x.size() < kMinCorrelationSample) {
    throw InsufficientDataError("insufficient joined data for " + name + " in " + std::string(discipline) +
                                ": " + std::to_string(sample.x.size()) + " complete pairs (" +
                                std::to_string(sample.dropped) + " dropped), need 3");
  }
  CorrelationReport out;
  try {
    out = correlate(sample.x, sample.y);
  } catch (const std::invalid_argument& e) {
    throw InsufficientDataError(name + " in " + std::string(discipline) + ": " + e.what());
  }
  out.discipline = std::string(discipline);
  out.measure_x = pair.x;
  out.measure_y = pair.y;
  out.dropped = sample.dropped;
  return out;
}

}  // namespace

std::vector<CorrelationReport> correlation_table(std::span<const ScoreSet> scores,
                                                 std::span<const GroupMetrics> metrics,
                                                 std::span<const MeasurePair> pairs,
                                                 std::string_view discipline) {
  const MeasureTable table(scores, metrics, discipline);
  std::vector<CorrelationReport> out;
  out.reserve(pairs.size());
  for (const auto& pair : pairs) out.push_back(report_for(table, pair, discipline));
  return out;
}

CorrelationSeries correlation_series(std::span<const ScoreSet> scores,
                                     std::span<const GroupMetrics> metrics, std::string_view x_label,
                                     std::span<const int> years, std::string_view discipline) {
  const MeasureTable table(scores, metrics, discipline);
  CorrelationSeries out;
  out.measure_x = std::string(x_label);
  for (int year : years) {
    out.by_year.emplace(year, report_for(table, {out.measure_x, "h_" + std::to_string(year)}, discipline));
  }
  const MeasurePair baseline{out.measure_x, "i"};
  const auto sample = join_measures(table, Measure::parse(baseline.x), Measure::parse(baseline.y));
  if (sample.x.size() >= kMinCorrelationSample) {
    try {
      out.baseline = report_for(table, baseline, discipline);
    } catch (const InsufficientDataError&) {
      // constant NCI column: no baseline line
    }
  }
  return out;
}

}  // namespace refh
