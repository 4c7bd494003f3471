#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "refh/measures.hpp"

namespace refh {

inline constexpr double kSignificanceLevel = 0.05;
inline constexpr std::size_t kMinCorrelationSample = 3;

/// Sample Pearson correlation, clamped to [-1, 1].
/// Throws std::invalid_argument on length mismatch, n < 3 or a constant input.
double pearson(std::span<const double> x, std::span<const double> y);

/// Ranks 1..n; tied values get the mean of the positions they occupy.
std::vector<double> fractional_ranks(std::span<const double> x);

/// Pearson correlation of the fractional ranks (tie-corrected Spearman rho).
double spearman(std::span<const double> x, std::span<const double> y);

enum class CorrelationKind { pearson, spearman };

struct Significance {
  double p_value = 1;
  bool significant = false;
};

/// Two-sided test of r = 0 via t = r sqrt((n-2)/(1-r^2)) with n-2 degrees of
/// freedom, used for both coefficients. |r| = 1 gives p = 0.
Significance significance(double r, std::size_t n, CorrelationKind kind);

struct CorrelationReport {
  std::string discipline;
  std::string measure_x;
  std::string measure_y;
  std::size_t n = 0;
  std::size_t dropped = 0;
  double pearson_r = 0;
  double spearman_rho = 0;
  double p_pearson = 1;
  double p_spearman = 1;
  bool significant_pearson = false;
  bool significant_spearman = false;
};

/// Both coefficients and their significance for paired observations.
CorrelationReport correlate(std::span<const double> x, std::span<const double> y);

struct MeasurePair {
  std::string x;
  std::string y;

  /// "s:h_2008" -> {s, h_2008}
  static MeasurePair parse(std::string_view text);
};

/// One report per pair over the institutions of `discipline` having both
/// values. Throws InsufficientDataError (naming the pair) when fewer than
/// three complete pairs remain.
std::vector<CorrelationReport> correlation_table(std::span<const ScoreSet> scores,
                                                 std::span<const GroupMetrics> metrics,
                                                 std::span<const MeasurePair> pairs,
                                                 std::string_view discipline);

struct CorrelationSeries {
  std::string measure_x;
  std::optional<CorrelationReport> baseline;  // x vs i, when NCI values allow it
  std::map<int, CorrelationReport> by_year;   // x vs h_<year>
};

CorrelationSeries correlation_series(std::span<const ScoreSet> scores,
                                     std::span<const GroupMetrics> metrics, std::string_view x_label,
                                     std::span<const int> years, std::string_view discipline);

}  // namespace refh
