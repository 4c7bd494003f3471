#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "refh/metrics.hpp"

namespace refh {

/// A named per-group quantity: s, s_prime, s_output, strength, i (NCI),
/// h_<year> or h_hat_<year>.
struct Measure {
  enum class Kind { s, s_prime, s_output, strength, nci, h, h_hat };

  Kind kind = Kind::s;
  int year = 0;  // only for h and h_hat

  /// Throws std::invalid_argument for an unknown label.
  static Measure parse(std::string_view label);
  std::string label() const;

  friend bool operator==(const Measure&, const Measure&) = default;
};

/// Scores and citation metrics of one discipline, joined by institution.
class MeasureTable {
 public:
  MeasureTable(std::span<const ScoreSet> scores, std::span<const GroupMetrics> metrics,
               std::string_view discipline);

  /// Sorted union of institutions seen in either input.
  const std::vector<std::string>& institutions() const noexcept { return institutions_; }

  std::optional<double> value(const std::string& institution, const Measure& measure) const;

  /// Institutions with a value for `measure`.
  std::map<std::string, double> values(const Measure& measure) const;

 private:
  std::map<std::string, const ScoreSet*> scores_;
  std::map<std::string, const GroupMetrics*> metrics_;
  std::vector<std::string> institutions_;
};

/// Pairwise-complete observations of two measures.
struct JoinedSample {
  std::vector<std::string> institutions;
  std::vector<double> x;
  std::vector<double> y;
  std::size_t dropped = 0;  // institutions missing either value
};

JoinedSample join_measures(const MeasureTable& table, const Measure& x, const Measure& y);

}  // namespace refh
