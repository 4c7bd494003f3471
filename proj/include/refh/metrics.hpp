#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "refh/corpus.hpp"

namespace refh {

/// Citations received up to and including `year`.
std::int64_t citations_to_end_of(const PublicationRecord& record, int year);

/// Largest n such that at least n of the counts are >= n. Zero when empty.
std::int64_t compute_h(std::span<const std::int64_t> citation_counts);

/// The h-index measured at the start of `measurement_year` counts citations
/// through the end of the previous year.
inline constexpr int citation_cutoff(int measurement_year) noexcept { return measurement_year - 1; }

/// h-index of the documents passing `filter_documents(corpus, query)`, counting
/// citations through measurement_year - 1. Requires measurement_year > window start.
std::int64_t departmental_h(const Corpus& corpus, const DocumentQuery& query, int measurement_year);

struct HIndexSeries {
  std::string institution;
  std::string discipline;
  PublicationWindow window;
  std::map<int, std::int64_t> values;  // measurement year -> h

  friend bool operator==(const HIndexSeries&, const HIndexSeries&) = default;
};

/// Per-year departmental h. `years` must be strictly ascending.
HIndexSeries h_series(const Corpus& corpus, const DocumentQuery& query, std::span<const int> years);

/// h_series for every institution returned by publishing_institutions(), sorted by institution.
std::vector<HIndexSeries> h_series_all(const Corpus& corpus, const DocumentQuery& query,
                                       std::span<const int> years);

// ---------------------------------------------------------------------------
// Peer-review scores

struct ScoreSet {
  std::string institution;
  std::string discipline;
  double s = 0;
  double s_prime = 0;
  std::optional<double> s_output;
  std::optional<double> strength;
  std::optional<double> nci;
};

/// Funding-formula quality: p4 + 3/7 p3 + 1/7 p2.
double score_s(const QualityBands& bands);
double score_s(const QualityProfile& profile);

/// Concentrated-funding variant: p4 + 1/3 p3.
double score_s_prime(const QualityBands& bands);
double score_s_prime(const QualityProfile& profile);

/// score_s of the output sub-profile, absent when the profile has none.
std::optional<double> score_s_output(const QualityProfile& profile);

/// score_s × staff_fte. Throws std::invalid_argument when staff_fte <= 0.
double strength(const QualityProfile& profile);

ScoreSet score_profile(const QualityProfile& profile);
std::vector<ScoreSet> score_profiles(std::span<const QualityProfile> profiles);

// ---------------------------------------------------------------------------
// Citation measures per group, joined with scores for correlation and ranking

struct GroupMetrics {
  std::string institution;
  std::string discipline;
  std::map<int, std::int64_t> h;      // measurement year -> h over the assessment window
  std::map<int, std::int64_t> h_hat;  // measurement year -> h over the follow-up window
  std::optional<double> nci;
};

/// Merges h series (and optionally follow-up-window series) with NCI values
/// from profiles. Groups are keyed by (institution, normalized discipline).
std::vector<GroupMetrics> group_metrics(std::span<const HIndexSeries> series,
                                        std::span<const HIndexSeries> hat_series,
                                        std::span<const QualityProfile> profiles);

}  // namespace refh
