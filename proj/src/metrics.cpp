#include "refh/metrics.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "refh/error.hpp"

namespace refh {

std::int64_t citations_to_end_of(const PublicationRecord& record, int year) {
  std::int64_t total = 0;
  for (auto it = record.citations_by_year.begin();
       it != record.citations_by_year.end() && it->first <= year; ++it) {
    total += it->second;
  }
  return total;
}

std::int64_t compute_h(std::span<const std::int64_t> citation_counts) {
  // Counting pass: a count above n can only ever support h <= n, so clamp.
  const auto n = citation_counts.size();
  std::vector<std::size_t> at_least(n + 1, 0);
  for (auto c : citation_counts) {
    if (c <= 0) continue;
    ++at_least[std::min<std::size_t>(static_cast<std::size_t>(c), n)];
  }
  std::size_t cumulative = 0;
  for (std::size_t h = n; h > 0; --h) {
    cumulative += at_least[h];
    if (cumulative >= h) return static_cast<std::int64_t>(h);
  }
  return 0;
}

namespace {

std::int64_t h_of(std::span<const PublicationRecord> records, int measurement_year) {
  std::vector<std::int64_t> counts;
  counts.reserve(records.size());
  for (const auto& r : records) counts.push_back(citations_to_end_of(r, citation_cutoff(measurement_year)));
  return compute_h(counts);
}

void require_after_window_start(const DocumentQuery& query, int year) {
  if (year <= query.window.start_year) {
    throw std::invalid_argument("measurement year " + std::to_string(year) +
                                " must be after the window start " +
                                std::to_string(query.window.start_year));
  }
}

}  // namespace

std::int64_t departmental_h(const Corpus& corpus, const DocumentQuery& query, int measurement_year) {
  require_after_window_start(query, measurement_year);
  return h_of(filter_documents(corpus, query), measurement_year);
}

HIndexSeries h_series(const Corpus& corpus, const DocumentQuery& query, std::span<const int> years) {
  if (!std::is_sorted(years.begin(), years.end()) ||
      std::adjacent_find(years.begin(), years.end()) != years.end()) {
    throw std::invalid_argument("measurement years must be strictly ascending");
  }
  HIndexSeries out{query.institution, query.discipline, query.window, {}};
  if (years.empty()) return out;
  require_after_window_start(query, years.front());
  const auto docs = filter_documents(corpus, query);
  for (int y : years) out.values.emplace(y, h_of(docs, y));
  return out;
}

std::vector<HIndexSeries> h_series_all(const Corpus& corpus, const DocumentQuery& query,
                                       std::span<const int> years) {
  std::vector<HIndexSeries> out;
  for (const auto& inst : publishing_institutions(corpus, query)) {
    DocumentQuery q = query;
    q.institution = inst;
    out.push_back(h_series(corpus, q, years));
  }
  return out;
}

double score_s(const QualityBands& b) { return b.p4 + (3.0 * b.p3 + b.p2) / 7.0; }
double score_s(const QualityProfile& profile) { return score_s(profile.overall); }

double score_s_prime(const QualityBands& b) { return b.p4 + b.p3 / 3.0; }
double score_s_prime(const QualityProfile& profile) { return score_s_prime(profile.overall); }

std::optional<double> score_s_output(const QualityProfile& profile) {
  if (!profile.output) return std::nullopt;
  return score_s(*profile.output);
}

double strength(const QualityProfile& profile) {
  if (!(profile.staff_fte > 0)) {
    throw std::invalid_argument("strength needs a positive staff count for " + profile.institution);
  }
  return score_s(profile) * profile.staff_fte;
}

ScoreSet score_profile(const QualityProfile& profile) {
  ScoreSet out{profile.institution, profile.discipline, score_s(profile), score_s_prime(profile),
               score_s_output(profile), std::nullopt, profile.nci};
  if (profile.staff_fte > 0) out.strength = strength(profile);
  return out;
}

std::vector<ScoreSet> score_profiles(std::span<const QualityProfile> profiles) {
  std::vector<ScoreSet> out;
  out.reserve(profiles.size());
  for (const auto& p : profiles) out.push_back(score_profile(p));
  return out;
}

std::vector<GroupMetrics> group_metrics(std::span<const HIndexSeries> series,
                                        std::span<const HIndexSeries> hat_series,
                                        std::span<const QualityProfile> profiles) {
  std::map<std::tuple<std::string, std::string>, GroupMetrics> groups;
  auto group = [&](const std::string& inst, const std::string& disc) -> GroupMetrics& {
    auto [it, inserted] = groups.try_emplace({inst, normalize_label(disc)});
    if (inserted) {
      it->second.institution = inst;
      it->second.discipline = disc;
    }
    return it->second;
  };
  for (const auto& s : series) {
    auto& g = group(s.institution, s.discipline);
    g.h.insert(s.values.begin(), s.values.end());
  }
  for (const auto& s : hat_series) {
    auto& g = group(s.institution, s.discipline);
    g.h_hat.insert(s.values.begin(), s.values.end());
  }
  for (const auto& p : profiles) {
    if (p.nci) group(p.institution, p.discipline).nci = p.nci;
  }
  std::vector<GroupMetrics> out;
  out.reserve(groups.size());
  for (auto& [key, g] : groups) out.push_back(std::move(g));
  return out;
}

}  // namespace refh
