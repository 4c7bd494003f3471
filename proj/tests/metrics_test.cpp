#include "refh/metrics.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "refh/synth.hpp"
#include "test_util.hpp"

namespace {

using namespace refh;
using refh::testing::make_profile;
using refh::testing::make_record;

// Sort descending and scan: h is the last 1-based position whose count is >= position.
std::int64_t sort_scan_h(std::vector<std::int64_t> counts) {
  std::sort(counts.begin(), counts.end(), std::greater<>());
  std::int64_t h = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] >= static_cast<std::int64_t>(i + 1)) h = static_cast<std::int64_t>(i + 1);
  }
  return h;
}

TEST(CitationsToEndOf, Examples) {
  EXPECT_EQ(citations_to_end_of(make_record("p", 2001, {"A"}, {"x"}), 2010), 0);
  const auto rec = make_record("p", 2001, {"A"}, {"x"}, {{2002, 3}, {2003, 5}, {2008, 9}});
  EXPECT_EQ(citations_to_end_of(rec, 2007), 3 + 5);
  EXPECT_EQ(citations_to_end_of(make_record("p", 2001, {"A"}, {"x"}, {{2002, 3}}), 2001), 0);
}

TEST(ComputeH, Examples) {
  EXPECT_EQ(compute_h({}), 0);
  const std::vector<std::int64_t> a = {10, 5, 3, 2, 1};
  EXPECT_EQ(compute_h(a), sort_scan_h(a));
  EXPECT_EQ(compute_h(a), 3);
  const std::vector<std::int64_t> b = {4, 4, 4, 4};
  EXPECT_EQ(compute_h(b), sort_scan_h(b));
  EXPECT_EQ(compute_h(b), 4);
  const std::vector<std::int64_t> single = {7};
  EXPECT_EQ(compute_h(single), 1);
  const std::vector<std::int64_t> zeros = {0, 0, 0};
  EXPECT_EQ(compute_h(zeros), 0);
}

TEST(ComputeH, MatchesSortScanOnRandomMultisets) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto n = std::uniform_int_distribution<int>(0, 200)(rng);
    const auto cap = std::uniform_int_distribution<int>(0, 1000)(rng);
    std::vector<std::int64_t> counts(n);
    for (auto& c : counts) c = std::uniform_int_distribution<int>(0, cap)(rng);
    ASSERT_EQ(compute_h(counts), sort_scan_h(counts)) << "trial " << trial;
  }
}

TEST(ComputeH, BoundsAndMonotonicity) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const auto n = std::uniform_int_distribution<int>(1, 60)(rng);
    std::vector<std::int64_t> counts(n);
    for (auto& c : counts) c = std::uniform_int_distribution<int>(0, 80)(rng);
    const auto h = compute_h(counts);
    EXPECT_GE(h, 0);
    EXPECT_LE(h, std::min<std::int64_t>(n, *std::max_element(counts.begin(), counts.end())));

    auto bumped = counts;
    bumped[std::uniform_int_distribution<int>(0, n - 1)(rng)] += std::uniform_int_distribution<int>(1, 20)(rng);
    EXPECT_GE(compute_h(bumped), h);
  }
}

// ---------------------------------------------------------------------------

Corpus three_paper_fixture() {
  Corpus c;
  c.discipline_maps = standard_discipline_maps();
  c.publications = {
      make_record("a", 2003, {"Bath"}, {"Physics and Astronomy"}, {{2005, 2}, {2008, 3}}),
      make_record("b", 2004, {"Bath"}, {"Physics and Astronomy"}, {{2006, 1}, {2007, 1}}),
      make_record("c", 2005, {"Bath"}, {"Physics and Astronomy"}, {{2006, 1}}),
  };
  return c;
}

TEST(DepartmentalH, ThreePaperFixture) {
  const auto corpus = three_paper_fixture();
  const DocumentQuery q{"GB", {2001, 2007}, "physics", "Bath"};
  // through 2007: [2, 2, 1]
  EXPECT_EQ(departmental_h(corpus, q, 2008), 2);
  // through 2008: [5, 2, 1]
  EXPECT_EQ(departmental_h(corpus, q, 2009), 2);
  EXPECT_EQ(departmental_h(corpus, q, 2009), oracle_h(filter_documents(corpus, q), 2008));
}

TEST(DepartmentalH, NoMatchingPublications) {
  const auto corpus = three_paper_fixture();
  EXPECT_EQ(departmental_h(corpus, {"GB", {2001, 2007}, "physics", "Leeds"}, 2008), 0);
  EXPECT_EQ(departmental_h(corpus, {"GB", {2001, 2007}, "chemistry", "Bath"}, 2008), 0);
}

TEST(DepartmentalH, MeasurementYearMustFollowWindowStart) {
  const auto corpus = three_paper_fixture();
  EXPECT_THROW(departmental_h(corpus, {"GB", {2001, 2007}, "physics", "Bath"}, 2001), std::invalid_argument);
}

TEST(HSeries, Examples) {
  auto corpus = three_paper_fixture();
  const DocumentQuery q{"GB", {2001, 2007}, "physics", "Bath"};
  const std::vector<int> years = {2008, 2009, 2010, 2011, 2012, 2013, 2014};

  auto uncited = corpus;
  for (auto& r : uncited.publications) r.citations_by_year.clear();
  for (const auto& [year, h] : h_series(uncited, q, years).values) EXPECT_EQ(h, 0) << year;

  const std::vector<int> one = {2008};
  const auto single = h_series(corpus, q, one);
  ASSERT_EQ(single.values.size(), 1u);
  EXPECT_EQ(single.values.at(2008), departmental_h(corpus, q, 2008));
  EXPECT_EQ(single.window, q.window);

  const std::vector<int> unordered = {2009, 2008};
  EXPECT_THROW(h_series(corpus, q, unordered), std::invalid_argument);
}

TEST(HSeries, SyntheticSeriesNonDecreasingAndMatchesOracle) {
  const std::vector<int> years = {2008, 2009, 2010, 2011, 2012, 2013, 2014};
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    SynthConfig config;
    config.seed = seed;
    config.n_institutions = 8;
    config.papers_min = 20;
    config.papers_max = 50;
    const auto corpus = generate(config);
    const DocumentQuery base{"GB", {2001, 2007}, "physics", ""};
    for (const auto& series : h_series_all(corpus, base, years)) {
      DocumentQuery q = base;
      q.institution = series.institution;
      const auto docs = filter_documents(corpus, q);
      std::int64_t prev = 0;
      for (const auto& [year, h] : series.values) {
        EXPECT_EQ(h, oracle_h(docs, year - 1));
        EXPECT_GE(h, prev);
        prev = h;
      }
    }
  }
}

// ---------------------------------------------------------------------------

TEST(Scores, Examples) {
  EXPECT_DOUBLE_EQ(score_s(QualityBands{100, 0, 0, 0, 0}), 100.0);
  EXPECT_NEAR(score_s(QualityBands{20, 40, 30, 10, 0}), 20.0 + 120.0 / 7 + 30.0 / 7, 1e-12);
  EXPECT_EQ(score_s(QualityBands{0, 0, 0, 0, 100}), 0.0);

  EXPECT_DOUBLE_EQ(score_s_prime(QualityBands{100, 0, 0, 0, 0}), 100.0);
  EXPECT_NEAR(score_s_prime(QualityBands{0, 60, 40, 0, 0}), 20.0, 1e-12);
  EXPECT_EQ(score_s_prime(QualityBands{0, 0, 100, 0, 0}), 0.0);

  EXPECT_NEAR(score_s(QualityBands{0, 100, 0, 0, 0}), 300.0 / 7, 1e-12);
  EXPECT_NEAR(score_s_prime(QualityBands{0, 100, 0, 0, 0}), 100.0 / 3, 1e-12);
}

TEST(Scores, OutputAndStrength) {
  auto profile = make_profile("A", "physics", {20, 40, 30, 10, 0}, 10);
  EXPECT_FALSE(score_s_output(profile).has_value());
  profile.output = QualityBands{100, 0, 0, 0, 0};
  EXPECT_DOUBLE_EQ(*score_s_output(profile), 100.0);
  profile.output = QualityBands{20, 40, 30, 10, 0};
  EXPECT_NEAR(*score_s_output(profile), 290.0 / 7, 1e-12);

  EXPECT_NEAR(strength(profile), 2900.0 / 7, 1e-10);
  EXPECT_DOUBLE_EQ(strength(make_profile("A", "physics", {100, 0, 0, 0, 0}, 1)), 100.0);
  EXPECT_THROW(strength(make_profile("A", "physics", {100, 0, 0, 0, 0}, 0)), std::invalid_argument);
}

TEST(Scores, LinearInProfileMixing) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(0, 1);
  auto random_bands = [&] {
    double w[5];
    double total = 0;
    for (auto& x : w) total += (x = unit(rng));
    return QualityBands{100 * w[0] / total, 100 * w[1] / total, 100 * w[2] / total, 100 * w[3] / total,
                        100 * w[4] / total};
  };
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = random_bands();
    const auto b = random_bands();
    const double alpha = unit(rng);
    const QualityBands mix{alpha * a.p4 + (1 - alpha) * b.p4, alpha * a.p3 + (1 - alpha) * b.p3,
                           alpha * a.p2 + (1 - alpha) * b.p2, alpha * a.p1 + (1 - alpha) * b.p1,
                           alpha * a.pu + (1 - alpha) * b.pu};
    EXPECT_NEAR(score_s(mix), alpha * score_s(a) + (1 - alpha) * score_s(b), 1e-9);
    EXPECT_NEAR(score_s_prime(mix), alpha * score_s_prime(a) + (1 - alpha) * score_s_prime(b), 1e-9);
  }
}

TEST(Scores, ScoreProfileCarriesEveryField) {
  auto profile = make_profile("A", "physics", {0, 100, 0, 0, 0}, 3);
  profile.nci = 1.25;
  const auto set = score_profile(profile);
  EXPECT_EQ(set.institution, "A");
  EXPECT_NEAR(set.s, 300.0 / 7, 1e-12);
  EXPECT_NEAR(set.s_prime, 100.0 / 3, 1e-12);
  EXPECT_FALSE(set.s_output.has_value());
  EXPECT_NEAR(*set.strength, 900.0 / 7, 1e-12);
  EXPECT_EQ(set.nci, 1.25);
}

TEST(GroupMetrics, MergesSeriesAndNci) {
  HIndexSeries h{"A", "Physics", {2001, 2007}, {{2008, 4}, {2009, 5}}};
  HIndexSeries hat{"A", "physics", {2008, 2013}, {{2014, 3}}};
  auto profile = make_profile("A", "physics", {100, 0, 0, 0, 0});
  profile.nci = 1.5;
  const std::vector<HIndexSeries> hs = {h};
  const std::vector<HIndexSeries> hats = {hat};
  const std::vector<QualityProfile> profiles = {profile};
  const auto groups = group_metrics(hs, hats, profiles);
  ASSERT_EQ(groups.size(), 1u);
  EXPECT_EQ(groups[0].h.at(2009), 5);
  EXPECT_EQ(groups[0].h_hat.at(2014), 3);
  EXPECT_EQ(groups[0].nci, 1.5);
}

}  // namespace
