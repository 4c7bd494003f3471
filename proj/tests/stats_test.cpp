#include "refh/stats.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "refh/error.hpp"
#include "test_util.hpp"

namespace {

using namespace refh;

// Definitional Pearson: sum of co-deviations over root of squared deviations.
double naive_pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

// Rank by counting: 1 + #smaller + (#equal - 1) / 2.
std::vector<double> naive_ranks(const std::vector<double>& x) {
  std::vector<double> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    double less = 0, equal = 0;
    for (double v : x) {
      less += v < x[i];
      equal += v == x[i];
    }
    r[i] = 1 + less + (equal - 1) / 2;
  }
  return r;
}

// Two-sided Student-t tail by Simpson integration of the density over [0, |t|].
double simpson_two_sided_p(double t, double df) {
  const double log_norm = std::lgamma((df + 1) / 2) - std::lgamma(df / 2) - 0.5 * std::log(df * M_PI);
  auto pdf = [&](double u) { return std::exp(log_norm - (df + 1) / 2 * std::log1p(u * u / df)); };
  const int steps = 20000;
  const double a = std::abs(t);
  const double h = a / steps;
  double sum = pdf(0) + pdf(a);
  for (int i = 1; i < steps; ++i) sum += (i % 2 ? 4 : 2) * pdf(i * h);
  const double half_mass = sum * h / 3;
  return 1 - 2 * half_mass;
}

TEST(Pearson, Examples) {
  const std::vector<double> a = {1, 2, 3};
  const std::vector<double> rev = {3, 2, 1};
  EXPECT_DOUBLE_EQ(pearson(a, a), 1.0);
  EXPECT_DOUBLE_EQ(pearson(a, rev), -1.0);
  const std::vector<double> x = {1, 2, 3, 4};
  const std::vector<double> y = {1, 3, 2, 4};
  EXPECT_NEAR(pearson(x, y), 4.0 / 5.0, 1e-15);
}

TEST(Pearson, Preconditions) {
  const std::vector<double> three = {1, 2, 3};
  const std::vector<double> two = {1, 2};
  const std::vector<double> flat = {5, 5, 5};
  EXPECT_THROW(pearson(three, two), std::invalid_argument);
  EXPECT_THROW(pearson(two, two), std::invalid_argument);
  EXPECT_THROW(pearson(three, flat), std::invalid_argument);
}

TEST(Pearson, SymmetricAndAffineInvariant) {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 60)(rng);
    std::vector<double> x(n), y(n);
    for (int i = 0; i < n; ++i) {
      x[i] = normal(rng);
      y[i] = 0.5 * x[i] + normal(rng);
    }
    const double r = pearson(x, y);
    EXPECT_NEAR(r, pearson(y, x), 1e-12);
    EXPECT_NEAR(r, naive_pearson(x, y), 1e-12);
    std::vector<double> ax(n);
    std::transform(x.begin(), x.end(), ax.begin(), [](double v) { return 3.5 * v - 12.0; });
    EXPECT_NEAR(r, pearson(ax, y), 1e-12);
    EXPECT_LE(std::abs(r), 1.0);
  }
}

TEST(FractionalRanks, Examples) {
  EXPECT_EQ(fractional_ranks(std::vector<double>{10, 20, 30}), (std::vector<double>{1, 2, 3}));
  EXPECT_EQ(fractional_ranks(std::vector<double>{1, 2, 2, 3}), (std::vector<double>{1, 2.5, 2.5, 4}));
  EXPECT_EQ(fractional_ranks(std::vector<double>{5, 5, 5}), (std::vector<double>{2, 2, 2}));
  EXPECT_EQ(fractional_ranks(std::vector<double>{3, 1, 2}), (std::vector<double>{3, 1, 2}));
}

TEST(FractionalRanks, MatchesCountingDefinition) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 80)(rng);
    std::vector<double> x(n);
    for (auto& v : x) v = std::uniform_int_distribution<int>(0, 10)(rng);
    EXPECT_EQ(fractional_ranks(x), naive_ranks(x));
  }
}

TEST(Spearman, Examples) {
  const std::vector<double> inc = {0.5, 1, 7, 9, 12};
  EXPECT_DOUBLE_EQ(spearman(inc, inc), 1.0);
  const std::vector<double> x = {1, 2, 2, 3};
  const std::vector<double> y = {10, 20, 30, 40};
  EXPECT_NEAR(spearman(x, y), 4.5 / std::sqrt(22.5), 1e-14);
  EXPECT_NEAR(spearman(x, y), 0.9486832980505138, 1e-14);
}

TEST(Spearman, Properties) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 50)(rng);
    std::vector<double> x(n), y(n);
    std::iota(x.begin(), x.end(), 1.0);
    std::iota(y.begin(), y.end(), 1.0);
    std::shuffle(x.begin(), x.end(), rng);
    std::shuffle(y.begin(), y.end(), rng);
    if (n == 3 && x == y) continue;

    // permutations of 1..n are their own ranks
    EXPECT_NEAR(spearman(x, y), pearson(x, y), 1e-12);

    double d2 = 0;
    for (int i = 0; i < n; ++i) d2 += (x[i] - y[i]) * (x[i] - y[i]);
    const double classical = 1 - 6 * d2 / (static_cast<double>(n) * (static_cast<double>(n) * n - 1));
    EXPECT_NEAR(spearman(x, y), classical, 1e-12);

    std::vector<double> tx(n);
    std::transform(x.begin(), x.end(), tx.begin(), [](double v) { return std::exp(v / 7) - v * v * v; });
    std::vector<double> ty(n);
    std::transform(y.begin(), y.end(), ty.begin(), [](double v) { return std::log(v) * 2 + 1; });
    EXPECT_NEAR(spearman(x, y), -spearman(tx, y), 1e-12);  // exp(v/7) - v^3 is decreasing on [1, 50]
    EXPECT_NEAR(spearman(x, y), spearman(x, ty), 1e-12);
  }
}

TEST(Spearman, WithTiesMatchesPearsonOnNaiveRanks) {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(4, 100)(rng);
    std::vector<double> x(n), y(n);
    for (int i = 0; i < n; ++i) {
      x[i] = std::uniform_int_distribution<int>(0, 6)(rng);
      y[i] = x[i] + std::uniform_int_distribution<int>(0, 4)(rng);
    }
    if (std::all_of(x.begin(), x.end(), [&](double v) { return v == x[0]; })) continue;
    if (std::all_of(y.begin(), y.end(), [&](double v) { return v == y[0]; })) continue;
    EXPECT_NEAR(spearman(x, y), naive_pearson(naive_ranks(x), naive_ranks(y)), 1e-10);
  }
}

// ---------------------------------------------------------------------------

TEST(Significance, Examples) {
  for (std::size_t n : {3u, 10u, 100u}) {
    const auto s = significance(0.0, n, CorrelationKind::pearson);
    EXPECT_DOUBLE_EQ(s.p_value, 1.0);
    EXPECT_FALSE(s.significant);
  }

  // t = 0.8 sqrt(28 / 0.36) = 7.0553...
  const double t = 0.8 * std::sqrt(28 / 0.36);
  EXPECT_NEAR(t, 7.055336829505575, 1e-12);
  const auto strong = significance(0.8, 30, CorrelationKind::pearson);
  EXPECT_TRUE(strong.significant);
  EXPECT_NEAR(strong.p_value, simpson_two_sided_p(t, 28), 1e-9);
  EXPECT_NEAR(strong.p_value, 1.1267139416426422e-07, 1e-12);

  // r = 0.5, n = 5: t = 1, df = 3
  const auto weak = significance(0.5, 5, CorrelationKind::spearman);
  EXPECT_FALSE(weak.significant);
  EXPECT_NEAR(weak.p_value, simpson_two_sided_p(1.0, 3), 1e-9);
  EXPECT_NEAR(weak.p_value, 0.39100221895577053, 1e-12);
}

TEST(Significance, PerfectCorrelationConvention) {
  for (double r : {1.0, -1.0}) {
    const auto s = significance(r, 10, CorrelationKind::pearson);
    EXPECT_EQ(s.p_value, 0.0);
    EXPECT_TRUE(s.significant);
  }
  EXPECT_THROW(significance(0.5, 2, CorrelationKind::pearson), std::invalid_argument);
}

TEST(Significance, MatchesQuadratureOracle) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const double r = std::uniform_real_distribution<double>(-0.95, 0.95)(rng);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(3, 60)(rng);
    const double df = static_cast<double>(n - 2);
    const double t = r * std::sqrt(df / (1 - r * r));
    EXPECT_NEAR(significance(r, n, CorrelationKind::pearson).p_value, simpson_two_sided_p(t, df), 1e-8)
        << "r=" << r << " n=" << n;
  }
}

TEST(Significance, Monotone) {
  for (std::size_t n : {4u, 12u, 39u}) {
    double prev = 1.0;
    for (double r = 0.05; r < 0.99; r += 0.05) {
      const double p = significance(r, n, CorrelationKind::pearson).p_value;
      EXPECT_LT(p, prev);
      EXPECT_DOUBLE_EQ(p, significance(-r, n, CorrelationKind::pearson).p_value);
      prev = p;
    }
  }
  for (double r : {0.2, 0.5, -0.7}) {
    double prev = 1.0;
    for (std::size_t n = 4; n <= 60; ++n) {
      const double p = significance(r, n, CorrelationKind::spearman).p_value;
      EXPECT_LT(p, prev);
      prev = p;
    }
  }
}

// ---------------------------------------------------------------------------

struct Fixture {
  std::vector<ScoreSet> scores;
  std::vector<GroupMetrics> metrics;
};

Fixture proportional_fixture() {
  Fixture f;
  for (int i = 1; i <= 5; ++i) {
    const std::string name = "I" + std::to_string(i);
    f.scores.push_back({name, "physics", 10.0 * i, 5.0 * i, std::nullopt, 100.0 * i, std::nullopt});
    f.metrics.push_back({name, "physics", {{2008, 3 * i}, {2009, 3 * i}}, {}, std::nullopt});
  }
  return f;
}

TEST(CorrelationTable, ProportionalColumns) {
  const auto f = proportional_fixture();
  const std::vector<MeasurePair> pairs = {MeasurePair::parse("s:h_2008"), MeasurePair::parse("strength:h_2009")};
  const auto reports = correlation_table(f.scores, f.metrics, pairs, "physics");
  ASSERT_EQ(reports.size(), 2u);
  for (const auto& r : reports) {
    EXPECT_DOUBLE_EQ(r.pearson_r, 1.0);
    EXPECT_DOUBLE_EQ(r.spearman_rho, 1.0);
    EXPECT_EQ(r.n, 5u);
    EXPECT_EQ(r.dropped, 0u);
    EXPECT_EQ(r.discipline, "physics");
  }
  EXPECT_EQ(reports[1].measure_x, "strength");
  EXPECT_EQ(reports[1].measure_y, "h_2009");
}

TEST(CorrelationTable, MissingValuesAreDroppedAndCounted) {
  auto f = proportional_fixture();
  f.scores.push_back({"OnlyScored", "physics", 1, 1, std::nullopt, 1, std::nullopt});
  f.metrics.push_back({"OnlyCited", "physics", {{2008, 1}}, {}, std::nullopt});
  const std::vector<MeasurePair> pairs = {MeasurePair::parse("s:h_2008")};
  const auto r = correlation_table(f.scores, f.metrics, pairs, "physics").at(0);
  EXPECT_EQ(r.n, 5u);
  EXPECT_EQ(r.dropped, 2u);
}

TEST(CorrelationTable, InsufficientDataNamesThePair) {
  const auto f = proportional_fixture();
  const std::vector<MeasurePair> output = {MeasurePair::parse("s_output:h_2008")};
  try {
    correlation_table(f.scores, f.metrics, output, "physics");
    FAIL();
  } catch (const InsufficientDataError& e) {
    EXPECT_NE(std::string(e.what()).find("s_output vs h_2008"), std::string::npos) << e.what();
  }
  const std::vector<MeasurePair> nci = {MeasurePair::parse("s:i")};
  EXPECT_THROW(correlation_table(f.scores, f.metrics, nci, "physics"), InsufficientDataError);
  const std::vector<MeasurePair> other = {MeasurePair::parse("s:h_2008")};
  EXPECT_THROW(correlation_table(f.scores, f.metrics, other, "chemistry"), InsufficientDataError);
}

TEST(CorrelationTable, TwentyInstitutionsMatchDefinitionalOracle) {
  std::mt19937_64 rng(20);
  Fixture f;
  std::vector<double> xs, ys;
  for (int i = 0; i < 20; ++i) {
    const std::string name = "HEI-" + std::to_string(100 + i);
    const double s = std::uniform_real_distribution<double>(10, 60)(rng);
    const std::int64_t h = std::uniform_int_distribution<int>(5, 40)(rng);
    f.scores.push_back({name, "biology", s, s / 2, std::nullopt, s * 10, std::nullopt});
    f.metrics.push_back({name, "biology", {{2008, h}}, {}, std::nullopt});
    xs.push_back(s);
    ys.push_back(static_cast<double>(h));
  }
  const std::vector<MeasurePair> pairs = {MeasurePair::parse("s:h_2008")};
  const auto r = correlation_table(f.scores, f.metrics, pairs, "biology").at(0);
  EXPECT_NEAR(r.pearson_r, naive_pearson(xs, ys), 1e-10);
  EXPECT_NEAR(r.spearman_rho, naive_pearson(naive_ranks(xs), naive_ranks(ys)), 1e-10);
  EXPECT_EQ(r.p_pearson, significance(r.pearson_r, 20, CorrelationKind::pearson).p_value);
  EXPECT_EQ(r.significant_spearman, r.p_spearman < 0.05);
}

TEST(MeasurePairParse, RejectsBadInput) {
  EXPECT_THROW(MeasurePair::parse("s"), std::invalid_argument);
  EXPECT_THROW(MeasurePair::parse("s:"), std::invalid_argument);
  EXPECT_THROW(MeasurePair::parse("s:bogus"), std::invalid_argument);
  const auto p = MeasurePair::parse("s_prime:h_hat_2014");
  EXPECT_EQ(p.x, "s_prime");
  EXPECT_EQ(p.y, "h_hat_2014");
}

// ---------------------------------------------------------------------------

TEST(CorrelationSeries, ConstantAcrossYears) {
  const auto f = proportional_fixture();
  const std::vector<int> years = {2008, 2009};
  const auto series = correlation_series(f.scores, f.metrics, "s", years, "physics");
  ASSERT_EQ(series.by_year.size(), 2u);
  EXPECT_DOUBLE_EQ(series.by_year.at(2008).pearson_r, series.by_year.at(2009).pearson_r);
  EXPECT_DOUBLE_EQ(series.by_year.at(2008).p_spearman, series.by_year.at(2009).p_spearman);
  EXPECT_FALSE(series.baseline.has_value());

  const std::vector<int> one = {2008};
  EXPECT_EQ(correlation_series(f.scores, f.metrics, "s", one, "physics").by_year.size(), 1u);
}

TEST(CorrelationSeries, RecomposesFromPerYearTables) {
  std::mt19937_64 rng(31);
  Fixture f;
  for (int i = 0; i < 15; ++i) {
    const std::string name = "U" + std::to_string(i);
    const double s = std::uniform_real_distribution<double>(5, 50)(rng);
    GroupMetrics g{name, "sociology", {}, {}, std::uniform_real_distribution<double>(0.5, 2)(rng)};
    std::int64_t h = std::uniform_int_distribution<int>(1, 10)(rng);
    for (int y = 2008; y <= 2014; ++y) g.h[y] = (h += std::uniform_int_distribution<int>(0, 3)(rng));
    f.scores.push_back({name, "sociology", s, s, std::nullopt, s, g.nci});
    f.metrics.push_back(g);
  }
  const std::vector<int> years = {2008, 2009, 2010, 2011, 2012, 2013, 2014};
  const auto series = correlation_series(f.scores, f.metrics, "s", years, "sociology");
  ASSERT_TRUE(series.baseline.has_value());
  EXPECT_EQ(series.baseline->measure_y, "i");
  for (int y : years) {
    const std::vector<MeasurePair> pairs = {{"s", "h_" + std::to_string(y)}};
    const auto direct = correlation_table(f.scores, f.metrics, pairs, "sociology").at(0);
    EXPECT_EQ(series.by_year.at(y).pearson_r, direct.pearson_r);
    EXPECT_EQ(series.by_year.at(y).spearman_rho, direct.spearman_rho);
  }
}

TEST(Correlate, ReportsBothCoefficients) {
  const std::vector<double> x = {1, 2, 3, 4};
  const std::vector<double> y = {1, 3, 2, 4};
  const auto r = correlate(x, y);
  EXPECT_EQ(r.n, 4u);
  EXPECT_NEAR(r.pearson_r, 0.8, 1e-15);
  EXPECT_NEAR(r.spearman_rho, 0.8, 1e-15);
  EXPECT_FALSE(r.significant_pearson);
}

}  // namespace
