#include "refh/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <stdexcept>

#include "json.hpp"

namespace refh {

namespace {

// std:: distributions are implementation-defined; only the engine's output
// sequence is fixed by the standard, so the transforms are done here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }  // [0, 1)

  double normal() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }

  bool chance(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

constexpr std::int64_t kMaxCitations = 1'000'000;
constexpr const char* kForeignCountry = "US";
constexpr const char* kOffTopicCategory = "Mathematics";

// Integer percentages summing to exactly 100, largest remainder first.
QualityBands bands_from_quality(double z) {
  const double m = 1.0 / (1.0 + std::exp(-1.5 * z));
  // Binomial(4, m): k = 4 is 4*, k = 0 is unclassified.
  double prob[5];
  for (int k = 0; k <= 4; ++k) {
    static constexpr double choose[] = {1, 4, 6, 4, 1};
    prob[k] = choose[k] * std::pow(m, k) * std::pow(1 - m, 4 - k);
  }
  int pct[5];
  double rem[5];
  int total = 0;
  for (int k = 0; k < 5; ++k) {
    pct[k] = static_cast<int>(std::floor(prob[k] * 100));
    rem[k] = prob[k] * 100 - pct[k];
    total += pct[k];
  }
  while (total < 100) {
    int best = 0;
    for (int k = 1; k < 5; ++k) {
      if (rem[k] > rem[best]) best = k;
    }
    ++pct[best];
    rem[best] = -1;
    ++total;
  }
  return {double(pct[4]), double(pct[3]), double(pct[2]), double(pct[1]), double(pct[0])};
}

std::int64_t draw_total_citations(Rng& rng, const CitationModel& model, double shift) {
  double x = 0;
  if (const auto* ln = std::get_if<LogNormalCitations>(&model)) {
    x = std::exp(ln->mu + shift + ln->sigma * rng.normal());
  } else {
    const auto& pl = std::get<PowerLawCitations>(model);
    const double u = 1.0 - rng.uniform();
    x = pl.x_min * std::pow(u, -1.0 / (pl.alpha - 1.0)) * std::exp(shift);
  }
  return static_cast<std::int64_t>(std::llround(std::min(x, double(kMaxCitations))));
}

std::string institution_name(int i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "HEI-%03d", i + 1);
  return buf;
}

std::string pub_name(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "P%07zu", i + 1);
  return buf;
}

DisciplineMap map_for(const std::string& discipline) {
  for (auto& m : standard_discipline_maps()) {
    if (normalize_label(m.discipline) == normalize_label(discipline)) return m;
  }
  return {discipline, {discipline}};
}

nlohmann::ordered_json config_json(const SynthConfig& c) {
  nlohmann::ordered_json model;
  if (const auto* ln = std::get_if<LogNormalCitations>(&c.citation_model)) {
    model = {{"kind", "lognormal"}, {"mu", ln->mu}, {"sigma", ln->sigma}};
  } else {
    const auto& pl = std::get<PowerLawCitations>(c.citation_model);
    model = {{"kind", "power_law"}, {"alpha", pl.alpha}, {"x_min", pl.x_min}};
  }
  return {{"seed", c.seed},
          {"n_institutions", c.n_institutions},
          {"papers_per_institution", {c.papers_min, c.papers_max}},
          {"window", {c.window.start_year, c.window.end_year}},
          {"last_citing_year", c.last_citing_year},
          {"citation_model", model},
          {"accrual", c.accrual},
          {"quality_link", c.quality_link},
          {"quality_effect", c.quality_effect},
          {"profile_noise", c.profile_noise},
          {"country", c.country},
          {"foreign_fraction", c.foreign_fraction},
          {"coaffiliation_fraction", c.coaffiliation_fraction},
          {"disciplines", c.disciplines}};
}

}  // namespace

void SynthConfig::validate() const {
  auto fail = [](const std::string& what) { throw std::invalid_argument("synth config: " + what); };
  auto unit = [](double v) { return v >= 0 && v <= 1; };
  if (n_institutions < 1) fail("n_institutions must be positive");
  if (papers_min < 1 || papers_max < papers_min) fail("papers_per_institution must be a positive range");
  if (window.start_year > window.end_year) fail("window start after end");
  if (last_citing_year < window.end_year) fail("last_citing_year before the window end");
  if (!(accrual > 0 && accrual < 1)) fail("accrual must lie in (0, 1)");
  if (!unit(quality_link)) fail("quality_link must lie in [0, 1]");
  if (!std::isfinite(quality_effect)) fail("quality_effect must be finite");
  if (!(profile_noise >= 0) || !std::isfinite(profile_noise)) fail("profile_noise must be >= 0");
  if (!unit(foreign_fraction) || !unit(coaffiliation_fraction)) fail("fractions must lie in [0, 1]");
  if (country.empty()) fail("country is required");
  if (disciplines.empty()) fail("at least one discipline is required");
  if (const auto* ln = std::get_if<LogNormalCitations>(&citation_model)) {
    if (!std::isfinite(ln->mu) || !(ln->sigma > 0) || !std::isfinite(ln->sigma)) {
      fail("lognormal needs finite mu and sigma > 0");
    }
  } else {
    const auto& pl = std::get<PowerLawCitations>(citation_model);
    if (!(pl.alpha > 1) || !std::isfinite(pl.alpha) || !(pl.x_min > 0) || !std::isfinite(pl.x_min)) {
      fail("power_law needs alpha > 1 and x_min > 0");
    }
  }
}

Corpus generate(const SynthConfig& config) {
  config.validate();
  Rng rng(config.seed);
  Corpus corpus;
  for (const auto& d : config.disciplines) corpus.discipline_maps.push_back(map_for(d));

  const int n = config.n_institutions;
  const double link = config.quality_link;
  const double independent = std::sqrt(1.0 - link * link);

  std::vector<double> quality(n);
  for (auto& q : quality) q = rng.normal();

  for (int i = 0; i < n; ++i) {
    for (const auto& d : corpus.discipline_maps) {
      const double z = link * quality[i] + independent * rng.normal();
      const double z_out = z + config.profile_noise * rng.normal();
      const double staff = std::round((10.0 + 40.0 * rng.uniform()) * 10.0) / 10.0;
      const double nci = std::round(std::exp(0.5 * link * quality[i] + 0.3 * rng.normal()) * 100.0) / 100.0;
      corpus.profiles.push_back(
          {institution_name(i), d.discipline, bands_from_quality(z), bands_from_quality(z_out), staff, nci});
    }
  }

  for (int i = 0; i < n; ++i) {
    const int papers = rng.between(config.papers_min, config.papers_max);
    const double shift = link * config.quality_effect * quality[i];
    for (int k = 0; k < papers; ++k) {
      PublicationRecord rec;
      rec.pub_id = pub_name(corpus.publications.size());
      rec.pub_year = rng.between(config.window.start_year, config.window.end_year);
      rec.country = rng.chance(config.foreign_fraction) ? kForeignCountry : config.country;

      const auto& map = corpus.discipline_maps[rng.below(corpus.discipline_maps.size())];
      rec.categories.push_back(map.categories[rng.below(map.categories.size())]);
      if (rng.chance(0.15)) rec.categories.push_back(kOffTopicCategory);

      rec.affiliations.push_back(institution_name(i));
      if (n > 1 && rng.chance(config.coaffiliation_fraction)) {
        int other = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
        if (other >= i) ++other;
        rec.affiliations.push_back(institution_name(other));
      }

      // Cumulative geometric accrual: through k years after publication a
      // paper has collected round(T (1 - accrual^(k+1))) citations.
      const auto total = draw_total_citations(rng, config.citation_model, shift);
      std::int64_t so_far = 0;
      for (int year = rec.pub_year; year <= config.last_citing_year; ++year) {
        const int k = year - rec.pub_year;
        const auto cumulative =
            static_cast<std::int64_t>(std::llround(double(total) * (1.0 - std::pow(config.accrual, k + 1))));
        if (cumulative > so_far) rec.citations_by_year.emplace(year, cumulative - so_far);
        so_far = std::max(so_far, cumulative);
      }
      corpus.publications.push_back(std::move(rec));
    }
  }
  return corpus;
}

std::string manifest_json(const SynthConfig& config) {
  nlohmann::ordered_json doc = {{"generator", "refh synth"},
                                {"generator_version", kSynthGeneratorVersion},
                                {"rng", kSynthRngName},
                                {"config", config_json(config)}};
  return doc.dump(2) + "\n";
}

std::int64_t oracle_h(std::span<const PublicationRecord> records, int cutoff_year) {
  std::vector<std::int64_t> cited;
  cited.reserve(records.size());
  for (const auto& r : records) {
    std::int64_t c = 0;
    for (const auto& [year, count] : r.citations_by_year) {
      if (year <= cutoff_year) c += count;
    }
    cited.push_back(c);
  }
  std::int64_t best = 0;
  for (std::int64_t candidate = 0; candidate <= static_cast<std::int64_t>(records.size()); ++candidate) {
    const auto supporting = std::count_if(cited.begin(), cited.end(), [&](auto c) { return c >= candidate; });
    if (supporting >= candidate) best = candidate;
  }
  return best;
}

}  // namespace refh
