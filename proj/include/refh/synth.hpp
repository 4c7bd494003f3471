#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "refh/corpus.hpp"

namespace refh {

/// Per-paper total citations ~ exp(N(mu, sigma)).
struct LogNormalCitations {
  double mu = 2.0;
  double sigma = 1.0;
};

/// Per-paper total citations ~ Pareto(alpha, x_min), alpha > 1.
struct PowerLawCitations {
  double alpha = 2.5;
  double x_min = 1.0;
};

using CitationModel = std::variant<LogNormalCitations, PowerLawCitations>;

struct SynthConfig {
  std::uint64_t seed = 1;
  int n_institutions = 40;
  int papers_min = 60;  // per institution, inclusive range
  int papers_max = 120;
  PublicationWindow window{2001, 2013};
  int last_citing_year = 2014;
  CitationModel citation_model = LogNormalCitations{};
  double accrual = 0.7;           // share of citations in year k after publication ∝ accrual^k
  double quality_link = 0.8;      // 0: profiles independent of citations, 1: fully coupled
  double quality_effect = 0.8;    // log-citation shift per unit of latent quality
  double profile_noise = 0.3;     // spread of the output sub-profile around the overall one
  std::string country = "GB";
  double foreign_fraction = 0.1;  // papers attributed to another country
  double coaffiliation_fraction = 0.1;
  std::vector<std::string> disciplines = {"physics"};

  /// Throws std::invalid_argument when a parameter is outside its domain.
  void validate() const;
};

inline constexpr int kSynthGeneratorVersion = 1;
inline constexpr const char* kSynthRngName = "std::mt19937_64";

/// Deterministic corpus: the same config always yields the same corpus.
Corpus generate(const SynthConfig& config);

/// JSON record of the config, generator version and RNG name.
std::string manifest_json(const SynthConfig& config);

/// Brute-force h-index: scans n = 0..|records| and keeps the largest n with
/// at least n records cited n or more times through `cutoff_year`.
/// Independent of the metrics module; for cross-checking it.
std::int64_t oracle_h(std::span<const PublicationRecord> records, int cutoff_year);

}  // namespace refh
