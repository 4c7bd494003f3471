#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace refh {

/// Inclusive range of publication years.
struct PublicationWindow {
  int start_year = 0;
  int end_year = 0;

  bool contains(int year) const noexcept { return start_year <= year && year <= end_year; }

  /// Parses "2001:2007". Throws std::invalid_argument on bad syntax or start > end.
  static PublicationWindow parse(std::string_view text);

  friend bool operator==(const PublicationWindow&, const PublicationWindow&) = default;
};

struct PublicationRecord {
  std::string pub_id;
  int pub_year = 0;
  std::string country;  // may be empty; such records never pass the country filter
  std::vector<std::string> affiliations;
  std::vector<std::string> categories;
  std::map<int, std::int64_t> citations_by_year;  // citing year -> count

  friend bool operator==(const PublicationRecord&, const PublicationRecord&) = default;
};

/// A discipline is the union of the subject categories listed for it.
struct DisciplineMap {
  std::string discipline;
  std::vector<std::string> categories;

  friend bool operator==(const DisciplineMap&, const DisciplineMap&) = default;
};

/// Percentages of work in each quality band. Sums to 100.
struct QualityBands {
  double p4 = 0;
  double p3 = 0;
  double p2 = 0;
  double p1 = 0;
  double pu = 0;

  double sum() const noexcept { return p4 + p3 + p2 + p1 + pu; }

  friend bool operator==(const QualityBands&, const QualityBands&) = default;
};

inline constexpr double kProfileSumTolerance = 1e-9;

struct QualityProfile {
  std::string institution;
  std::string discipline;
  QualityBands overall;
  std::optional<QualityBands> output;  // output sub-profile, when published
  double staff_fte = 0;
  std::optional<double> nci;

  friend bool operator==(const QualityProfile&, const QualityProfile&) = default;
};

struct Corpus {
  std::vector<PublicationRecord> publications;
  std::vector<QualityProfile> profiles;
  std::vector<DisciplineMap> discipline_maps;

  /// Lookup is by normalized label. Returns nullptr if the discipline is unmapped.
  const DisciplineMap* find_map(std::string_view discipline) const;

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

/// Trimmed, ASCII case-folded label used for category/country/discipline matching.
std::string normalize_label(std::string_view label);

/// biology, chemistry, physics and sociology mapped onto Scopus subject categories.
std::vector<DisciplineMap> standard_discipline_maps();

// ---------------------------------------------------------------------------
// Ingestion

struct CorpusPaths {
  std::filesystem::path publications;
  std::filesystem::path citations;
  std::filesystem::path profiles;
  std::filesystem::path discipline_map;

  /// Looks for <name>.csv, falling back to <name>.json, for each of the four files.
  static CorpusPaths in_directory(const std::filesystem::path& dir);
};

/// Reads and validates the four corpus files. Files ending in `.json` are read
/// with the JSON mirror schema, anything else as CSV. Throws IngestError
/// naming the file, line (or JSON record index) and field on the first violation.
Corpus ingest_corpus(const CorpusPaths& paths);
Corpus ingest_corpus(const std::filesystem::path& pub_file, const std::filesystem::path& citation_file,
                     const std::filesystem::path& profile_file, const std::filesystem::path& map_file);

enum class CorpusFileFormat { csv, json };

/// Writes publications, citations, profiles and discipline_map files into `dir`.
/// Output is deterministic; re-ingesting it yields an equal Corpus.
void write_corpus(const Corpus& corpus, const std::filesystem::path& dir,
                  CorpusFileFormat format = CorpusFileFormat::csv);

/// Checks every record/profile invariant. Throws ValidationError.
void validate_corpus(const Corpus& corpus);

// ---------------------------------------------------------------------------
// Document filter

struct DocumentQuery {
  std::string country;
  PublicationWindow window;
  std::string discipline;
  std::string institution;
};

/// True iff the record passes all four filter steps: country, publication
/// window, discipline category overlap and institutional affiliation.
bool matches(const PublicationRecord& record, const DocumentQuery& query, const DisciplineMap& map);

std::vector<PublicationRecord> filter_records(std::span<const PublicationRecord> records,
                                              const DocumentQuery& query, const DisciplineMap& map);

/// Throws ValidationError if the discipline has no map in the corpus.
std::vector<PublicationRecord> filter_documents(const Corpus& corpus, const DocumentQuery& query);

/// Sorted distinct institutions with at least one record passing the country,
/// window and discipline steps. `query.institution` is ignored.
std::vector<std::string> publishing_institutions(const Corpus& corpus, const DocumentQuery& query);

}  // namespace refh
