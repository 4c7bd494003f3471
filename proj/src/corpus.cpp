#include "refh/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "json.hpp"
#include "refh/csv.hpp"
#include "refh/error.hpp"

namespace refh {

namespace {

constexpr char kListSeparator = ';';

const std::vector<std::string> kPublicationColumns = {"pub_id", "pub_year", "country", "affiliations",
                                                      "categories"};
const std::vector<std::string> kCitationColumns = {"pub_id", "citing_year", "count"};
const std::vector<std::string> kProfileColumns = {"institution", "discipline", "p4",        "p3",
                                                  "p2",          "p1",         "pu",        "p4_out",
                                                  "p3_out",      "p2_out",     "p1_out",    "pu_out",
                                                  "staff_fte",   "nci"};
const std::vector<std::string> kMapColumns = {"discipline", "category"};

std::string trim(std::string_view s) {
  auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return {};
  auto end = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(begin, end - begin + 1));
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto next = s.find(kListSeparator, pos);
    if (next == std::string_view::npos) next = s.size();
    auto item = trim(s.substr(pos, next - pos));
    if (!item.empty()) out.push_back(std::move(item));
    pos = next + 1;
  }
  return out;
}

std::string join_list(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out.push_back(kListSeparator);
    out += items[i];
  }
  return out;
}

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

bool has_json_extension(const std::filesystem::path& p) {
  return normalize_label(p.extension().string()) == ".json";
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// JSON files are an array of objects keyed by the CSV column names. They are
// flattened into the same row representation as CSV so both formats share one
// validation path; the "line" of a JSON row is its 1-based record index.
csv::Table load_json_table(const std::filesystem::path& path, const std::vector<std::string>& columns) {
  const std::string file = path.string();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_text(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw IngestError(file, 0, "", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw IngestError(file, 0, "", "expected a JSON array of records");

  csv::Table table;
  table.header = columns;
  std::size_t index = 0;
  for (const auto& item : doc) {
    ++index;
    if (!item.is_object()) throw IngestError(file, index, "", "record is not an object");
    csv::Row row;
    row.line = index;
    for (const auto& col : columns) {
      auto it = item.find(col);
      if (it == item.end() || it->is_null()) {
        row.fields.emplace_back();
      } else if (it->is_string()) {
        row.fields.push_back(it->get<std::string>());
      } else if (it->is_array()) {
        std::vector<std::string> parts;
        for (const auto& part : *it) {
          if (!part.is_string()) throw IngestError(file, index, col, "list items must be strings");
          parts.push_back(part.get<std::string>());
        }
        row.fields.push_back(join_list(parts));
      } else if (it->is_number()) {
        row.fields.push_back(it->dump());
      } else {
        throw IngestError(file, index, col, "unsupported JSON value");
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

csv::Table load_table(const std::filesystem::path& path, const std::vector<std::string>& columns) {
  if (!std::filesystem::exists(path)) throw Error("file not found: " + path.string());
  if (has_json_extension(path)) return load_json_table(path, columns);
  auto table = csv::read_file(path.string());
  for (const auto& col : columns) {
    if (!table.column(col)) throw IngestError(path.string(), 1, col, "missing column");
  }
  return table;
}

// Field accessor bound to one row, producing located errors.
class RowReader {
 public:
  RowReader(const csv::Table& table, const csv::Row& row, std::string file)
      : table_(table), row_(row), file_(std::move(file)) {}

  std::string text(const std::string& col) const { return trim(row_.fields[*table_.column(col)]); }

  std::string required_text(const std::string& col) const {
    auto v = text(col);
    if (v.empty()) fail(col, "value is required");
    return v;
  }

  std::int64_t integer(const std::string& col) const {
    auto v = required_text(col);
    std::int64_t out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size()) fail(col, "not an integer: '" + v + "'");
    return out;
  }

  std::optional<double> optional_real(const std::string& col) const {
    auto v = text(col);
    if (v.empty()) return std::nullopt;
    double out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out)) {
      fail(col, "not a number: '" + v + "'");
    }
    return out;
  }

  double real(const std::string& col) const {
    auto v = optional_real(col);
    if (!v) fail(col, "value is required");
    return *v;
  }

  [[noreturn]] void fail(const std::string& col, const std::string& message) const {
    throw IngestError(file_, row_.line, col, message);
  }

  std::size_t line() const { return row_.line; }

 private:
  const csv::Table& table_;
  const csv::Row& row_;
  std::string file_;
};

void check_bands(const QualityBands& b, const RowReader& r, const std::string& suffix) {
  const std::pair<const char*, double> parts[] = {
      {"p4", b.p4}, {"p3", b.p3}, {"p2", b.p2}, {"p1", b.p1}, {"pu", b.pu}};
  for (const auto& [name, value] : parts) {
    if (value < 0 || value > 100) r.fail(name + suffix, "percentage outside [0, 100]");
  }
  if (std::abs(b.sum() - 100.0) > kProfileSumTolerance) {
    r.fail("p4" + suffix, "profile sum is " + format_double(b.sum()) + ", expected 100");
  }
}

std::vector<PublicationRecord> read_publications(const std::filesystem::path& path) {
  const auto table = load_table(path, kPublicationColumns);
  const std::string file = path.string();
  std::vector<PublicationRecord> out;
  std::unordered_set<std::string> seen;
  for (const auto& row : table.rows) {
    RowReader r(table, row, file);
    PublicationRecord rec;
    rec.pub_id = r.required_text("pub_id");
    rec.pub_year = static_cast<int>(r.integer("pub_year"));
    rec.country = r.text("country");
    rec.affiliations = split_list(r.text("affiliations"));
    rec.categories = split_list(r.text("categories"));
    if (rec.affiliations.empty()) r.fail("affiliations", "at least one affiliation is required");
    if (rec.categories.empty()) r.fail("categories", "at least one category is required");
    if (!seen.insert(rec.pub_id).second) r.fail("pub_id", "duplicate pub_id '" + rec.pub_id + "'");
    out.push_back(std::move(rec));
  }
  return out;
}

void read_citations(const std::filesystem::path& path, std::vector<PublicationRecord>& pubs) {
  const auto table = load_table(path, kCitationColumns);
  const std::string file = path.string();
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < pubs.size(); ++i) index.emplace(pubs[i].pub_id, i);

  for (const auto& row : table.rows) {
    RowReader r(table, row, file);
    auto id = r.required_text("pub_id");
    auto it = index.find(id);
    if (it == index.end()) r.fail("pub_id", "citations for unknown pub_id '" + id + "'");
    auto& rec = pubs[it->second];
    const int year = static_cast<int>(r.integer("citing_year"));
    const auto count = r.integer("count");
    if (year < rec.pub_year) {
      r.fail("citing_year", "citing year " + std::to_string(year) + " precedes publication year " +
                                std::to_string(rec.pub_year) + " of pub_id '" + id + "'");
    }
    if (count < 0) r.fail("count", "negative citation count for pub_id '" + id + "'");
    rec.citations_by_year[year] += count;
  }
}

std::vector<QualityProfile> read_profiles(const std::filesystem::path& path) {
  const auto table = load_table(path, kProfileColumns);
  const std::string file = path.string();
  std::vector<QualityProfile> out;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& row : table.rows) {
    RowReader r(table, row, file);
    QualityProfile p;
    p.institution = r.required_text("institution");
    p.discipline = r.required_text("discipline");
    p.overall = {r.real("p4"), r.real("p3"), r.real("p2"), r.real("p1"), r.real("pu")};
    check_bands(p.overall, r, "");

    const std::optional<double> out_parts[] = {r.optional_real("p4_out"), r.optional_real("p3_out"),
                                               r.optional_real("p2_out"), r.optional_real("p1_out"),
                                               r.optional_real("pu_out")};
    const auto present = std::count_if(std::begin(out_parts), std::end(out_parts),
                                       [](const auto& v) { return v.has_value(); });
    if (present == 5) {
      p.output = QualityBands{*out_parts[0], *out_parts[1], *out_parts[2], *out_parts[3], *out_parts[4]};
      check_bands(*p.output, r, "_out");
    } else if (present != 0) {
      r.fail("p4_out", "output sub-profile must have all five bands or none");
    }

    p.staff_fte = r.real("staff_fte");
    if (!(p.staff_fte > 0)) r.fail("staff_fte", "staff_fte must be positive");
    p.nci = r.optional_real("nci");
    if (p.nci && *p.nci < 0) r.fail("nci", "nci must be non-negative");

    if (!seen.emplace(p.institution, normalize_label(p.discipline)).second) {
      r.fail("institution", "duplicate profile for (" + p.institution + ", " + p.discipline + ")");
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<DisciplineMap> read_discipline_maps(const std::filesystem::path& path) {
  const auto table = load_table(path, kMapColumns);
  const std::string file = path.string();
  std::vector<DisciplineMap> out;
  for (const auto& row : table.rows) {
    RowReader r(table, row, file);
    auto discipline = r.required_text("discipline");
    auto category = r.required_text("category");
    auto it = std::find_if(out.begin(), out.end(), [&](const DisciplineMap& m) {
      return normalize_label(m.discipline) == normalize_label(discipline);
    });
    if (it == out.end()) {
      out.push_back(DisciplineMap{discipline, {}});
      it = std::prev(out.end());
    }
    if (std::find(it->categories.begin(), it->categories.end(), category) == it->categories.end()) {
      it->categories.push_back(std::move(category));
    }
  }
  return out;
}

std::filesystem::path pick_file(const std::filesystem::path& dir, const std::string& stem) {
  auto csv_path = dir / (stem + ".csv");
  if (std::filesystem::exists(csv_path)) return csv_path;
  auto json_path = dir / (stem + ".json");
  if (std::filesystem::exists(json_path)) return json_path;
  return csv_path;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

nlohmann::json optional_json(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

PublicationWindow PublicationWindow::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("window must look like START:END, got '" + std::string(text) + "'");
  }
  auto to_int = [&](std::string_view part) {
    auto t = trim(part);
    int v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
      throw std::invalid_argument("bad year in window '" + std::string(text) + "'");
    }
    return v;
  };
  PublicationWindow w{to_int(text.substr(0, colon)), to_int(text.substr(colon + 1))};
  if (w.start_year > w.end_year) {
    throw std::invalid_argument("window start after end: '" + std::string(text) + "'");
  }
  return w;
}

std::string normalize_label(std::string_view label) {
  auto out = trim(label);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

const DisciplineMap* Corpus::find_map(std::string_view discipline) const {
  const auto key = normalize_label(discipline);
  for (const auto& m : discipline_maps) {
    if (normalize_label(m.discipline) == key) return &m;
  }
  return nullptr;
}

std::vector<DisciplineMap> standard_discipline_maps() {
  return {
      {"biology",
       {"Biochemistry, Genetics and Molecular Biology", "Agricultural and Biological Sciences",
        "Immunology and Microbiology"}},
      {"chemistry", {"Chemistry", "Chemical Engineering"}},
      {"physics", {"Physics and Astronomy"}},
      {"sociology", {"Social Sciences"}},
  };
}

CorpusPaths CorpusPaths::in_directory(const std::filesystem::path& dir) {
  return {pick_file(dir, "publications"), pick_file(dir, "citations"), pick_file(dir, "profiles"),
          pick_file(dir, "discipline_map")};
}

Corpus ingest_corpus(const CorpusPaths& paths) {
  Corpus corpus;
  corpus.publications = read_publications(paths.publications);
  read_citations(paths.citations, corpus.publications);
  corpus.profiles = read_profiles(paths.profiles);
  corpus.discipline_maps = read_discipline_maps(paths.discipline_map);
  return corpus;
}

Corpus ingest_corpus(const std::filesystem::path& pub_file, const std::filesystem::path& citation_file,
                     const std::filesystem::path& profile_file, const std::filesystem::path& map_file) {
  return ingest_corpus(CorpusPaths{pub_file, citation_file, profile_file, map_file});
}

void validate_corpus(const Corpus& corpus) {
  std::unordered_set<std::string> ids;
  for (const auto& rec : corpus.publications) {
    if (rec.pub_id.empty()) throw ValidationError("publication with empty pub_id");
    if (!ids.insert(rec.pub_id).second) throw ValidationError("duplicate pub_id '" + rec.pub_id + "'");
    if (rec.affiliations.empty() || rec.categories.empty()) {
      throw ValidationError("pub_id '" + rec.pub_id + "' needs affiliations and categories");
    }
    for (const auto& [year, count] : rec.citations_by_year) {
      if (year < rec.pub_year) {
        throw ValidationError("pub_id '" + rec.pub_id + "' cited in " + std::to_string(year) +
                              " before publication");
      }
      if (count < 0) throw ValidationError("pub_id '" + rec.pub_id + "' has a negative citation count");
    }
  }
  auto check = [](const QualityBands& b, const QualityProfile& p) {
    for (double v : {b.p4, b.p3, b.p2, b.p1, b.pu}) {
      if (v < 0 || v > 100) throw ValidationError("profile percentage outside [0, 100] for " + p.institution);
    }
    if (std::abs(b.sum() - 100.0) > kProfileSumTolerance) {
      throw ValidationError("profile sum is " + format_double(b.sum()) + " for " + p.institution);
    }
  };
  for (const auto& p : corpus.profiles) {
    check(p.overall, p);
    if (p.output) check(*p.output, p);
    if (!(p.staff_fte > 0)) throw ValidationError("staff_fte must be positive for " + p.institution);
    if (p.nci && *p.nci < 0) throw ValidationError("nci must be non-negative for " + p.institution);
  }
  for (const auto& m : corpus.discipline_maps) {
    if (m.categories.empty()) throw ValidationError("discipline '" + m.discipline + "' has no categories");
  }
}

void write_corpus(const Corpus& corpus, const std::filesystem::path& dir, CorpusFileFormat format) {
  std::filesystem::create_directories(dir);

  if (format == CorpusFileFormat::json) {
    nlohmann::json pubs = nlohmann::json::array();
    nlohmann::json cites = nlohmann::json::array();
    for (const auto& rec : corpus.publications) {
      pubs.push_back({{"pub_id", rec.pub_id},
                      {"pub_year", rec.pub_year},
                      {"country", rec.country},
                      {"affiliations", rec.affiliations},
                      {"categories", rec.categories}});
      for (const auto& [year, count] : rec.citations_by_year) {
        cites.push_back({{"pub_id", rec.pub_id}, {"citing_year", year}, {"count", count}});
      }
    }
    nlohmann::json profiles = nlohmann::json::array();
    for (const auto& p : corpus.profiles) {
      nlohmann::json obj = {{"institution", p.institution}, {"discipline", p.discipline},
                            {"p4", p.overall.p4},           {"p3", p.overall.p3},
                            {"p2", p.overall.p2},           {"p1", p.overall.p1},
                            {"pu", p.overall.pu},           {"staff_fte", p.staff_fte},
                            {"nci", optional_json(p.nci)}};
      const auto o = p.output;
      obj["p4_out"] = optional_json(o ? std::optional(o->p4) : std::nullopt);
      obj["p3_out"] = optional_json(o ? std::optional(o->p3) : std::nullopt);
      obj["p2_out"] = optional_json(o ? std::optional(o->p2) : std::nullopt);
      obj["p1_out"] = optional_json(o ? std::optional(o->p1) : std::nullopt);
      obj["pu_out"] = optional_json(o ? std::optional(o->pu) : std::nullopt);
      profiles.push_back(std::move(obj));
    }
    nlohmann::json maps = nlohmann::json::array();
    for (const auto& m : corpus.discipline_maps) {
      for (const auto& c : m.categories) maps.push_back({{"discipline", m.discipline}, {"category", c}});
    }
    write_text(dir / "publications.json", pubs.dump(1) + "\n");
    write_text(dir / "citations.json", cites.dump(1) + "\n");
    write_text(dir / "profiles.json", profiles.dump(1) + "\n");
    write_text(dir / "discipline_map.json", maps.dump(1) + "\n");
    return;
  }

  std::string pubs = csv::format_row(kPublicationColumns);
  std::string cites = csv::format_row(kCitationColumns);
  for (const auto& rec : corpus.publications) {
    const std::vector<std::string> row = {rec.pub_id, std::to_string(rec.pub_year), rec.country,
                                          join_list(rec.affiliations), join_list(rec.categories)};
    pubs += csv::format_row(row);
    for (const auto& [year, count] : rec.citations_by_year) {
      const std::vector<std::string> c = {rec.pub_id, std::to_string(year), std::to_string(count)};
      cites += csv::format_row(c);
    }
  }
  std::string profiles = csv::format_row(kProfileColumns);
  auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string(); };
  for (const auto& p : corpus.profiles) {
    std::vector<std::string> row = {p.institution,
                                    p.discipline,
                                    format_double(p.overall.p4),
                                    format_double(p.overall.p3),
                                    format_double(p.overall.p2),
                                    format_double(p.overall.p1),
                                    format_double(p.overall.pu)};
    if (p.output) {
      for (double v : {p.output->p4, p.output->p3, p.output->p2, p.output->p1, p.output->pu}) {
        row.push_back(format_double(v));
      }
    } else {
      row.insert(row.end(), 5, std::string());
    }
    row.push_back(format_double(p.staff_fte));
    row.push_back(opt(p.nci));
    profiles += csv::format_row(row);
  }
  std::string maps = csv::format_row(kMapColumns);
  for (const auto& m : corpus.discipline_maps) {
    for (const auto& c : m.categories) {
      const std::vector<std::string> row = {m.discipline, c};
      maps += csv::format_row(row);
    }
  }
  write_text(dir / "publications.csv", pubs);
  write_text(dir / "citations.csv", cites);
  write_text(dir / "profiles.csv", profiles);
  write_text(dir / "discipline_map.csv", maps);
}

namespace {

// Query with its labels normalized once, reused across a scan of the corpus.
class CompiledQuery {
 public:
  CompiledQuery(const DocumentQuery& query, const DisciplineMap& map)
      : query_(query), country_(normalize_label(query.country)) {
    for (const auto& c : map.categories) categories_.insert(normalize_label(c));
  }

  bool passes_first_three(const PublicationRecord& record) const {
    if (record.country.empty() || normalize_label(record.country) != country_) return false;
    if (!query_.window.contains(record.pub_year)) return false;
    return std::any_of(record.categories.begin(), record.categories.end(),
                       [&](const auto& c) { return categories_.contains(normalize_label(c)); });
  }

  bool operator()(const PublicationRecord& record) const {
    return passes_first_three(record) &&
           std::find(record.affiliations.begin(), record.affiliations.end(), query_.institution) !=
               record.affiliations.end();
  }

 private:
  const DocumentQuery& query_;
  std::string country_;
  std::set<std::string> categories_;
};

}  // namespace

bool matches(const PublicationRecord& record, const DocumentQuery& query, const DisciplineMap& map) {
  return CompiledQuery(query, map)(record);
}

std::vector<PublicationRecord> filter_records(std::span<const PublicationRecord> records,
                                              const DocumentQuery& query, const DisciplineMap& map) {
  const CompiledQuery keep(query, map);
  std::vector<PublicationRecord> out;
  std::copy_if(records.begin(), records.end(), std::back_inserter(out), std::cref(keep));
  return out;
}

std::vector<PublicationRecord> filter_documents(const Corpus& corpus, const DocumentQuery& query) {
  const auto* map = corpus.find_map(query.discipline);
  if (!map) throw ValidationError("unknown discipline '" + query.discipline + "'");
  return filter_records(corpus.publications, query, *map);
}

std::vector<std::string> publishing_institutions(const Corpus& corpus, const DocumentQuery& query) {
  const auto* map = corpus.find_map(query.discipline);
  if (!map) throw ValidationError("unknown discipline '" + query.discipline + "'");
  const CompiledQuery steps(query, *map);
  std::set<std::string> out;
  for (const auto& rec : corpus.publications) {
    if (steps.passes_first_three(rec)) out.insert(rec.affiliations.begin(), rec.affiliations.end());
  }
  return {out.begin(), out.end()};
}

}  // namespace refh
