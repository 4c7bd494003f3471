#include "refh/cli.hpp"

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>

#include "CLI11.hpp"
#include "refh/corpus.hpp"
#include "refh/csv.hpp"
#include "refh/error.hpp"
#include "refh/measures.hpp"
#include "refh/metrics.hpp"
#include "refh/ranking.hpp"
#include "refh/report.hpp"
#include "refh/stats.hpp"
#include "refh/synth.hpp"

namespace refh::cli {

namespace {

namespace fs = std::filesystem;

// Bad flag combination discovered while running a command (exit code 2).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Preset {
  PublicationWindow window;
  std::vector<int> years;
};

Preset preset_named(const std::string& name) {
  if (name == "rae2008") return {{2001, 2007}, {2008, 2009, 2010, 2011, 2012, 2013, 2014}};
  if (name == "ref2014") return {{2008, 2013}, {2014}};
  throw std::invalid_argument("unknown preset '" + name + "' (expected rae2008 or ref2014)");
}

int parse_year(std::string_view text) {
  int y = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), y);
  if (text.empty() || ec != std::errc() || p != text.data() + text.size()) {
    throw std::invalid_argument("bad year '" + std::string(text) + "'");
  }
  return y;
}

// "2008..2014", "2008,2010,2012" or "2014"
std::vector<int> parse_years(const std::string& text) {
  std::vector<int> years;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const int from = parse_year(std::string_view(text).substr(0, dots));
    const int to = parse_year(std::string_view(text).substr(dots + 2));
    if (from > to) throw std::invalid_argument("empty year range '" + text + "'");
    for (int y = from; y <= to; ++y) years.push_back(y);
    return years;
  }
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) years.push_back(parse_year(part));
  if (years.empty()) throw std::invalid_argument("no measurement years given");
  std::sort(years.begin(), years.end());
  years.erase(std::unique(years.begin(), years.end()), years.end());
  return years;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

CitationModel parse_model(const std::string& text) {
  auto parts = std::vector<std::string>{};
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  auto num = [&](std::size_t i) {
    double v = 0;
    const auto& s = parts.at(i);
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw std::invalid_argument("bad number '" + s + "'");
    return v;
  };
  if (parts.size() == 3 && parts[0] == "lognormal") return LogNormalCitations{num(1), num(2)};
  if (parts.size() == 3 && parts[0] == "power_law") return PowerLawCitations{num(1), num(2)};
  throw std::invalid_argument("citation model must be lognormal:MU:SIGMA or power_law:ALPHA:XMIN");
}

std::shared_ptr<spdlog::logger> make_logger() {
  auto logger = spdlog::get("refh");
  if (!logger) logger = spdlog::stderr_logger_st("refh");
  logger->set_pattern("refh: [%l] %v");
  auto level = spdlog::level::warn;
  if (const char* env = std::getenv("REFH_LOG")) level = spdlog::level::from_str(env);
  logger->set_level(level);
  return logger;
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

// Raw flag values, interpreted after CLI11 has parsed the command line.
struct Flags {
  std::string out = ".";
  std::string format = "csv";
  std::string country = "GB";
  std::string discipline;
  std::string preset;

  std::string corpus_dir;
  std::string publications, citations, profiles, discipline_map;

  std::string window, hat_window, years;

  std::string pairs;
  std::string measure, baseline, lead, values_file;

  std::uint64_t seed = 1;
  int institutions = 40;
  std::string papers = "60:120";
  std::string synth_window = "2001:2013";
  int last_citing_year = 2014;
  std::string model = "lognormal:2:1";
  double accrual = 0.7;
  double quality_link = 0.8;
  double quality_effect = 0.8;
  std::string disciplines = "physics";
};

// Interpreted, validated settings shared by the commands.
struct RunConfig {
  fs::path out;
  OutputFormat format = OutputFormat::csv;
  std::string country;
  std::string discipline;
  PublicationWindow window{2001, 2007};
  PublicationWindow hat_window{2008, 2013};
  std::vector<int> years{2008, 2009, 2010, 2011, 2012, 2013, 2014};
};

RunConfig interpret(const Flags& f) {
  RunConfig c;
  c.out = f.out;
  c.format = parse_output_format(f.format);
  c.country = f.country;
  c.discipline = f.discipline;
  if (!f.preset.empty()) {
    auto p = preset_named(f.preset);
    c.window = p.window;
    c.years = p.years;
  }
  if (!f.window.empty()) c.window = PublicationWindow::parse(f.window);
  if (!f.hat_window.empty()) c.hat_window = PublicationWindow::parse(f.hat_window);
  if (!f.years.empty()) c.years = parse_years(f.years);
  if (c.years.front() <= c.window.start_year) {
    throw std::invalid_argument("measurement years must come after the window start");
  }
  return c;
}

CorpusPaths corpus_paths(const Flags& f) {
  CorpusPaths paths;
  if (!f.corpus_dir.empty()) paths = CorpusPaths::in_directory(f.corpus_dir);
  if (!f.publications.empty()) paths.publications = f.publications;
  if (!f.citations.empty()) paths.citations = f.citations;
  if (!f.profiles.empty()) paths.profiles = f.profiles;
  if (!f.discipline_map.empty()) paths.discipline_map = f.discipline_map;
  if (paths.publications.empty() || paths.citations.empty() || paths.profiles.empty() ||
      paths.discipline_map.empty()) {
    throw UsageError("corpus files missing: pass --corpus DIR or all four file flags");
  }
  return paths;
}

// Requested discipline, or every mapped discipline.
std::vector<std::string> disciplines_for(const Corpus& corpus, const RunConfig& c) {
  if (!c.discipline.empty()) {
    const auto* map = corpus.find_map(c.discipline);
    if (!map) throw ValidationError("unknown discipline '" + c.discipline + "'");
    return {map->discipline};
  }
  std::vector<std::string> out;
  for (const auto& m : corpus.discipline_maps) out.push_back(m.discipline);
  return out;
}

std::vector<HIndexSeries> all_series(const Corpus& corpus, const RunConfig& c, const std::string& discipline,
                                     PublicationWindow window, std::span<const int> years) {
  DocumentQuery q{c.country, window, discipline, {}};
  return h_series_all(corpus, q, years);
}

fs::path output_path(const RunConfig& c, const std::string& stem) {
  return c.out / (stem + "." + std::string(file_extension(c.format)));
}

int cmd_ingest(const Flags& f, const RunConfig& c, std::ostream& out) {
  const auto corpus = ingest_corpus(corpus_paths(f));
  std::size_t citations = 0;
  for (const auto& p : corpus.publications) {
    for (const auto& [y, n] : p.citations_by_year) citations += static_cast<std::size_t>(n);
  }
  DataTable t{{"publications", "citations", "profiles", "disciplines"}, {}};
  std::string names;
  for (const auto& m : corpus.discipline_maps) names += (names.empty() ? "" : ";") + m.discipline;
  t.rows.push_back({static_cast<std::int64_t>(corpus.publications.size()), static_cast<std::int64_t>(citations),
                    static_cast<std::int64_t>(corpus.profiles.size()), names});
  out << render(t, c.format);
  return kSuccess;
}

int cmd_hindex(const Flags& f, const RunConfig& c, spdlog::logger& log) {
  const auto corpus = ingest_corpus(corpus_paths(f));
  std::vector<HIndexSeries> series;
  for (const auto& d : disciplines_for(corpus, c)) {
    auto s = all_series(corpus, c, d, c.window, c.years);
    log.info("{}: {} institutions with publications in {}:{}", d, s.size(), c.window.start_year,
             c.window.end_year);
    series.insert(series.end(), std::make_move_iterator(s.begin()), std::make_move_iterator(s.end()));
  }
  if (series.empty()) throw ValidationError("no matching publications for the requested filter");
  write_file(output_path(c, "hseries"), render(hseries_table(series), c.format));
  return kSuccess;
}

std::vector<ScoreSet> sorted_scores(const Corpus& corpus, const RunConfig& c) {
  auto scores = score_profiles(corpus.profiles);
  if (!c.discipline.empty()) {
    std::erase_if(scores, [&](const ScoreSet& s) {
      return normalize_label(s.discipline) != normalize_label(c.discipline);
    });
  }
  std::sort(scores.begin(), scores.end(), [](const ScoreSet& a, const ScoreSet& b) {
    return std::tie(a.discipline, a.institution) < std::tie(b.discipline, b.institution);
  });
  return scores;
}

int cmd_score(const Flags& f, const RunConfig& c) {
  const auto corpus = ingest_corpus(corpus_paths(f));
  const auto scores = sorted_scores(corpus, c);
  if (scores.empty()) throw ValidationError("no profiles to score");
  write_file(output_path(c, "scores"), render(scores_table(scores), c.format));
  return kSuccess;
}

bool needs_hat(const std::vector<Measure>& measures) {
  return std::any_of(measures.begin(), measures.end(),
                     [](const Measure& m) { return m.kind == Measure::Kind::h_hat; });
}

std::vector<int> hat_years(const std::vector<Measure>& measures) {
  std::set<int> years;
  for (const auto& m : measures) {
    if (m.kind == Measure::Kind::h_hat) years.insert(m.year);
  }
  return {years.begin(), years.end()};
}

std::vector<int> h_years(const RunConfig& c, const std::vector<Measure>& measures) {
  std::set<int> years(c.years.begin(), c.years.end());
  for (const auto& m : measures) {
    if (m.kind == Measure::Kind::h) years.insert(m.year);
  }
  return {years.begin(), years.end()};
}

std::vector<GroupMetrics> metrics_for(const Corpus& corpus, const RunConfig& c, const std::string& discipline,
                                      const std::vector<Measure>& measures) {
  const auto series = all_series(corpus, c, discipline, c.window, h_years(c, measures));
  std::vector<HIndexSeries> hat;
  if (needs_hat(measures)) hat = all_series(corpus, c, discipline, c.hat_window, hat_years(measures));
  return group_metrics(series, hat, corpus.profiles);
}

int cmd_correlate(const Flags& f, const RunConfig& c, spdlog::logger& log) {
  std::vector<MeasurePair> pairs;
  const std::string first = "h_" + std::to_string(c.years.front());
  const std::string pair_text = f.pairs.empty() ? "s:" + first + ",s_prime:" + first + ",s_output:" + first + ",s:i"
                                                : f.pairs;
  for (const auto& p : split_commas(pair_text)) pairs.push_back(MeasurePair::parse(p));
  if (pairs.empty()) throw std::invalid_argument("no measure pairs given");
  std::vector<Measure> measures;
  for (const auto& p : pairs) {
    measures.push_back(Measure::parse(p.x));
    measures.push_back(Measure::parse(p.y));
  }

  const auto corpus = ingest_corpus(corpus_paths(f));
  const auto scores = sorted_scores(corpus, c);

  std::vector<CorrelationReport> table;
  std::vector<std::pair<int, CorrelationReport>> series_rows;
  std::optional<JoinedSample> points;
  for (const auto& d : disciplines_for(corpus, c)) {
    const bool has_profiles = std::any_of(scores.begin(), scores.end(), [&](const ScoreSet& s) {
      return normalize_label(s.discipline) == normalize_label(d);
    });
    if (!has_profiles) {
      if (!c.discipline.empty()) throw InsufficientDataError("no profiles for discipline '" + d + "'");
      continue;
    }
    const auto metrics = metrics_for(corpus, c, d, measures);
    auto reports = correlation_table(scores, metrics, pairs, d);
    for (const auto& r : reports) {
      if (r.dropped) log.info("{} {} vs {}: {} institutions dropped (missing a value)", d, r.measure_x, r.measure_y, r.dropped);
    }
    table.insert(table.end(), reports.begin(), reports.end());

    std::vector<std::string> xs;
    for (const auto& p : pairs) {
      if (Measure::parse(p.x).kind == Measure::Kind::nci || Measure::parse(p.x).kind == Measure::Kind::h ||
          Measure::parse(p.x).kind == Measure::Kind::h_hat) {
        continue;
      }
      if (std::find(xs.begin(), xs.end(), p.x) == xs.end()) xs.push_back(p.x);
    }
    for (const auto& x : xs) {
      const auto series = correlation_series(scores, metrics, x, c.years, d);
      for (const auto& [year, r] : series.by_year) series_rows.emplace_back(year, r);
      if (series.baseline) series_rows.emplace_back(0, *series.baseline);
    }
    if (!points) {
      const MeasureTable mt(scores, metrics, d);
      points = join_measures(mt, Measure::parse(pairs.front().x), Measure::parse(pairs.front().y));
    }
  }
  if (table.empty()) throw InsufficientDataError("no discipline has profiles to correlate");

  write_file(output_path(c, "correlations"), render(correlations_table(table), c.format));
  write_file(output_path(c, "corr_series"), render(corr_series_table(series_rows), c.format));
  write_file(output_path(c, "fig_points"), render(fig_points_table(*points), c.format));
  return kSuccess;
}

// Columns of a values file: institution plus one column per measure label.
std::map<std::string, double> values_from_file(const std::string& path, const std::string& measure) {
  const auto t = csv::read_file(path);
  const auto inst = t.column("institution");
  const auto col = t.column(measure);
  if (!inst) throw IngestError(path, 1, "institution", "missing column");
  if (!col) throw IngestError(path, 1, measure, "missing column");
  std::map<std::string, double> out;
  for (const auto& row : t.rows) {
    const auto& text = row.fields[*col];
    if (text.empty()) continue;
    double v = 0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || p != text.data() + text.size()) {
      throw IngestError(path, row.line, measure, "not a number: '" + text + "'");
    }
    if (!out.emplace(row.fields[*inst], v).second) {
      throw IngestError(path, row.line, "institution", "duplicate institution '" + row.fields[*inst] + "'");
    }
  }
  if (out.empty()) throw ValidationError("no values for measure '" + measure + "' in " + path);
  return out;
}

int cmd_rank(const Flags& f, const RunConfig& c, spdlog::logger& log) {
  if (f.measure.empty()) throw UsageError("--measure is required");
  std::vector<std::string> labels = {f.measure};
  if (!f.baseline.empty()) labels.push_back(f.baseline);
  if (!f.lead.empty()) labels.push_back(f.lead);
  std::vector<Measure> measures;
  for (const auto& l : labels) measures.push_back(Measure::parse(l));

  std::string discipline = c.discipline;
  std::function<std::map<std::string, double>(const std::string&)> values_of;
  std::optional<Corpus> corpus;
  std::vector<ScoreSet> scores;
  std::vector<GroupMetrics> metrics;
  if (!f.values_file.empty()) {
    if (discipline.empty()) throw UsageError("--discipline is required with --values");
    values_of = [&](const std::string& label) { return values_from_file(f.values_file, label); };
  } else {
    corpus = ingest_corpus(corpus_paths(f));
    if (discipline.empty()) {
      if (corpus->discipline_maps.size() != 1) throw UsageError("--discipline is required");
      discipline = corpus->discipline_maps.front().discipline;
    }
    RunConfig rc = c;
    rc.discipline = discipline;
    discipline = disciplines_for(*corpus, rc).front();
    scores = sorted_scores(*corpus, rc);
    metrics = metrics_for(*corpus, rc, discipline, measures);
    values_of = [&](const std::string& label) {
      auto v = MeasureTable(scores, metrics, discipline).values(Measure::parse(label));
      if (v.empty()) throw ValidationError("no values for measure '" + label + "' in " + discipline);
      return v;
    };
  }

  auto comparison = rank_table(values_of(f.measure), f.measure, discipline);
  std::vector<RankedTable> columns;
  if (!f.lead.empty()) columns.push_back(rank_table(values_of(f.lead), f.lead, discipline));
  if (!f.baseline.empty()) {
    auto base = rank_table(values_of(f.baseline), f.baseline, discipline);
    const auto report = movement(base, comparison);
    for (const auto& d : report.dropped) log.info("{} ranked by {} but absent from {}", d, f.baseline, f.measure);
    comparison = apply_movement(std::move(comparison), report);
    columns.push_back(std::move(base));
  }
  columns.push_back(comparison);

  const std::string stem = "rank_" + discipline + "_" + f.measure;
  std::string text;
  switch (c.format) {
    case OutputFormat::csv: text = render_table(comparison, TableFormat::csv); break;
    case OutputFormat::markdown:
      text = columns.size() > 1 ? render_columns_markdown(columns) : render_table(comparison, TableFormat::markdown);
      break;
    case OutputFormat::json: {
      DataTable t{{"rank", "institution", "value", "movement"}, {}};
      for (const auto& e : comparison.entries) {
        t.rows.push_back({std::int64_t{e.rank}, e.institution, e.value ? Cell(*e.value) : Cell(std::monostate{}),
                          std::string(to_token(e.movement))});
      }
      text = render(t, OutputFormat::json);
      break;
    }
  }
  write_file(output_path(c, stem), text);
  return kSuccess;
}

// h_<Y> needs Y after the window start, h_hat_<Y> after the follow-up window start.
void check_measure_year(const Measure& m, const RunConfig& c) {
  const auto* window = m.kind == Measure::Kind::h       ? &c.window
                       : m.kind == Measure::Kind::h_hat ? &c.hat_window
                                                        : nullptr;
  if (window && m.year <= window->start_year) {
    throw std::invalid_argument("measure " + m.label() + " must come after its window start " +
                                std::to_string(window->start_year));
  }
}

int cmd_synth(const Flags& f, const RunConfig& c) {
  SynthConfig sc;
  sc.seed = f.seed;
  sc.n_institutions = f.institutions;
  auto papers = PublicationWindow::parse(f.papers);  // same "A:B" syntax
  sc.papers_min = papers.start_year;
  sc.papers_max = papers.end_year;
  sc.window = PublicationWindow::parse(f.synth_window);
  sc.last_citing_year = f.last_citing_year;
  sc.citation_model = parse_model(f.model);
  sc.accrual = f.accrual;
  sc.quality_link = f.quality_link;
  sc.quality_effect = f.quality_effect;
  sc.country = c.country;
  sc.disciplines = split_commas(f.disciplines);
  try {
    sc.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const auto corpus = generate(sc);
  write_corpus(corpus, c.out, c.format == OutputFormat::json ? CorpusFileFormat::json : CorpusFileFormat::csv);
  write_file(c.out / "manifest.json", manifest_json(sc));
  return kSuccess;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  auto log = make_logger();
  Flags f;
  CLI::App app{"Departmental h-index and research-assessment analytics", "refh"};
  app.fallthrough();
  app.require_subcommand(1);

  app.add_option("--out", f.out, "Output directory")->capture_default_str();
  app.add_option("--format", f.format, "csv | markdown | json")->capture_default_str();
  app.add_option("--country", f.country, "Country code for the document filter")->capture_default_str();
  app.add_option("--discipline", f.discipline, "Discipline label (default: every mapped discipline)");
  app.add_option("--preset", f.preset, "rae2008 (window 2001:2007, years 2008..2014) or ref2014 (2008:2013, 2014)");
  app.add_option("--corpus", f.corpus_dir, "Directory holding the four corpus files");
  app.add_option("--publications", f.publications);
  app.add_option("--citations", f.citations);
  app.add_option("--profiles", f.profiles);
  app.add_option("--map", f.discipline_map, "Discipline map file");
  app.add_option("--window", f.window, "Publication window START:END");
  app.add_option("--hat-window", f.hat_window, "Window for h_hat_<Y> measures (default 2008:2013)");
  app.add_option("--years", f.years, "Measurement years: 2008..2014 or 2008,2010");

  auto* ingest = app.add_subcommand("ingest", "Validate a corpus and print a summary");
  auto* hindex = app.add_subcommand("hindex", "Write departmental h-index series (hseries)");
  auto* score = app.add_subcommand("score", "Write s, s_prime, s_output and strength (scores)");
  auto* correlate = app.add_subcommand("correlate", "Write correlations, corr_series and fig_points");
  correlate->add_option("--pairs", f.pairs, "Comma-separated X:Y measure pairs");
  auto* rank = app.add_subcommand("rank", "Write a ranked table with movement markers");
  rank->add_option("--measure", f.measure, "Measure to rank by")->required();
  rank->add_option("--baseline", f.baseline, "Measure whose ranking movement is relative to");
  rank->add_option("--lead", f.lead, "Extra leading column for markdown output");
  rank->add_option("--values", f.values_file, "CSV of institution plus measure columns instead of a corpus");
  auto* synth = app.add_subcommand("synth", "Generate a synthetic corpus");
  synth->add_option("--seed", f.seed)->capture_default_str();
  synth->add_option("--institutions", f.institutions)->capture_default_str();
  synth->add_option("--papers", f.papers, "Papers per institution MIN:MAX")->capture_default_str();
  synth->add_option("--pub-window", f.synth_window, "Publication years START:END")->capture_default_str();
  synth->add_option("--last-citing-year", f.last_citing_year)->capture_default_str();
  synth->add_option("--model", f.model, "lognormal:MU:SIGMA or power_law:ALPHA:XMIN")->capture_default_str();
  synth->add_option("--accrual", f.accrual)->capture_default_str();
  synth->add_option("--quality-link", f.quality_link)->capture_default_str();
  synth->add_option("--quality-effect", f.quality_effect)->capture_default_str();
  synth->add_option("--disciplines", f.disciplines)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "refh: " << e.what() << "\n";
    return kUsageError;
  }

  RunConfig config;
  try {
    config = interpret(f);
    // measure labels are validated before any file is touched
    std::vector<std::string> labels;
    if (rank->parsed()) {
      labels.push_back(f.measure);
      if (!f.baseline.empty()) labels.push_back(f.baseline);
      if (!f.lead.empty()) labels.push_back(f.lead);
    }
    if (correlate->parsed()) {
      for (const auto& p : split_commas(f.pairs)) {
        const auto pair = MeasurePair::parse(p);
        labels.push_back(pair.x);
        labels.push_back(pair.y);
      }
    }
    for (const auto& label : labels) check_measure_year(Measure::parse(label), config);
    if (synth->parsed()) {
      parse_model(f.model);
      PublicationWindow::parse(f.papers);
      PublicationWindow::parse(f.synth_window);
    }
  } catch (const std::invalid_argument& e) {
    err << "refh: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (ingest->parsed()) return cmd_ingest(f, config, out);
    if (hindex->parsed()) return cmd_hindex(f, config, *log);
    if (score->parsed()) return cmd_score(f, config);
    if (correlate->parsed()) return cmd_correlate(f, config, *log);
    if (rank->parsed()) return cmd_rank(f, config, *log);
    if (synth->parsed()) return cmd_synth(f, config);
  } catch (const UsageError& e) {
    err << "refh: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "refh: " << e.what() << "\n";
    return kDataError;
  } catch (const std::exception& e) {
    err << "refh: " << e.what() << "\n";
    return kDataError;
  }
  return kUsageError;
}

}  // namespace refh::cli
