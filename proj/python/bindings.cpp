#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "refh/corpus.hpp"
#include "refh/error.hpp"
#include "refh/metrics.hpp"
#include "refh/ranking.hpp"
#include "refh/stats.hpp"
#include "refh/synth.hpp"

namespace py = pybind11;
using namespace refh;

PYBIND11_MODULE(_refh, m) {
  m.doc() = "Departmental h-index, assessment scores, correlations and rankings";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<IngestError>(m, "IngestError", error.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", error.ptr());
  py::register_exception<InsufficientDataError>(m, "InsufficientDataError", error.ptr());

  py::class_<PublicationWindow>(m, "PublicationWindow")
      .def(py::init<int, int>(), py::arg("start_year"), py::arg("end_year"))
      .def_readwrite("start_year", &PublicationWindow::start_year)
      .def_readwrite("end_year", &PublicationWindow::end_year)
      .def("contains", &PublicationWindow::contains)
      .def_static("parse", &PublicationWindow::parse)
      .def("__repr__", [](const PublicationWindow& w) {
        return "PublicationWindow(" + std::to_string(w.start_year) + ", " + std::to_string(w.end_year) + ")";
      });

  py::class_<PublicationRecord>(m, "PublicationRecord")
      .def(py::init([](std::string pub_id, int pub_year, std::string country, std::vector<std::string> affiliations,
                       std::vector<std::string> categories, std::map<int, std::int64_t> citations_by_year) {
             return PublicationRecord{std::move(pub_id), pub_year, std::move(country), std::move(affiliations),
                                      std::move(categories), std::move(citations_by_year)};
           }),
           py::arg("pub_id"), py::arg("pub_year"), py::arg("country"), py::arg("affiliations"),
           py::arg("categories"), py::arg("citations_by_year") = std::map<int, std::int64_t>{})
      .def_readwrite("pub_id", &PublicationRecord::pub_id)
      .def_readwrite("pub_year", &PublicationRecord::pub_year)
      .def_readwrite("country", &PublicationRecord::country)
      .def_readwrite("affiliations", &PublicationRecord::affiliations)
      .def_readwrite("categories", &PublicationRecord::categories)
      .def_readwrite("citations_by_year", &PublicationRecord::citations_by_year);

  py::class_<QualityBands>(m, "QualityBands")
      .def(py::init<double, double, double, double, double>(), py::arg("p4"), py::arg("p3"), py::arg("p2"),
           py::arg("p1"), py::arg("pu"))
      .def_readwrite("p4", &QualityBands::p4)
      .def_readwrite("p3", &QualityBands::p3)
      .def_readwrite("p2", &QualityBands::p2)
      .def_readwrite("p1", &QualityBands::p1)
      .def_readwrite("pu", &QualityBands::pu)
      .def("sum", &QualityBands::sum);

  py::class_<QualityProfile>(m, "QualityProfile")
      .def(py::init([](std::string institution, std::string discipline, QualityBands overall,
                       std::optional<QualityBands> output, double staff_fte, std::optional<double> nci) {
             return QualityProfile{std::move(institution), std::move(discipline), overall, output, staff_fte, nci};
           }),
           py::arg("institution"), py::arg("discipline"), py::arg("overall"), py::arg("output") = py::none(),
           py::arg("staff_fte") = 1.0, py::arg("nci") = py::none())
      .def_readwrite("institution", &QualityProfile::institution)
      .def_readwrite("discipline", &QualityProfile::discipline)
      .def_readwrite("overall", &QualityProfile::overall)
      .def_readwrite("output", &QualityProfile::output)
      .def_readwrite("staff_fte", &QualityProfile::staff_fte)
      .def_readwrite("nci", &QualityProfile::nci);

  py::class_<DisciplineMap>(m, "DisciplineMap")
      .def_readonly("discipline", &DisciplineMap::discipline)
      .def_readonly("categories", &DisciplineMap::categories);

  py::class_<Corpus>(m, "Corpus")
      .def(py::init<>())
      .def_readwrite("publications", &Corpus::publications)
      .def_readwrite("profiles", &Corpus::profiles)
      .def_readonly("discipline_maps", &Corpus::discipline_maps)
      .def("__eq__", [](const Corpus& a, const Corpus& b) { return a == b; });

  py::class_<DocumentQuery>(m, "DocumentQuery")
      .def(py::init([](std::string country, PublicationWindow window, std::string discipline,
                       std::string institution) {
             return DocumentQuery{std::move(country), window, std::move(discipline), std::move(institution)};
           }),
           py::arg("country"), py::arg("window"), py::arg("discipline"), py::arg("institution") = "")
      .def_readwrite("country", &DocumentQuery::country)
      .def_readwrite("window", &DocumentQuery::window)
      .def_readwrite("discipline", &DocumentQuery::discipline)
      .def_readwrite("institution", &DocumentQuery::institution);

  m.def("ingest_corpus", [](const std::filesystem::path& dir) { return ingest_corpus(CorpusPaths::in_directory(dir)); },
        py::arg("directory"), "Reads the four corpus files from a directory.");
  m.def("write_corpus",
        [](const Corpus& c, const std::filesystem::path& dir, const std::string& format) {
          write_corpus(c, dir, format == "json" ? CorpusFileFormat::json : CorpusFileFormat::csv);
        },
        py::arg("corpus"), py::arg("directory"), py::arg("format") = "csv");
  m.def("filter_documents", &filter_documents, py::arg("corpus"), py::arg("query"));
  m.def("publishing_institutions", &publishing_institutions, py::arg("corpus"), py::arg("query"));

  m.def("compute_h", [](const std::vector<std::int64_t>& counts) { return compute_h(counts); }, py::arg("counts"));
  m.def("departmental_h", &departmental_h, py::arg("corpus"), py::arg("query"), py::arg("measurement_year"));
  m.def("h_series",
        [](const Corpus& c, const DocumentQuery& q, const std::vector<int>& years) {
          return h_series(c, q, years).values;
        },
        py::arg("corpus"), py::arg("query"), py::arg("years"));

  m.def("score_s", py::overload_cast<const QualityBands&>(&score_s), py::arg("bands"));
  m.def("score_s_prime", py::overload_cast<const QualityBands&>(&score_s_prime), py::arg("bands"));
  m.def("score_s_output", &score_s_output, py::arg("profile"));
  m.def("strength", &strength, py::arg("profile"));

  m.def("pearson", [](const std::vector<double>& x, const std::vector<double>& y) { return pearson(x, y); });
  m.def("spearman", [](const std::vector<double>& x, const std::vector<double>& y) { return spearman(x, y); });
  m.def("fractional_ranks", [](const std::vector<double>& x) { return fractional_ranks(x); });
  m.def("significance",
        [](double r, std::size_t n) {
          const auto s = significance(r, n, CorrelationKind::pearson);
          return py::make_tuple(s.p_value, s.significant);
        },
        py::arg("r"), py::arg("n"), "Two-sided p-value and significance at the 0.05 level.");

  py::class_<RankedEntry>(m, "RankedEntry")
      .def_readonly("rank", &RankedEntry::rank)
      .def_readonly("institution", &RankedEntry::institution)
      .def_readonly("value", &RankedEntry::value)
      .def_property_readonly("movement", [](const RankedEntry& e) { return std::string(to_token(e.movement)); });

  py::class_<RankedTable>(m, "RankedTable")
      .def_readonly("discipline", &RankedTable::discipline)
      .def_readonly("measure", &RankedTable::measure)
      .def_readonly("entries", &RankedTable::entries)
      .def("render",
           [](const RankedTable& t, const std::string& format) { return render_table(t, parse_table_format(format)); },
           py::arg("format") = "csv");

  m.def("rank_table", &rank_table, py::arg("values"), py::arg("measure"), py::arg("discipline") = "");
  m.def("movement",
        [](const RankedTable& baseline, const RankedTable& comparison) {
          std::map<std::string, std::string> out;
          for (const auto& [name, shift] : movement(baseline, comparison).moves) {
            out[name] = std::string(to_token(shift.movement));
          }
          return out;
        },
        py::arg("baseline"), py::arg("comparison"), "Movement token (up/down/none/new) per institution.");
  m.def("apply_movement", [](const RankedTable& baseline, const RankedTable& comparison) {
    return apply_movement(comparison, movement(baseline, comparison));
  });

  m.def("generate",
        [](std::uint64_t seed, int n_institutions, int papers_min, int papers_max, double quality_link,
           std::vector<std::string> disciplines) {
          SynthConfig c;
          c.seed = seed;
          c.n_institutions = n_institutions;
          c.papers_min = papers_min;
          c.papers_max = papers_max;
          c.quality_link = quality_link;
          c.disciplines = std::move(disciplines);
          return generate(c);
        },
        py::arg("seed") = 1, py::arg("n_institutions") = 40, py::arg("papers_min") = 60, py::arg("papers_max") = 120,
        py::arg("quality_link") = 0.8, py::arg("disciplines") = std::vector<std::string>{"physics"});
  m.def("oracle_h",
        [](const std::vector<PublicationRecord>& records, int cutoff_year) { return oracle_h(records, cutoff_year); },
        py::arg("records"), py::arg("cutoff_year"));
}
