#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "accuscore/aligner.h"
#include "accuscore/baseline.h"
#include "accuscore/errors.h"
#include "accuscore/game_data.h"
#include "accuscore/merge.h"
#include "accuscore/mistake_io.h"
#include "accuscore/scorer.h"
#include "accuscore/tokenizer.h"
#include "accuscore/validate.h"

namespace py = pybind11;
using namespace accuscore;

using GameMap = std::map<std::string, GameData, std::less<>>;

namespace {

AnnotatorSet MakeSet(const std::vector<std::pair<std::string, MistakeList>> &lists) {
  std::vector<AnnotatorList> annotators;
  for (const auto &[id, list] : lists) annotators.push_back({id, list});
  return AnnotatorSet(std::move(annotators));
}

std::string RatioRepr(const Ratio &r) {
  return "Ratio(" + std::to_string(r.num) + "/" + std::to_string(r.den) + ")";
}

}  // namespace

PYBIND11_MODULE(_accuscore, m) {
  m.doc() = "Span-level mistake list alignment and scoring";

  // Translators run newest first, so the subclass goes last.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::enum_<Category>(m, "Category")
      .value("NUMBER", Category::kNumber)
      .value("NAME", Category::kName)
      .value("WORD", Category::kWord)
      .value("CONTEXT", Category::kContext)
      .value("NOT_CHECKABLE", Category::kNotCheckable)
      .value("OTHER", Category::kOther);
  m.def("parse_category", [](std::string_view s) { return ParseCategory(s); });

  py::enum_<ListRole>(m, "ListRole")
      .value("GOLD", ListRole::kGold)
      .value("REPORTED", ListRole::kReported);

  py::enum_<MatchCriterion>(m, "MatchCriterion")
      .value("EXACT", MatchCriterion::kExact)
      .value("SAME_CATEGORY", MatchCriterion::kSameCategory)
      .value("DIFFERENT_CATEGORY", MatchCriterion::kDifferentCategory)
      .value("NOT_FOUND", MatchCriterion::kNotFound);

  py::enum_<Severity>(m, "Severity")
      .value("ERROR", Severity::kError)
      .value("WARNING", Severity::kWarning);

  py::class_<TokenSpan>(m, "TokenSpan")
      .def(py::init<int, int>(), py::arg("start"), py::arg("end"))
      .def_readwrite("start", &TokenSpan::start)
      .def_readwrite("end", &TokenSpan::end)
      .def("__eq__", [](const TokenSpan &a, const TokenSpan &b) { return a == b; })
      .def("__repr__", [](const TokenSpan &s) {
        return "TokenSpan(" + std::to_string(s.start) + ", " + std::to_string(s.end) + ")";
      });

  py::class_<Mistake>(m, "Mistake")
      .def(py::init([](std::string doc_id, int start, int end, Category category,
                       std::string text, std::string mistake_id) {
             return Mistake{std::move(mistake_id), std::move(doc_id), {start, end},
                            std::move(text), category};
           }),
           py::arg("doc_id"), py::arg("start"), py::arg("end"), py::arg("category"),
           py::arg("text") = "", py::arg("mistake_id") = "")
      .def_readwrite("mistake_id", &Mistake::mistake_id)
      .def_readwrite("doc_id", &Mistake::doc_id)
      .def_readwrite("span", &Mistake::span)
      .def_readwrite("text", &Mistake::text)
      .def_readwrite("category", &Mistake::category)
      .def_property_readonly("start", [](const Mistake &x) { return x.span.start; })
      .def_property_readonly("end", [](const Mistake &x) { return x.span.end; })
      .def("__eq__", [](const Mistake &a, const Mistake &b) { return a == b; })
      .def("__repr__", [](const Mistake &x) {
        return "Mistake(" + x.doc_id + ", " + x.mistake_id + ", " +
               std::to_string(x.span.start) + "-" + std::to_string(x.span.end) + ", " +
               std::string(CategoryName(x.category)) + ")";
      });

  py::class_<MistakeList>(m, "MistakeList")
      .def(py::init<ListRole, std::vector<Mistake>>(), py::arg("role") = ListRole::kGold,
           py::arg("entries") = std::vector<Mistake>{})
      .def_property_readonly("role", &MistakeList::role)
      .def_property_readonly("entries", [](const MistakeList &l) {
        return std::vector<Mistake>(l.entries().begin(), l.entries().end());
      })
      .def("for_document", [](const MistakeList &l, std::string_view doc) {
        auto e = l.ForDocument(doc);
        return std::vector<Mistake>(e.begin(), e.end());
      })
      .def("doc_ids", &MistakeList::DocIds)
      .def("with_role", &MistakeList::WithRole)
      .def("__len__", &MistakeList::size)
      .def("__eq__", [](const MistakeList &a, const MistakeList &b) { return a == b; });

  m.def("parse_mistake_list", &ParseMistakeList, py::arg("text"), py::arg("role"),
        py::arg("source") = "<string>");
  m.def("load_mistake_list", &LoadMistakeList, py::arg("path"), py::arg("role"));
  m.def("serialize_mistake_list", &SerializeMistakeList);

  m.def("tokenize", [](std::string_view text, bool normalize) {
    return Tokenize(text, {normalize}).tokens;
  }, py::arg("text"), py::arg("normalize") = false);

  py::class_<Document>(m, "Document")
      .def_readonly("doc_id", &Document::doc_id)
      .def_readonly("raw_text", &Document::raw_text)
      .def_readonly("tokens", &Document::tokens)
      .def_readonly("game_id", &Document::game_id)
      .def_readonly("system_id", &Document::system_id);
  m.def("make_document", &MakeDocument, py::arg("doc_id"), py::arg("text"),
        py::arg("game_id") = std::nullopt, py::arg("system_id") = std::nullopt);

  py::class_<Corpus>(m, "Corpus")
      .def(py::init<>())
      .def("add", &Corpus::Add)
      .def("find", [](const Corpus &c, std::string_view id) -> std::optional<Document> {
        const Document *d = c.Find(id);
        if (d == nullptr) return std::nullopt;
        return *d;
      })
      .def("doc_ids", [](const Corpus &c) {
        std::vector<std::string> ids;
        for (const auto &[id, doc] : c.documents()) ids.push_back(id);
        return ids;
      })
      .def("__len__", &Corpus::size);
  m.def("load_corpus", &LoadCorpus);

  py::class_<ValidationIssue>(m, "ValidationIssue")
      .def_readonly("severity", &ValidationIssue::severity)
      .def_readonly("code", &ValidationIssue::code)
      .def_readonly("doc_id", &ValidationIssue::doc_id)
      .def_readonly("mistake_id", &ValidationIssue::mistake_id)
      .def_readonly("message", &ValidationIssue::message)
      .def("__str__", &FormatIssue);
  m.def("validate", &ValidateMistakeList, py::arg("mistakes"), py::arg("corpus"));

  py::class_<Alignment>(m, "Alignment")
      .def_readonly("doc_id", &Alignment::doc_id)
      .def_readonly("rm_id", &Alignment::rm_id)
      .def_readonly("matched_gsm_id", &Alignment::matched_gsm_id)
      .def_readonly("criterion", &Alignment::criterion)
      .def_readonly("overlap", &Alignment::overlap);
  m.def("align", &Align, py::arg("rml"), py::arg("gsml"), py::arg("doc_id"));
  m.def("align_all", &AlignAll, py::arg("rml"), py::arg("gsml"), py::arg("jobs") = 1,
        py::call_guard<py::gil_scoped_release>());

  py::class_<Ratio>(m, "Ratio")
      .def(py::init<int64_t, int64_t>(), py::arg("num"), py::arg("den"))
      .def_readonly("num", &Ratio::num)
      .def_readonly("den", &Ratio::den)
      .def_property_readonly("value", &Ratio::value)
      .def("__eq__", [](const Ratio &a, const Ratio &b) { return a == b; })
      .def("__repr__", &RatioRepr);

  py::class_<PrecisionRecall>(m, "PrecisionRecall")
      .def_readonly("recall", &PrecisionRecall::recall)
      .def_readonly("precision", &PrecisionRecall::precision)
      .def_property_readonly("f1", &PrecisionRecall::f1);

  py::class_<ScoreReport>(m, "ScoreReport")
      .def_readonly("doc_id", &ScoreReport::doc_id)
      .def_readonly("per_category", &ScoreReport::per_category)
      .def_readonly("overall", &ScoreReport::overall)
      .def_property_readonly("scope", &ScoreReport::scope);
  m.def("score", [](const std::vector<Alignment> &a, const MistakeList &gsml,
                    const MistakeList &rml, std::string_view doc_id) {
    return Score(a, gsml, rml, doc_id);
  }, py::arg("alignments"), py::arg("gsml"), py::arg("rml"), py::arg("doc_id"));
  m.def("score_all", [](const std::vector<Alignment> &a, const MistakeList &gsml,
                        const MistakeList &rml) { return ScoreAll(a, gsml, rml); },
        py::arg("alignments"), py::arg("gsml"), py::arg("rml"));
  m.def("aggregate", [](const std::vector<ScoreReport> &reports) { return Aggregate(reports); });

  py::class_<MergeTie>(m, "MergeTie")
      .def_readonly("doc_id", &MergeTie::doc_id)
      .def_readonly("mistake_id", &MergeTie::mistake_id)
      .def_readonly("tied", &MergeTie::tied);
  py::class_<MergeResult>(m, "MergeResult")
      .def_readonly("gold", &MergeResult::gold)
      .def_readonly("ties", &MergeResult::ties);
  m.def("merge", [](const std::vector<std::pair<std::string, MistakeList>> &lists,
                    int quorum) { return Merge(MakeSet(lists), quorum); },
        py::arg("annotators"), py::arg("quorum") = 1);

  py::class_<PairAgreement>(m, "PairAgreement")
      .def_readonly("reference", &PairAgreement::reference)
      .def_readonly("candidate", &PairAgreement::candidate)
      .def_readonly("overall", &PairAgreement::overall);
  py::class_<AgreementTable>(m, "AgreementTable")
      .def_readonly("pairs", &AgreementTable::pairs)
      .def_readonly("mean_f1", &AgreementTable::mean_f1);
  m.def("agreement", [](const std::vector<std::pair<std::string, MistakeList>> &lists) {
    return Agreement(MakeSet(lists));
  }, py::arg("annotators"));

  py::class_<TeamLine>(m, "TeamLine")
      .def_readonly("city", &TeamLine::city)
      .def_readonly("nickname", &TeamLine::nickname)
      .def_readonly("wins", &TeamLine::wins)
      .def_readonly("losses", &TeamLine::losses)
      .def_readonly("points", &TeamLine::points)
      .def_readonly("quarter_points", &TeamLine::quarter_points)
      .def_property_readonly("full_name", &TeamLine::full_name);
  py::class_<GameData>(m, "GameData")
      .def_readonly("game_id", &GameData::game_id)
      .def_property_readonly("date", [](const GameData &g) { return FormatDate(g.date); })
      .def_property_readonly("weekday",
                             [](const GameData &g) { return std::string(DayOfWeek(g.date)); })
      .def_readonly("arena", &GameData::arena)
      .def_readonly("home", &GameData::home)
      .def_readonly("away", &GameData::away)
      .def("to_json", [](const GameData &g) { return GameToJson(g).dump(); });
  m.def("parse_game", &ParseGame, py::arg("json_text"), py::arg("source") = "<string>");
  m.def("load_game", &LoadGame);
  m.def("load_games", [](const std::filesystem::path &dir) {
    GameMap games = LoadGames(dir);
    return std::map<std::string, GameData>(games.begin(), games.end());
  });
  m.def("day_of_week", [](int year, unsigned month, unsigned day) {
    std::chrono::year_month_day d{std::chrono::year{year}, std::chrono::month{month},
                                  std::chrono::day{day}};
    if (!d.ok()) throw py::value_error("invalid date");
    return std::string(DayOfWeek(d));
  });

  m.def("baseline_document", [](const Document &doc, const GameData &game) {
    return CheckClaims(doc, ExtractClaims(doc, game), game);
  }, py::arg("document"), py::arg("game"));
  m.def("run_baseline", [](const Corpus &corpus,
                           const std::map<std::string, GameData> &games, int jobs) {
    GameMap map(games.begin(), games.end());
    py::gil_scoped_release release;
    return RunBaseline(corpus, map, jobs);
  }, py::arg("corpus"), py::arg("games"), py::arg("jobs") = 1);
}
