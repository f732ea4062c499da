#include "accuscore/cli.h"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "accuscore/aligner.h"
#include "accuscore/baseline.h"
#include "accuscore/csv.h"
#include "accuscore/errors.h"
#include "accuscore/file_util.h"
#include "accuscore/merge.h"
#include "accuscore/mistake_io.h"
#include "accuscore/scorer.h"
#include "accuscore/service.h"
#include "accuscore/tokenizer.h"
#include "accuscore/validate.h"

namespace accuscore {

namespace fs = std::filesystem;

namespace {

// Bad invocation or unusable input; maps to kExitUsage.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Validation ERRORs that block the subcommand; maps to kExitValidation.
class BlockingIssues : public Error {
 public:
  using Error::Error;
};

struct Context {
  const RunConfig &config;
  std::ostream &out;
  std::ostream &err;
  int jobs;
};

std::string FormatRatio(const Ratio &r) {
  std::optional<double> v = r.value();
  if (!v) return "";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", *v);
  return buf;
}

std::string FormatValue(std::optional<double> v, int digits = 6) {
  if (!v) return "";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, *v);
  return buf;
}

std::string Timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

void Banner(const Context &ctx, std::ostream &os) {
  if (!ctx.config.deterministic) {
    os << "# accuscore " << ctx.config.subcommand << " " << Timestamp() << "\n";
  }
}

void RequireFile(const std::string &path, const std::string &what) {
  if (path.empty()) throw UsageError(what + " is required");
  if (!fs::exists(path) || fs::is_directory(path)) {
    throw UsageError(what + " " + path + ": file not found");
  }
}

void RequireDir(const std::string &path, const std::string &what) {
  if (path.empty()) throw UsageError(what + " is required");
  if (!fs::is_directory(path)) throw UsageError(what + " " + path + ": directory not found");
}

// CSV to --output when given (atomically), otherwise to out.
void EmitCsv(const Context &ctx, const std::string &csv) {
  if (ctx.config.output.empty()) {
    ctx.out << csv;
  } else {
    WriteFileAtomically(ctx.config.output, csv);
  }
}

// Human-readable text goes to stdout unless stdout carries the CSV.
std::ostream &TableStream(const Context &ctx) {
  return ctx.config.output.empty() ? ctx.err : ctx.out;
}

Corpus LoadCorpusArg(const Context &ctx) {
  RequireDir(ctx.config.corpus_dir, "--corpus");
  return LoadCorpus(ctx.config.corpus_dir);
}

// Reports issues; throws BlockingIssues if any is an ERROR.
void CheckList(const Context &ctx, const MistakeList &list, const Corpus &corpus,
               const std::string &name) {
  std::vector<ValidationIssue> issues = ValidateMistakeList(list, corpus);
  for (const ValidationIssue &issue : issues) {
    ctx.err << name << ": " << FormatIssue(issue) << "\n";
  }
  if (HasErrors(issues)) {
    throw BlockingIssues(name + ": validation errors; fix them before continuing");
  }
}

int RunTokenize(const Context &ctx) {
  RequireFile(ctx.config.input, "input file");
  TokenizedText text = Tokenize(ReadFile(ctx.config.input), {ctx.config.normalize});
  std::string out;
  for (size_t i = 0; i < text.tokens.size(); ++i) {
    out += std::to_string(i) + "\t" + text.tokens[i] + "\n";
  }
  EmitCsv(ctx, out);
  return kExitOk;
}

int RunValidate(const Context &ctx) {
  RequireFile(ctx.config.input, "--list");
  ListRole role;
  if (ctx.config.role == "gold") {
    role = ListRole::kGold;
  } else if (ctx.config.role == "reported") {
    role = ListRole::kReported;
  } else {
    throw UsageError("--role must be gold or reported");
  }
  Corpus corpus = LoadCorpusArg(ctx);
  MistakeList list = LoadMistakeList(ctx.config.input, role);
  std::vector<ValidationIssue> issues = ValidateMistakeList(list, corpus);
  int errors = 0, warnings = 0;
  for (const ValidationIssue &issue : issues) {
    ctx.err << FormatIssue(issue) << "\n";
    (issue.severity == Severity::kError ? errors : warnings)++;
  }
  if (!ctx.config.output.empty()) {
    WriteFileAtomically(ctx.config.output, SerializeMistakeList(list));
  }
  Banner(ctx, ctx.out);
  ctx.out << ctx.config.input << ": " << list.size() << " entries, " << errors
          << " errors, " << warnings << " warnings\n";
  return errors > 0 && ctx.config.strict ? kExitValidation : kExitOk;
}

std::string AlignmentCsv(std::span<const Alignment> alignments) {
  std::string out = "DOC_ID,RM_ID,GSM_ID,CRITERION,OVERLAP\n";
  for (const Alignment &a : alignments) {
    out += CsvLine({a.doc_id, a.rm_id, a.matched_gsm_id.value_or(""),
                    std::string(CriterionName(a.criterion)), std::to_string(a.overlap)});
  }
  return out;
}

struct Pair {
  Corpus corpus;
  MistakeList gsml;
  MistakeList rml;
};

Pair LoadPair(const Context &ctx) {
  RequireFile(ctx.config.gsml, "--gsml");
  RequireFile(ctx.config.rml, "--rml");
  Pair p{LoadCorpusArg(ctx), LoadMistakeList(ctx.config.gsml, ListRole::kGold),
         LoadMistakeList(ctx.config.rml, ListRole::kReported)};
  CheckList(ctx, p.gsml, p.corpus, ctx.config.gsml);
  CheckList(ctx, p.rml, p.corpus, ctx.config.rml);
  return p;
}

int RunAlign(const Context &ctx) {
  Pair p = LoadPair(ctx);
  std::vector<Alignment> alignments = AlignAll(p.rml, p.gsml, ctx.jobs);
  EmitCsv(ctx, AlignmentCsv(alignments));
  std::ostream &table = TableStream(ctx);
  Banner(ctx, table);
  for (const Alignment &a : alignments) {
    table << std::left << std::setw(16) << a.doc_id << std::setw(10) << a.rm_id
          << std::setw(10) << a.matched_gsm_id.value_or("-") << std::setw(20)
          << CriterionName(a.criterion) << a.overlap << "\n";
  }
  return kExitOk;
}

void AppendScoreRows(std::string &csv, const ScoreReport &r) {
  auto row = [&](std::string_view category, const PrecisionRecall &pr) {
    csv += CsvLine({r.scope(), std::string(category), std::to_string(pr.recall.num),
                    std::to_string(pr.recall.den), FormatRatio(pr.recall),
                    std::to_string(pr.precision.num), std::to_string(pr.precision.den),
                    FormatRatio(pr.precision), FormatValue(pr.f1())});
  };
  row("ALL", r.overall);
  for (Category c : kAllCategories) row(CategoryName(c), r.per_category.at(c));
}

void PrintScoreTable(std::ostream &os, const ScoreReport &r) {
  auto cell = [](const Ratio &ratio) {
    std::string s = std::to_string(ratio.num) + "/" + std::to_string(ratio.den);
    std::string v = ratio.defined() ? FormatValue(ratio.value(), 3) : "n/a";
    return s + " " + v;
  };
  os << "scope " << r.scope() << "\n";
  os << std::left << std::setw(15) << "category" << std::setw(18) << "recall"
     << std::setw(18) << "precision" << "f1\n";
  auto line = [&](std::string_view name, const PrecisionRecall &pr) {
    std::optional<double> f1 = pr.f1();
    os << std::left << std::setw(15) << name << std::setw(18) << cell(pr.recall)
       << std::setw(18) << cell(pr.precision)
       << (f1 ? FormatValue(f1, 3) : "n/a") << "\n";
  };
  line("ALL", r.overall);
  for (Category c : kAllCategories) line(CategoryName(c), r.per_category.at(c));
}

int RunScore(const Context &ctx) {
  Pair p = LoadPair(ctx);
  std::vector<Alignment> alignments = AlignAll(p.rml, p.gsml, ctx.jobs);
  std::vector<ScoreReport> reports = ScoreAll(alignments, p.gsml, p.rml);
  ScoreReport corpus = Aggregate(reports);

  std::string csv =
      "SCOPE,CATEGORY,RECALL_NUM,RECALL_DEN,RECALL,PRECISION_NUM,PRECISION_DEN,"
      "PRECISION,F1\n";
  if (ctx.config.per_doc) {
    for (const ScoreReport &r : reports) AppendScoreRows(csv, r);
  }
  AppendScoreRows(csv, corpus);
  EmitCsv(ctx, csv);

  std::ostream &table = TableStream(ctx);
  Banner(ctx, table);
  if (ctx.config.per_doc) {
    for (const ScoreReport &r : reports) PrintScoreTable(table, r);
  }
  PrintScoreTable(table, corpus);
  return kExitOk;
}

AnnotatorSet LoadAnnotators(const Context &ctx, const Corpus &corpus) {
  if (ctx.config.annotators.empty()) throw UsageError("--annotator is required");
  std::vector<AnnotatorList> lists;
  for (const std::string &arg : ctx.config.annotators) {
    // "id=path" or a bare path whose stem is the id.
    std::string id, path = arg;
    if (size_t eq = arg.find('='); eq != std::string::npos && !fs::exists(arg)) {
      id = arg.substr(0, eq);
      path = arg.substr(eq + 1);
    } else {
      id = fs::path(arg).stem().string();
    }
    RequireFile(path, "--annotator");
    MistakeList list = LoadMistakeList(path, ListRole::kGold);
    CheckList(ctx, list, corpus, path);
    lists.push_back({id, std::move(list)});
  }
  try {
    return AnnotatorSet(std::move(lists));
  } catch (const Error &e) {
    throw UsageError(e.what());
  }
}

int RunMerge(const Context &ctx) {
  Corpus corpus = LoadCorpusArg(ctx);
  AnnotatorSet set = LoadAnnotators(ctx, corpus);
  if (ctx.config.quorum < 1 || ctx.config.quorum > static_cast<int>(set.size())) {
    throw UsageError("--quorum " + std::to_string(ctx.config.quorum) +
                     " outside 1.." + std::to_string(set.size()));
  }
  MergeResult merged = Merge(set, ctx.config.quorum);
  for (const MergeTie &tie : merged.ties) {
    std::string tied;
    for (Category c : tie.tied) tied += (tied.empty() ? "" : "/") + std::string(CategoryName(c));
    ctx.err << "WARNING " << tie.doc_id << "/" << tie.mistake_id
            << " [category_tie]: " << tied << " tied; adjudicate by hand\n";
  }
  EmitCsv(ctx, SerializeMistakeList(merged.gold));
  std::ostream &table = TableStream(ctx);
  Banner(ctx, table);
  table << "merged " << set.size() << " annotators at quorum " << ctx.config.quorum
        << ": " << merged.gold.size() << " entries, " << merged.ties.size()
        << " category ties\n";
  return kExitOk;
}

int RunAgreement(const Context &ctx) {
  Corpus corpus = LoadCorpusArg(ctx);
  AnnotatorSet set = LoadAnnotators(ctx, corpus);
  if (set.size() < 2) throw UsageError("agreement needs at least two --annotator lists");
  AgreementTable table = Agreement(set);
  std::string csv =
      "REFERENCE,CANDIDATE,PRECISION_NUM,PRECISION_DEN,PRECISION,RECALL_NUM,"
      "RECALL_DEN,RECALL,F1\n";
  for (const PairAgreement &p : table.pairs) {
    csv += CsvLine({p.reference, p.candidate, std::to_string(p.overall.precision.num),
                    std::to_string(p.overall.precision.den),
                    FormatRatio(p.overall.precision), std::to_string(p.overall.recall.num),
                    std::to_string(p.overall.recall.den), FormatRatio(p.overall.recall),
                    FormatValue(p.overall.f1())});
  }
  csv += CsvLine({"MEAN", "", "", "", "", "", "", "", FormatValue(table.mean_f1)});
  EmitCsv(ctx, csv);
  std::ostream &os = TableStream(ctx);
  Banner(ctx, os);
  for (const PairAgreement &p : table.pairs) {
    os << std::left << std::setw(14) << p.reference << std::setw(14) << p.candidate
       << "P=" << std::setw(10) << FormatRatio(p.overall.precision) << "R=" << std::setw(10)
       << FormatRatio(p.overall.recall) << "F1=" << FormatValue(p.overall.f1()) << "\n";
  }
  os << "mean pairwise F1 " << (table.mean_f1 ? FormatValue(table.mean_f1) : "n/a") << "\n";
  return kExitOk;
}

int RunBaselineCommand(const Context &ctx) {
  Corpus corpus = LoadCorpusArg(ctx);
  RequireDir(ctx.config.games_dir, "--games");
  auto games = LoadGames(ctx.config.games_dir);
  MistakeList rml = RunBaseline(corpus, games, ctx.jobs);
  CheckList(ctx, rml, corpus, "baseline output");
  EmitCsv(ctx, SerializeMistakeList(rml));
  std::ostream &os = TableStream(ctx);
  Banner(ctx, os);
  os << "baseline reported " << rml.size() << " mistakes over " << corpus.size()
     << " documents\n";
  return kExitOk;
}

int RunServe(const Context &ctx) {
  Corpus corpus = LoadCorpusArg(ctx);
  RequireDir(ctx.config.games_dir, "--games");
  if (ctx.config.annotations_dir.empty()) throw UsageError("--annotations is required");
  if (ctx.config.port < 0 || ctx.config.port > 65535) {
    throw UsageError("--port must be in 0..65535");
  }
  AnnotationService service(std::move(corpus), LoadGames(ctx.config.games_dir),
                            ctx.config.annotations_dir);
  HttpServer server(service, ctx.config.static_dir);
  int port = server.Bind(ctx.config.host, ctx.config.port);
  ctx.out << "serving on http://" << ctx.config.host << ":" << port << "\n" << std::flush;
  server.Listen();
  return kExitOk;
}

}  // namespace

int Run(const RunConfig &config, std::ostream &out, std::ostream &err) {
  int jobs = config.jobs > 0 ? config.jobs
                             : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  Context ctx{config, out, err, jobs};
  try {
    const std::string &cmd = config.subcommand;
    if (cmd == "tokenize") return RunTokenize(ctx);
    if (cmd == "validate") return RunValidate(ctx);
    if (cmd == "align") return RunAlign(ctx);
    if (cmd == "score") return RunScore(ctx);
    if (cmd == "merge") return RunMerge(ctx);
    if (cmd == "agreement") return RunAgreement(ctx);
    if (cmd == "baseline") return RunBaselineCommand(ctx);
    if (cmd == "serve") return RunServe(ctx);
    err << "accuscore: unknown subcommand \"" << cmd << "\"\n";
    return kExitUsage;
  } catch (const BlockingIssues &e) {
    err << "accuscore: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception &e) {
    err << "accuscore: " << e.what() << "\n";
    return kExitUsage;
  }
}

int Main(int argc, char **argv) {
  CLI::App app{"Span-annotated mistake list scoring for generated sports summaries"};
  app.require_subcommand(1);
  RunConfig config;
  app.add_flag("--deterministic", config.deterministic,
               "Omit the timestamp line from summaries");
  app.add_option("-j,--jobs", config.jobs, "Worker threads (0 = all cores)");

  auto corpus_opt = [&](CLI::App *sub, bool required) {
    auto *opt = sub->add_option("--corpus", config.corpus_dir, "Corpus directory")
                    ->envname("ACCUSCORE_CORPUS");
    if (required) opt->required();
  };
  auto output_opt = [&](CLI::App *sub) {
    sub->add_option("-o,--output", config.output, "Output file (default: stdout)");
  };

  CLI::App *tokenize = app.add_subcommand("tokenize", "Print tokens with their indices");
  tokenize->add_option("file", config.input, "Text file")->required();
  tokenize->add_flag("--normalize", config.normalize,
                     "Split punctuation in raw, untokenized text first");
  output_opt(tokenize);

  CLI::App *validate = app.add_subcommand("validate", "Check a mistake list against a corpus");
  validate->add_option("--list,list", config.input, "Mistake-list CSV")->required();
  validate->add_option("--role", config.role, "gold or reported");
  validate->add_flag("--strict", config.strict, "Exit 1 on validation errors");
  corpus_opt(validate, true);
  output_opt(validate);

  CLI::App *align = app.add_subcommand("align", "Align an RML against a GSML");
  align->add_option("--gsml", config.gsml, "Gold mistake list")->required();
  align->add_option("--rml", config.rml, "Reported mistake list")->required();
  corpus_opt(align, true);
  output_opt(align);

  CLI::App *score = app.add_subcommand("score", "Recall and precision of an RML");
  score->add_option("--gsml", config.gsml, "Gold mistake list")->required();
  score->add_option("--rml", config.rml, "Reported mistake list")->required();
  score->add_flag("--per-doc", config.per_doc, "Also emit per-document rows");
  corpus_opt(score, true);
  output_opt(score);

  CLI::App *merge = app.add_subcommand("merge", "Merge several annotators' gold lists");
  merge->add_option("--annotator", config.annotators, "[id=]path, repeatable")->required();
  merge->add_option("--quorum", config.quorum, "Annotators needed per mistake");
  corpus_opt(merge, true);
  output_opt(merge);

  CLI::App *agreement = app.add_subcommand("agreement", "Pairwise inter-annotator agreement");
  agreement->add_option("--annotator", config.annotators, "[id=]path, repeatable")->required();
  corpus_opt(agreement, true);
  output_opt(agreement);

  CLI::App *baseline = app.add_subcommand("baseline", "Rule-based RML from box-score data");
  corpus_opt(baseline, true);
  baseline->add_option("--games", config.games_dir, "Game record directory")->required();
  output_opt(baseline);

  CLI::App *serve = app.add_subcommand("serve", "Run the annotation HTTP service");
  corpus_opt(serve, true);
  serve->add_option("--games", config.games_dir, "Game record directory")->required();
  serve->add_option("--annotations", config.annotations_dir, "Annotation store")->required();
  serve->add_option("--port", config.port, "Port (0 picks a free one)")
      ->check(CLI::Range(0, 65535));
  serve->add_option("--host", config.host, "Bind address");
  serve->add_option("--static", config.static_dir, "Directory with the annotation UI build");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  config.subcommand = app.get_subcommands().front()->get_name();
  return Run(config, std::cout, std::cerr);
}

}  // namespace accuscore
