#include "accuscore/scorer.h"

#include <algorithm>
#include <map>
#include <set>

#include "accuscore/errors.h"

namespace accuscore {

std::optional<double> Ratio::value() const {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

std::optional<double> PrecisionRecall::f1() const {
  std::optional<double> p = precision.value();
  std::optional<double> r = recall.value();
  if (!p || !r) return std::nullopt;
  if (*p + *r == 0.0) return 0.0;
  return 2.0 * *p * *r / (*p + *r);
}

namespace {

ScoreReport EmptyReport(std::optional<std::string> doc_id) {
  ScoreReport report;
  report.doc_id = std::move(doc_id);
  for (Category c : kAllCategories) report.per_category[c] = PrecisionRecall{};
  return report;
}

}  // namespace

ScoreReport Score(std::span<const Alignment> alignments, const MistakeList &gsml,
                  const MistakeList &rml, std::string_view doc_id) {
  std::span<const Mistake> gold = gsml.ForDocument(doc_id);
  std::span<const Mistake> reported = rml.ForDocument(doc_id);
  ScoreReport report = EmptyReport(std::string(doc_id));

  std::map<std::string_view, const Mistake *> gold_by_id;
  for (const Mistake &m : gold) gold_by_id[m.mistake_id] = &m;
  std::map<std::string_view, const Mistake *> reported_by_id;
  for (const Mistake &m : reported) reported_by_id[m.mistake_id] = &m;

  for (const Mistake &m : gold) {
    ++report.overall.recall.den;
    ++report.per_category[m.category].recall.den;
  }
  for (const Mistake &m : reported) {
    ++report.overall.precision.den;
    ++report.per_category[m.category].precision.den;
  }

  auto fail = [&](const Alignment &a, const std::string &what) {
    throw Error("alignment " + std::string(doc_id) + "/" + a.rm_id + ": " + what);
  };

  std::set<std::string_view> seen_rm;
  std::set<std::string_view> seen_gsm;
  for (const Alignment &a : alignments) {
    if (a.doc_id != doc_id) continue;
    auto rm_it = reported_by_id.find(a.rm_id);
    if (rm_it == reported_by_id.end()) fail(a, "unknown reported mistake id");
    if (!seen_rm.insert(rm_it->first).second) fail(a, "reported mistake aligned twice");
    const Mistake &rm = *rm_it->second;

    if (a.criterion == MatchCriterion::kNotFound) {
      if (a.matched_gsm_id) fail(a, "NOT_FOUND alignment carries a gold id");
      continue;
    }
    if (!a.matched_gsm_id) fail(a, "matched alignment lacks a gold id");
    auto gsm_it = gold_by_id.find(*a.matched_gsm_id);
    if (gsm_it == gold_by_id.end()) {
      fail(a, "unknown gold mistake id " + *a.matched_gsm_id);
    }
    if (!seen_gsm.insert(gsm_it->first).second) {
      fail(a, "gold mistake " + *a.matched_gsm_id + " matched twice");
    }
    const Mistake &gsm = *gsm_it->second;
    bool same_category = gsm.category == rm.category;
    if ((a.criterion == MatchCriterion::kDifferentCategory) == same_category) {
      fail(a, std::string(CriterionName(a.criterion)) +
                  " contradicts categories " +
                  std::string(CategoryName(rm.category)) + "/" +
                  std::string(CategoryName(gsm.category)));
    }

    ++report.overall.precision.num;
    ++report.overall.recall.num;
    if (same_category) {
      ++report.per_category[rm.category].precision.num;
      ++report.per_category[gsm.category].recall.num;
    }
  }
  if (seen_rm.size() != reported.size()) {
    throw Error("alignments for " + std::string(doc_id) + " cover " +
                std::to_string(seen_rm.size()) + " of " +
                std::to_string(reported.size()) + " reported mistakes");
  }
  return report;
}

std::vector<ScoreReport> ScoreAll(std::span<const Alignment> alignments,
                                  const MistakeList &gsml,
                                  const MistakeList &rml) {
  std::set<std::string> docs;
  for (const std::string &d : gsml.DocIds()) docs.insert(d);
  for (const std::string &d : rml.DocIds()) docs.insert(d);

  std::map<std::string_view, std::vector<Alignment>> by_doc;
  for (const Alignment &a : alignments) {
    if (!docs.count(a.doc_id)) {
      throw Error("alignment " + a.doc_id + "/" + a.rm_id +
                  ": document not in either list");
    }
    by_doc[a.doc_id].push_back(a);
  }
  std::vector<ScoreReport> reports;
  reports.reserve(docs.size());
  for (const std::string &doc : docs) {
    reports.push_back(Score(by_doc[doc], gsml, rml, doc));
  }
  return reports;
}

ScoreReport Aggregate(std::span<const ScoreReport> reports) {
  ScoreReport total = EmptyReport(std::nullopt);
  for (const ScoreReport &r : reports) {
    if (r.is_corpus()) throw Error("cannot aggregate a corpus-level report");
    total.overall += r.overall;
    for (const auto &[category, pr] : r.per_category) {
      total.per_category[category] += pr;
    }
  }
  return total;
}

}  // namespace accuscore
