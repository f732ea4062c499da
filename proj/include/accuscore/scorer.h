#ifndef ACCUSCORE_SCORER_H_
#define ACCUSCORE_SCORER_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "accuscore/aligner.h"
#include "accuscore/category.h"
#include "accuscore/mistake.h"

namespace accuscore {

// An exact count ratio. A zero denominator means undefined, not zero.
struct Ratio {
  int64_t num = 0;
  int64_t den = 0;

  bool defined() const { return den != 0; }
  std::optional<double> value() const;

  Ratio &operator+=(const Ratio &other) {
    num += other.num;
    den += other.den;
    return *this;
  }
  bool operator==(const Ratio &) const = default;
};

struct PrecisionRecall {
  Ratio recall;
  Ratio precision;

  // Harmonic mean; undefined when either component is undefined, 0 when
  // both are 0. Convenience only.
  std::optional<double> f1() const;

  PrecisionRecall &operator+=(const PrecisionRecall &other) {
    recall += other.recall;
    precision += other.precision;
    return *this;
  }
  bool operator==(const PrecisionRecall &) const = default;
};

inline constexpr std::string_view kCorpusScope = "CORPUS";

struct ScoreReport {
  std::optional<std::string> doc_id;  // absent for a corpus aggregate
  std::map<Category, PrecisionRecall> per_category;  // all six categories
  PrecisionRecall overall;

  bool is_corpus() const { return !doc_id.has_value(); }
  std::string scope() const {
    return doc_id ? *doc_id : std::string(kCorpusScope);
  }
  bool operator==(const ScoreReport &) const = default;
};

// Scores one document.
//   overall precision = aligned RMs / RMs, overall recall = consumed GSMs /
//   GSMs, where any criterion except NOT_FOUND counts as aligned.
//   per-category precision(c) = RMs of c aligned EXACT or SAME_CATEGORY /
//   RMs of c, recall(c) likewise over GSMs of c. DIFFERENT_CATEGORY matches
//   count only overall.
// Throws Error when the alignments do not cover exactly the document's RMs,
// reference unknown GSM ids, reuse a GSM, or carry a criterion that
// contradicts the categories.
ScoreReport Score(std::span<const Alignment> alignments, const MistakeList &gsml,
                  const MistakeList &rml, std::string_view doc_id);

// Per-document reports for the union of documents in both lists, ascending
// doc_id. alignments may span several documents.
std::vector<ScoreReport> ScoreAll(std::span<const Alignment> alignments,
                                  const MistakeList &gsml,
                                  const MistakeList &rml);

// Micro-average: sums counts, result has the corpus scope. Throws Error if
// an input is already a corpus report.
ScoreReport Aggregate(std::span<const ScoreReport> reports);

}  // namespace accuscore

#endif  // ACCUSCORE_SCORER_H_
