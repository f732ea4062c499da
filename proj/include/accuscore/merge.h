#ifndef ACCUSCORE_MERGE_H_
#define ACCUSCORE_MERGE_H_

#include <optional>
#include <string>
#include <vector>

#include "accuscore/category.h"
#include "accuscore/mistake.h"
#include "accuscore/scorer.h"

namespace accuscore {

struct AnnotatorList {
  std::string annotator_id;
  MistakeList list;
};

// Independent gold annotations of the same corpus. Construction checks that
// there is at least one annotator and that ids are unique.
class AnnotatorSet {
 public:
  explicit AnnotatorSet(std::vector<AnnotatorList> annotators);

  const std::vector<AnnotatorList> &annotators() const { return annotators_; }
  size_t size() const { return annotators_.size(); }

 private:
  std::vector<AnnotatorList> annotators_;
};

// A merged entry whose majority category was decided by the fixed category
// order rather than by a strict majority.
struct MergeTie {
  std::string doc_id;
  std::string mistake_id;
  std::vector<Category> tied;
};

struct MergeResult {
  MistakeList gold;
  std::vector<MergeTie> ties;
};

// Clusters entries across annotators by single-link connectivity over the
// pairwise alignments (earlier annotator as gold, later as reported). A
// cluster survives when entries from at least quorum distinct annotators are
// in it. The survivor takes the majority category among members (ties go to
// the earlier category in enum order) and the smallest (start, end) span
// among the members with that category. Ids are regenerated.
// Throws Error unless 1 <= quorum <= number of annotators.
MergeResult Merge(const AnnotatorSet &set, int quorum);

struct PairAgreement {
  std::string reference;  // treated as gold
  std::string candidate;  // treated as reported
  PrecisionRecall overall;
};

struct AgreementTable {
  std::vector<PairAgreement> pairs;  // every ordered pair, reference-major
  std::optional<double> mean_f1;     // over pairs with a defined F1
};

// Throws Error with fewer than two annotators.
AgreementTable Agreement(const AnnotatorSet &set);

}  // namespace accuscore

#endif  // ACCUSCORE_MERGE_H_
