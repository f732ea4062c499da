#include "accuscore/aligner.h"

#include <algorithm>
#include <tuple>

#include "accuscore/errors.h"
#include "parallel.h"

namespace accuscore {

std::string_view CriterionName(MatchCriterion criterion) {
  switch (criterion) {
    case MatchCriterion::kExact: return "EXACT";
    case MatchCriterion::kSameCategory: return "SAME_CATEGORY";
    case MatchCriterion::kDifferentCategory: return "DIFFERENT_CATEGORY";
    case MatchCriterion::kNotFound: return "NOT_FOUND";
  }
  return "NOT_FOUND";
}

std::optional<MatchCriterion> ParseCriterion(std::string_view text) {
  for (MatchCriterion c :
       {MatchCriterion::kExact, MatchCriterion::kSameCategory,
        MatchCriterion::kDifferentCategory, MatchCriterion::kNotFound}) {
    if (text == CriterionName(c)) return c;
  }
  return std::nullopt;
}

int Overlap(TokenSpan a, TokenSpan b) {
  return std::max(0, std::min(a.end, b.end) - std::max(a.start, b.start) + 1);
}

namespace {

void CheckSpans(std::span<const Mistake> entries, std::string_view side) {
  for (const Mistake &m : entries) {
    if (!m.span.well_formed()) {
      throw Error(std::string(side) + " entry " + m.doc_id + "/" +
                  m.mistake_id + " has malformed span " +
                  std::to_string(m.span.start) + "-" +
                  std::to_string(m.span.end) + "; validate the list first");
    }
  }
}

// Index of the unconsumed gold entry with maximal non-zero overlap whose
// category agrees (same == true) or differs, or -1.
int BestOverlap(const Mistake &rm, std::span<const Mistake> gold,
                const std::vector<bool> &consumed, bool same) {
  int best = -1;
  int best_overlap = 0;
  for (size_t g = 0; g < gold.size(); ++g) {
    if (consumed[g]) continue;
    if ((gold[g].category == rm.category) != same) continue;
    int overlap = Overlap(rm.span, gold[g].span);
    if (overlap == 0) continue;
    if (best < 0 || overlap > best_overlap) {
      best = static_cast<int>(g);
      best_overlap = overlap;
      continue;
    }
    if (overlap < best_overlap) continue;
    const Mistake &cur = gold[best];
    if (std::tie(gold[g].span.start, gold[g].span.end, gold[g].mistake_id) <
        std::tie(cur.span.start, cur.span.end, cur.mistake_id)) {
      best = static_cast<int>(g);
    }
  }
  return best;
}

}  // namespace

std::vector<Alignment> AlignMistakes(std::span<const Mistake> reported,
                                     std::span<const Mistake> gold) {
  CheckSpans(reported, "reported");
  CheckSpans(gold, "gold");

  std::vector<const Mistake *> order;
  order.reserve(reported.size());
  for (const Mistake &m : reported) order.push_back(&m);
  std::stable_sort(order.begin(), order.end(),
                   [](const Mistake *a, const Mistake *b) {
                     return CanonicalLess(*a, *b);
                   });

  std::vector<bool> consumed(gold.size(), false);
  std::vector<Alignment> result;
  result.reserve(order.size());
  for (const Mistake *rm : order) {
    Alignment a;
    a.doc_id = rm->doc_id;
    a.rm_id = rm->mistake_id;

    int match = -1;
    for (size_t g = 0; g < gold.size(); ++g) {
      if (!consumed[g] && gold[g].span == rm->span &&
          gold[g].category == rm->category) {
        match = static_cast<int>(g);
        a.criterion = MatchCriterion::kExact;
        break;
      }
    }
    if (match < 0) {
      match = BestOverlap(*rm, gold, consumed, /*same=*/true);
      if (match >= 0) a.criterion = MatchCriterion::kSameCategory;
    }
    if (match < 0) {
      match = BestOverlap(*rm, gold, consumed, /*same=*/false);
      if (match >= 0) a.criterion = MatchCriterion::kDifferentCategory;
    }
    if (match >= 0) {
      consumed[match] = true;
      a.matched_gsm_id = gold[match].mistake_id;
      a.overlap = Overlap(rm->span, gold[match].span);
    } else {
      a.criterion = MatchCriterion::kNotFound;
    }
    result.push_back(std::move(a));
  }
  return result;
}

std::vector<Alignment> Align(const MistakeList &rml, const MistakeList &gsml,
                             std::string_view doc_id) {
  return AlignMistakes(rml.ForDocument(doc_id), gsml.ForDocument(doc_id));
}

std::vector<Alignment> AlignAll(const MistakeList &rml, const MistakeList &gsml,
                                int jobs) {
  std::vector<std::string> docs = rml.DocIds();
  std::vector<std::vector<Alignment>> per_doc(docs.size());
  internal::ParallelFor(docs.size(), jobs, [&](size_t i) {
    per_doc[i] = Align(rml, gsml, docs[i]);
  });
  std::vector<Alignment> result;
  for (auto &doc : per_doc) {
    std::move(doc.begin(), doc.end(), std::back_inserter(result));
  }
  return result;
}

}  // namespace accuscore
