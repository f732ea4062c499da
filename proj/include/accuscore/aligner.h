#ifndef ACCUSCORE_ALIGNER_H_
#define ACCUSCORE_ALIGNER_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "accuscore/mistake.h"

namespace accuscore {

// Match criteria, tried in this order for every reported mistake.
enum class MatchCriterion {
  kExact,              // identical span and identical category
  kSameCategory,       // same category, maximal non-zero overlap
  kDifferentCategory,  // other category, maximal non-zero overlap
  kNotFound,
};

std::string_view CriterionName(MatchCriterion criterion);
std::optional<MatchCriterion> ParseCriterion(std::string_view text);

struct Alignment {
  std::string doc_id;
  std::string rm_id;
  std::optional<std::string> matched_gsm_id;  // absent iff kNotFound
  MatchCriterion criterion = MatchCriterion::kNotFound;
  int overlap = 0;

  bool operator==(const Alignment &) const = default;
};

// Number of token indices shared by a and b.
int Overlap(TokenSpan a, TokenSpan b);

// Greedy one-to-one alignment of one document's reported mistakes against
// its gold mistakes. Reported mistakes are processed in canonical order and
// each gold mistake is consumed at most once. Ties on overlap go to the gold
// mistake with the smaller start, then smaller end, then smaller id. Returns
// one Alignment per reported mistake in processing order. Throws Error on a
// malformed span (negative or inverted), i.e. unvalidated input.
std::vector<Alignment> AlignMistakes(std::span<const Mistake> reported,
                                     std::span<const Mistake> gold);

// AlignMistakes over the entries of doc_id. A doc absent from either list
// behaves as an empty side.
std::vector<Alignment> Align(const MistakeList &rml, const MistakeList &gsml,
                             std::string_view doc_id);

// Every document of the RML, ascending doc_id. Documents are aligned
// independently, in parallel when jobs > 1.
std::vector<Alignment> AlignAll(const MistakeList &rml, const MistakeList &gsml,
                                int jobs = 1);

}  // namespace accuscore

#endif  // ACCUSCORE_ALIGNER_H_
