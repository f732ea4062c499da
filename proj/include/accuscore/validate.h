#ifndef ACCUSCORE_VALIDATE_H_
#define ACCUSCORE_VALIDATE_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "accuscore/corpus.h"
#include "accuscore/mistake.h"

namespace accuscore {

enum class Severity { kError, kWarning };

std::string_view SeverityName(Severity severity);

// Issue codes.
inline constexpr std::string_view kUnknownDoc = "unknown_doc";
inline constexpr std::string_view kInvertedSpan = "inverted_span";
inline constexpr std::string_view kSpanOutOfRange = "span_out_of_range";
inline constexpr std::string_view kTextMismatch = "text_mismatch";
inline constexpr std::string_view kBadCategory = "bad_category";
inline constexpr std::string_view kDuplicateId = "duplicate_id";
inline constexpr std::string_view kDuplicateEntry = "duplicate_entry";
inline constexpr std::string_view kOverlap = "overlap";

struct ValidationIssue {
  Severity severity = Severity::kError;
  std::string code;
  std::string doc_id;
  std::string mistake_id;
  std::string message;

  bool operator==(const ValidationIssue &) const = default;
};

// Checks every entry against its document: span order and range, surface
// text, id uniqueness and exact duplicates are ERRORs; overlapping spans in
// the same document are WARNINGs. Issues come out in list order.
std::vector<ValidationIssue> ValidateMistakeList(const MistakeList &list,
                                                 const Corpus &corpus);

// Same checks for entries already known to belong to doc. Entries must be in
// canonical order for the overlap and duplicate checks to be complete.
std::vector<ValidationIssue> ValidateDocumentMistakes(
    std::span<const Mistake> entries, const Document &doc);

bool HasErrors(std::span<const ValidationIssue> issues);

// "ERROR doc/id [code]: message"
std::string FormatIssue(const ValidationIssue &issue);

}  // namespace accuscore

#endif  // ACCUSCORE_VALIDATE_H_
