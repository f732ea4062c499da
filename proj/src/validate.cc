#include "accuscore/validate.h"

#include <algorithm>
#include <set>

#include "accuscore/aligner.h"
#include "accuscore/tokenizer.h"

namespace accuscore {

std::string_view SeverityName(Severity severity) {
  return severity == Severity::kError ? "ERROR" : "WARNING";
}

namespace {

ValidationIssue MakeIssue(Severity severity, std::string_view code,
                          const Mistake &m, std::string message) {
  return ValidationIssue{severity, std::string(code), m.doc_id, m.mistake_id,
                         std::move(message)};
}

std::string SpanString(TokenSpan span) {
  return std::to_string(span.start) + "-" + std::to_string(span.end);
}

}  // namespace

std::vector<ValidationIssue> ValidateDocumentMistakes(
    std::span<const Mistake> entries, const Document &doc) {
  std::vector<ValidationIssue> issues;
  std::set<std::string> ids;
  for (size_t i = 0; i < entries.size(); ++i) {
    const Mistake &m = entries[i];
    if (!ids.insert(m.mistake_id).second) {
      issues.push_back(MakeIssue(Severity::kError, kDuplicateId, m,
                                 "mistake id used more than once"));
    }
    if (m.span.start > m.span.end) {
      issues.push_back(MakeIssue(Severity::kError, kInvertedSpan, m,
                                 "span " + SpanString(m.span) +
                                     " has start after end"));
      continue;
    }
    if (m.span.start < 0 || m.span.end >= doc.token_count()) {
      issues.push_back(MakeIssue(
          Severity::kError, kSpanOutOfRange, m,
          "span " + SpanString(m.span) + " outside document of " +
              std::to_string(doc.token_count()) + " tokens"));
      continue;
    }
    std::string expected = SpanText(doc.tokens, m.span);
    if (m.text != expected) {
      issues.push_back(MakeIssue(Severity::kError, kTextMismatch, m,
                                 "text \"" + m.text + "\" does not match \"" +
                                     expected + "\" at " + SpanString(m.span)));
    }
    // Earlier entries with a well-formed span: exact duplicates and overlaps.
    for (size_t j = 0; j < i; ++j) {
      const Mistake &prev = entries[j];
      if (!prev.span.well_formed()) continue;
      if (prev.span == m.span && prev.category == m.category) {
        issues.push_back(MakeIssue(
            Severity::kError, kDuplicateEntry, m,
            "same span and category as " + prev.mistake_id));
      } else if (Overlap(prev.span, m.span) > 0) {
        issues.push_back(MakeIssue(Severity::kWarning, kOverlap, m,
                                   "span " + SpanString(m.span) +
                                       " overlaps " + prev.mistake_id + " (" +
                                       SpanString(prev.span) + ")"));
      }
    }
  }
  return issues;
}

std::vector<ValidationIssue> ValidateMistakeList(const MistakeList &list,
                                                 const Corpus &corpus) {
  std::vector<ValidationIssue> issues;
  for (const std::string &doc_id : list.DocIds()) {
    std::span<const Mistake> entries = list.ForDocument(doc_id);
    const Document *doc = corpus.Find(doc_id);
    if (doc == nullptr) {
      for (const Mistake &m : entries) {
        issues.push_back(MakeIssue(Severity::kError, kUnknownDoc, m,
                                   "document not in corpus"));
      }
      continue;
    }
    std::vector<ValidationIssue> doc_issues = ValidateDocumentMistakes(entries, *doc);
    issues.insert(issues.end(), doc_issues.begin(), doc_issues.end());
  }
  return issues;
}

bool HasErrors(std::span<const ValidationIssue> issues) {
  return std::any_of(issues.begin(), issues.end(), [](const ValidationIssue &i) {
    return i.severity == Severity::kError;
  });
}

std::string FormatIssue(const ValidationIssue &issue) {
  std::string out(SeverityName(issue.severity));
  out += " " + issue.doc_id;
  if (!issue.mistake_id.empty()) out += "/" + issue.mistake_id;
  out += " [" + issue.code + "]: " + issue.message;
  return out;
}

}  // namespace accuscore
