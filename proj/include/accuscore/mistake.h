#ifndef ACCUSCORE_MISTAKE_H_
#define ACCUSCORE_MISTAKE_H_

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "accuscore/category.h"

namespace accuscore {

// Token range, 0-based and inclusive on both ends. A span is well formed when
// 0 <= start <= end; range checks against a document happen in validation.
struct TokenSpan {
  int start = 0;
  int end = 0;

  bool well_formed() const { return start >= 0 && start <= end; }
  int length() const { return end - start + 1; }

  auto operator<=>(const TokenSpan &) const = default;
};

enum class ListRole { kGold, kReported };

// "GSM" for gold lists, "RM" for reported lists.
std::string_view RolePrefix(ListRole role);

struct Mistake {
  std::string mistake_id;
  std::string doc_id;
  TokenSpan span;
  std::string text;
  Category category = Category::kOther;

  bool operator==(const Mistake &) const = default;
};

// Canonical order within one document: (start, end, category, id).
bool CanonicalLess(const Mistake &a, const Mistake &b);

// An immutable list of mistakes over a corpus, playing the gold (GSML) or
// reported (RML) role. Entries are stored grouped by doc_id (ascending) and in
// canonical order within each document. Empty mistake ids are filled in as
// "<prefix>-<ordinal>" per document, skipping ids already in use.
class MistakeList {
 public:
  explicit MistakeList(ListRole role = ListRole::kGold,
                       std::vector<Mistake> entries = {});

  ListRole role() const { return role_; }
  std::span<const Mistake> entries() const { return entries_; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Entries of one document in canonical order; empty if the doc is absent.
  std::span<const Mistake> ForDocument(std::string_view doc_id) const;

  // Distinct doc ids, ascending.
  std::vector<std::string> DocIds() const;

  const Mistake *Find(std::string_view doc_id, std::string_view id) const;

  // Copy of this list with a different role (ids are kept).
  MistakeList WithRole(ListRole role) const;

  bool operator==(const MistakeList &) const = default;

 private:
  ListRole role_;
  std::vector<Mistake> entries_;
};

}  // namespace accuscore

#endif  // ACCUSCORE_MISTAKE_H_
