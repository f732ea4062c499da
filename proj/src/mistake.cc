#include "accuscore/mistake.h"

#include <algorithm>
#include <set>
#include <tuple>

namespace accuscore {

std::string_view RolePrefix(ListRole role) {
  return role == ListRole::kGold ? "GSM" : "RM";
}

bool CanonicalLess(const Mistake &a, const Mistake &b) {
  return std::tie(a.span.start, a.span.end, a.category, a.mistake_id) <
         std::tie(b.span.start, b.span.end, b.category, b.mistake_id);
}

namespace {

bool ListLess(const Mistake &a, const Mistake &b) {
  if (a.doc_id != b.doc_id) return a.doc_id < b.doc_id;
  return CanonicalLess(a, b);
}

}  // namespace

MistakeList::MistakeList(ListRole role, std::vector<Mistake> entries)
    : role_(role), entries_(std::move(entries)) {
  // Ids are only compared among non-empty ones, so sorting first leaves
  // unnamed entries in span order for ordinal assignment.
  std::stable_sort(entries_.begin(), entries_.end(), ListLess);

  auto doc_begin = entries_.begin();
  while (doc_begin != entries_.end()) {
    auto doc_end = std::find_if(doc_begin, entries_.end(), [&](const Mistake &m) {
      return m.doc_id != doc_begin->doc_id;
    });
    std::set<std::string> used;
    for (auto it = doc_begin; it != doc_end; ++it) {
      if (!it->mistake_id.empty()) used.insert(it->mistake_id);
    }
    int ordinal = 0;
    bool assigned = false;
    for (auto it = doc_begin; it != doc_end; ++it) {
      ++ordinal;
      if (!it->mistake_id.empty()) continue;
      int n = ordinal;
      std::string id;
      do {
        id = std::string(RolePrefix(role_)) + "-" + std::to_string(n++);
      } while (used.count(id) > 0);
      used.insert(id);
      it->mistake_id = id;
      assigned = true;
    }
    if (assigned) std::sort(doc_begin, doc_end, CanonicalLess);
    doc_begin = doc_end;
  }
}

std::span<const Mistake> MistakeList::ForDocument(std::string_view doc_id) const {
  auto lo = std::lower_bound(
      entries_.begin(), entries_.end(), doc_id,
      [](const Mistake &m, std::string_view id) { return m.doc_id < id; });
  auto hi = std::upper_bound(
      lo, entries_.end(), doc_id,
      [](std::string_view id, const Mistake &m) { return id < m.doc_id; });
  return std::span<const Mistake>(entries_).subspan(lo - entries_.begin(),
                                                     hi - lo);
}

std::vector<std::string> MistakeList::DocIds() const {
  std::vector<std::string> ids;
  for (const Mistake &m : entries_) {
    if (ids.empty() || ids.back() != m.doc_id) ids.push_back(m.doc_id);
  }
  return ids;
}

const Mistake *MistakeList::Find(std::string_view doc_id,
                                 std::string_view id) const {
  for (const Mistake &m : ForDocument(doc_id)) {
    if (m.mistake_id == id) return &m;
  }
  return nullptr;
}

MistakeList MistakeList::WithRole(ListRole role) const {
  MistakeList copy = *this;
  copy.role_ = role;
  return copy;
}

}  // namespace accuscore
