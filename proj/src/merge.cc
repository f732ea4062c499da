#include "accuscore/merge.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "accuscore/aligner.h"
#include "accuscore/errors.h"

namespace accuscore {

AnnotatorSet::AnnotatorSet(std::vector<AnnotatorList> annotators)
    : annotators_(std::move(annotators)) {
  if (annotators_.empty()) throw Error("annotator set is empty");
  std::set<std::string> ids;
  for (const AnnotatorList &a : annotators_) {
    if (!ids.insert(a.annotator_id).second) {
      throw Error("annotator \"" + a.annotator_id + "\" listed twice");
    }
  }
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  size_t Find(size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void Union(size_t a, size_t b) {
    a = Find(a);
    b = Find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<size_t> parent_;
};

struct Member {
  size_t annotator;
  const Mistake *mistake;
};

}  // namespace

MergeResult Merge(const AnnotatorSet &set, int quorum) {
  const auto &annotators = set.annotators();
  if (quorum < 1 || quorum > static_cast<int>(annotators.size())) {
    throw Error("quorum " + std::to_string(quorum) + " outside 1.." +
                std::to_string(annotators.size()));
  }

  std::set<std::string> docs;
  for (const AnnotatorList &a : annotators) {
    for (const std::string &d : a.list.DocIds()) docs.insert(d);
  }

  std::vector<Mistake> merged;
  std::vector<MergeTie> ties;
  std::vector<Mistake> tied_entries;  // parallel to ties, before id assignment
  for (const std::string &doc : docs) {
    std::vector<Member> members;
    std::vector<size_t> offset(annotators.size());
    for (size_t a = 0; a < annotators.size(); ++a) {
      offset[a] = members.size();
      for (const Mistake &m : annotators[a].list.ForDocument(doc)) {
        members.push_back({a, &m});
      }
    }

    DisjointSets clusters(members.size());
    for (size_t a = 0; a < annotators.size(); ++a) {
      std::span<const Mistake> gold = annotators[a].list.ForDocument(doc);
      for (size_t b = a + 1; b < annotators.size(); ++b) {
        std::span<const Mistake> reported = annotators[b].list.ForDocument(doc);
        for (const Alignment &link : AlignMistakes(reported, gold)) {
          if (!link.matched_gsm_id) continue;
          size_t gi = 0, ri = 0;
          while (gold[gi].mistake_id != *link.matched_gsm_id) ++gi;
          while (reported[ri].mistake_id != link.rm_id) ++ri;
          clusters.Union(offset[a] + gi, offset[b] + ri);
        }
      }
    }

    std::map<size_t, std::vector<const Member *>> groups;
    for (size_t i = 0; i < members.size(); ++i) {
      groups[clusters.Find(i)].push_back(&members[i]);
    }

    for (const auto &[root, group] : groups) {
      std::set<size_t> voters;
      std::map<Category, int> votes;
      for (const Member *m : group) {
        voters.insert(m->annotator);
        ++votes[m->mistake->category];
      }
      if (static_cast<int>(voters.size()) < quorum) continue;

      int top = 0;
      for (const auto &[c, n] : votes) top = std::max(top, n);
      std::vector<Category> leaders;
      for (const auto &[c, n] : votes) {
        if (n == top) leaders.push_back(c);  // map order == category order
      }
      Category winner = leaders.front();

      const Mistake *chosen = nullptr;
      for (const Member *m : group) {
        if (m->mistake->category != winner) continue;
        if (chosen == nullptr || m->mistake->span < chosen->span) {
          chosen = m->mistake;
        }
      }
      Mistake out;
      out.doc_id = doc;
      out.span = chosen->span;
      out.text = chosen->text;
      out.category = winner;
      if (leaders.size() > 1) {
        ties.push_back({doc, "", leaders});
        tied_entries.push_back(out);
      }
      merged.push_back(std::move(out));
    }
  }

  MistakeList gold(ListRole::kGold, std::move(merged));
  for (size_t t = 0; t < ties.size(); ++t) {
    for (const Mistake &m : gold.ForDocument(ties[t].doc_id)) {
      if (m.span == tied_entries[t].span &&
          m.category == tied_entries[t].category) {
        ties[t].mistake_id = m.mistake_id;
        break;
      }
    }
  }
  return MergeResult{std::move(gold), std::move(ties)};
}

AgreementTable Agreement(const AnnotatorSet &set) {
  const auto &annotators = set.annotators();
  if (annotators.size() < 2) {
    throw Error("agreement needs at least two annotators");
  }
  AgreementTable table;
  double f1_sum = 0.0;
  int f1_count = 0;
  for (const AnnotatorList &reference : annotators) {
    for (const AnnotatorList &candidate : annotators) {
      if (&reference == &candidate) continue;
      MistakeList gold = reference.list.WithRole(ListRole::kGold);
      MistakeList reported = candidate.list.WithRole(ListRole::kReported);
      std::vector<Alignment> alignments = AlignAll(reported, gold);
      std::vector<ScoreReport> reports = ScoreAll(alignments, gold, reported);
      PairAgreement pair{reference.annotator_id, candidate.annotator_id,
                         Aggregate(reports).overall};
      if (std::optional<double> f1 = pair.overall.f1()) {
        f1_sum += *f1;
        ++f1_count;
      }
      table.pairs.push_back(std::move(pair));
    }
  }
  if (f1_count > 0) table.mean_f1 = f1_sum / f1_count;
  return table;
}

}  // namespace accuscore
