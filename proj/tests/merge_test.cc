#include "accuscore/merge.h"

#include "accuscore/errors.h"
#include "doctest.h"
#include "testing.h"

namespace accuscore {
namespace {

using testing::MakeMistake;

AnnotatorList Load(const std::string &id) {
  return {id, LoadMistakeList(testing::Fixture("annotators/" + id + ".csv"), ListRole::kGold)};
}

std::vector<std::tuple<std::string, int, int, Category>> Keys(const MistakeList &l) {
  std::vector<std::tuple<std::string, int, int, Category>> out;
  for (const Mistake &m : l.entries()) {
    out.emplace_back(m.doc_id, m.span.start, m.span.end, m.category);
  }
  return out;
}

TEST_CASE("annotator set checks") {
  CHECK_THROWS_AS(AnnotatorSet({}), Error);
  CHECK_THROWS_AS(AnnotatorSet({Load("a1"), Load("a1")}), Error);
}

TEST_CASE("merge of three annotators") {
  AnnotatorSet set({Load("a1"), Load("a2"), Load("a3")});
  for (int quorum : {1, 2, 3}) {
    CAPTURE(quorum);
    MergeResult r = Merge(set, quorum);
    REQUIRE(r.gold.size() == 1);
    const Mistake &m = r.gold.entries()[0];
    CHECK(m.span == TokenSpan{14, 16});
    CHECK(m.category == Category::kWord);
    CHECK(m.text == "game - high");
    CHECK(m.mistake_id == "GSM-1");
    CHECK(r.ties.empty());
  }
  CHECK_THROWS_AS(Merge(set, 0), Error);
  CHECK_THROWS_AS(Merge(set, 4), Error);
}

TEST_CASE("unanimous entry") {
  MistakeList same(ListRole::kGold, {MakeMistake("table1", "", 8, 8, Category::kName, "Thursday")});
  AnnotatorSet set({{"x", same}, {"y", same}, {"z", same}});
  MergeResult r = Merge(set, 3);
  REQUIRE(r.gold.size() == 1);
  CHECK(r.gold.entries()[0].span == TokenSpan{8, 8});
  CHECK(r.gold.entries()[0].category == Category::kName);
}

TEST_CASE("quorum drops lone entries") {
  MistakeList a(ListRole::kGold, {MakeMistake("d", "", 1, 1, Category::kName),
                                  MakeMistake("d", "", 5, 6, Category::kNumber)});
  MistakeList b(ListRole::kGold, {MakeMistake("d", "", 1, 1, Category::kName)});
  AnnotatorSet set({{"a", a}, {"b", b}});
  CHECK(Merge(set, 1).gold.size() == 2);
  MergeResult two = Merge(set, 2);
  REQUIRE(two.gold.size() == 1);
  CHECK(two.gold.entries()[0].span == TokenSpan{1, 1});
}

TEST_CASE("category tie goes to the earlier category and is reported") {
  MistakeList a(ListRole::kGold, {MakeMistake("d", "", 3, 4, Category::kWord)});
  MistakeList b(ListRole::kGold, {MakeMistake("d", "", 3, 3, Category::kNumber)});
  AnnotatorSet set({{"a", a}, {"b", b}});
  MergeResult r = Merge(set, 2);
  REQUIRE(r.gold.size() == 1);
  CHECK(r.gold.entries()[0].category == Category::kNumber);
  CHECK(r.gold.entries()[0].span == TokenSpan{3, 3});
  REQUIRE(r.ties.size() == 1);
  CHECK(r.ties[0].doc_id == "d");
  CHECK(r.ties[0].mistake_id == r.gold.entries()[0].mistake_id);
  CHECK(r.ties[0].tied == std::vector<Category>{Category::kNumber, Category::kWord});
}

TEST_CASE("property: merge identities") {
  testing::Generator gen(5);
  for (int iter = 0; iter < 300; ++iter) {
    Document doc = gen.RandomDoc("d");
    MistakeList list(ListRole::kGold, gen.RandomMistakes(doc, 8));
    int copies = gen.Int(1, 4);
    std::vector<AnnotatorList> annotators;
    for (int i = 0; i < copies; ++i) annotators.push_back({"a" + std::to_string(i), list});
    AnnotatorSet set(annotators);
    for (int q = 1; q <= copies; ++q) {
      REQUIRE(Keys(Merge(set, q).gold) == Keys(list));
    }

    // Random independent annotators: surviving entries shrink with quorum.
    std::vector<AnnotatorList> random;
    for (int i = 0; i < 3; ++i) {
      random.push_back({"r" + std::to_string(i),
                        MistakeList(ListRole::kGold, gen.RandomMistakes(doc, 6))});
    }
    AnnotatorSet rset(random);
    size_t prev = Merge(rset, 1).gold.size();
    for (int q = 2; q <= 3; ++q) {
      size_t now = Merge(rset, q).gold.size();
      REQUIRE(now <= prev);
      prev = now;
    }
    // Merge is deterministic.
    REQUIRE(Merge(rset, 2).gold == Merge(rset, 2).gold);
  }
}

TEST_CASE("agreement") {
  AnnotatorSet same({{"x", testing::Table1Gsml()}, {"y", testing::Table1Gsml()}});
  AgreementTable t = Agreement(same);
  REQUIRE(t.pairs.size() == 2);
  CHECK(t.pairs[0].reference == "x");
  CHECK(t.pairs[0].candidate == "y");
  CHECK(*t.pairs[0].overall.f1() == 1.0);
  CHECK(*t.mean_f1 == 1.0);

  MistakeList table2 = testing::Table2Rml().WithRole(ListRole::kGold);
  AgreementTable g = Agreement(AnnotatorSet({{"gold", testing::Table1Gsml()}, {"sys", table2}}));
  REQUIRE(g.pairs.size() == 2);
  CHECK(g.pairs[0].overall.precision == Ratio{3, 4});
  CHECK(g.pairs[0].overall.recall == Ratio{3, 3});
  CHECK(*g.pairs[0].overall.f1() == doctest::Approx(6.0 / 7.0));
  // Reversed roles swap precision and recall.
  CHECK(g.pairs[1].overall.precision == Ratio{3, 3});
  CHECK(g.pairs[1].overall.recall == Ratio{3, 4});

  MistakeList p(ListRole::kGold, {MakeMistake("d", "", 0, 0, Category::kName)});
  MistakeList q(ListRole::kGold, {MakeMistake("d", "", 5, 5, Category::kName)});
  AgreementTable disjoint = Agreement(AnnotatorSet({{"p", p}, {"q", q}}));
  CHECK(*disjoint.mean_f1 == 0.0);

  CHECK_THROWS_AS(Agreement(AnnotatorSet({{"solo", p}})), Error);
}

}  // namespace
}  // namespace accuscore
