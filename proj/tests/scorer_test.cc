#include "accuscore/scorer.h"

#include "accuscore/errors.h"
#include "doctest.h"
#include "testing.h"

namespace accuscore {
namespace {

using testing::MakeMistake;

ScoreReport TableReport() {
  MistakeList gsml = testing::Table1Gsml();
  MistakeList rml = testing::Table2Rml();
  return Score(Align(rml, gsml, "table1"), gsml, rml, "table1");
}

TEST_CASE("worked example scores") {
  // Hand count from the table alignment: 3 of 4 reports matched (RM-4 is
  // not found), all 3 gold entries consumed.
  ScoreReport r = TableReport();
  CHECK(r.overall.precision == Ratio{3, 4});
  CHECK(r.overall.recall == Ratio{3, 3});
  CHECK(r.overall.precision.value() == doctest::Approx(0.75));
  CHECK(r.overall.recall.value() == 1.0);
  // NAME: GSM-1 (same category) and GSM-2 (exact) found; RM-4 unmatched.
  CHECK(r.per_category.at(Category::kName).recall == Ratio{2, 2});
  CHECK(r.per_category.at(Category::kName).precision == Ratio{2, 3});
  // GSM-3 WORD only matched across categories.
  CHECK(r.per_category.at(Category::kWord).recall == Ratio{0, 1});
  CHECK(r.per_category.at(Category::kNumber).precision == Ratio{0, 1});
  CHECK_FALSE(r.per_category.at(Category::kNumber).recall.defined());
  CHECK_FALSE(r.per_category.at(Category::kContext).precision.value().has_value());
  CHECK(r.overall.f1() == doctest::Approx(2 * 0.75 / 1.75));
}

TEST_CASE("empty reported list") {
  MistakeList gsml = testing::Table1Gsml();
  MistakeList rml(ListRole::kReported);
  ScoreReport r = Score({}, gsml, rml, "table1");
  CHECK_FALSE(r.overall.precision.defined());
  CHECK(r.overall.recall == Ratio{0, 3});
  CHECK(r.overall.recall.value() == 0.0);
  CHECK_FALSE(r.overall.f1().has_value());
}

TEST_CASE("inconsistent alignments are rejected") {
  MistakeList gsml = testing::Table1Gsml();
  MistakeList rml = testing::Table2Rml();
  std::vector<Alignment> a = Align(rml, gsml, "table1");

  auto unknown_rm = a;
  unknown_rm[0].rm_id = "RM-99";
  CHECK_THROWS_AS(Score(unknown_rm, gsml, rml, "table1"), Error);

  auto unknown_gsm = a;
  unknown_gsm[0].matched_gsm_id = "GSM-99";
  CHECK_THROWS_AS(Score(unknown_gsm, gsml, rml, "table1"), Error);

  auto missing = a;
  missing.pop_back();
  CHECK_THROWS_AS(Score(missing, gsml, rml, "table1"), Error);

  auto reused = a;
  reused[1].matched_gsm_id = reused[0].matched_gsm_id;
  CHECK_THROWS_AS(Score(reused, gsml, rml, "table1"), Error);

  auto wrong_criterion = a;
  for (Alignment &x : wrong_criterion) {
    if (x.rm_id == "RM-3") x.criterion = MatchCriterion::kSameCategory;
  }
  CHECK_THROWS_AS(Score(wrong_criterion, gsml, rml, "table1"), Error);
}

TEST_CASE("aggregate examples") {
  ScoreReport a{"a", {}, {}}, b{"b", {}, {}};
  a.overall.recall = {1, 2};
  b.overall.recall = {3, 4};
  std::vector<ScoreReport> two = {a, b};
  ScoreReport total = Aggregate(two);
  CHECK(total.is_corpus());
  CHECK(total.scope() == "CORPUS");
  CHECK(total.overall.recall == Ratio{4, 6});

  ScoreReport single = TableReport();
  ScoreReport rolled = Aggregate(std::vector<ScoreReport>{single});
  CHECK(rolled.overall == single.overall);
  CHECK(rolled.per_category == single.per_category);

  // 21 documents with the table counts.
  std::vector<ScoreReport> many(21, single);
  ScoreReport corpus = Aggregate(many);
  CHECK(corpus.overall.precision == Ratio{63, 84});
  CHECK(corpus.overall.precision.value() == 0.75);

  std::vector<ScoreReport> nested = {single, corpus};
  CHECK_THROWS_AS(Aggregate(nested), Error);
}

TEST_CASE("property: identity scoring and count invariants") {
  testing::Generator gen(29);
  for (int iter = 0; iter < 500; ++iter) {
    Document doc = gen.RandomDoc("d");
    std::vector<Mistake> entries = gen.RandomMistakes(doc, 10, "GSM");
    MistakeList gold(ListRole::kGold, entries);
    MistakeList reported = gold.WithRole(ListRole::kReported);
    ScoreReport r = Score(Align(reported, gold, "d"), gold, reported, "d");
    REQUIRE(r.overall.precision.num == r.overall.precision.den);
    REQUIRE(r.overall.recall.num == r.overall.recall.den);
    for (const auto &[c, pr] : r.per_category) {
      REQUIRE(pr.precision.num == pr.precision.den);
      REQUIRE(pr.recall.num == pr.recall.den);
    }

    // Random report against the same gold.
    MistakeList other(ListRole::kReported, gen.RandomMistakes(doc, 10, "RM"));
    ScoreReport s = Score(Align(other, gold, "d"), gold, other, "d");
    REQUIRE(s.overall.recall.num == s.overall.precision.num);
    int64_t per_category = 0;
    for (const auto &[c, pr] : s.per_category) {
      REQUIRE(pr.precision.num == pr.recall.num);
      per_category += pr.precision.num;
      if (pr.precision.defined()) {
        REQUIRE(*pr.precision.value() >= 0.0);
        REQUIRE(*pr.precision.value() <= 1.0);
      }
    }
    REQUIRE(per_category <= s.overall.precision.num);
    REQUIRE(s.overall.recall.den == static_cast<int64_t>(gold.size()));
    REQUIRE(s.overall.precision.den == static_cast<int64_t>(other.size()));
  }
}

TEST_CASE("ScoreAll covers gold-only documents") {
  MistakeList gsml(ListRole::kGold, {MakeMistake("only-gold", "GSM-1", 0, 0, Category::kName),
                                     MakeMistake("both", "GSM-1", 0, 0, Category::kName)});
  MistakeList rml(ListRole::kReported, {MakeMistake("both", "RM-1", 0, 0, Category::kName)});
  std::vector<ScoreReport> reports = ScoreAll(AlignAll(rml, gsml), gsml, rml);
  REQUIRE(reports.size() == 2);
  CHECK(reports[1].doc_id == "only-gold");
  CHECK(reports[1].overall.recall == Ratio{0, 1});
  CHECK(Aggregate(reports).overall.recall == Ratio{1, 2});
}

}  // namespace
}  // namespace accuscore
