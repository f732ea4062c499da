#include "accuscore/validate.h"

#include "doctest.h"
#include "testing.h"

namespace accuscore {
namespace {

using testing::MakeMistake;

Corpus Table1Corpus() {
  Corpus corpus;
  corpus.Add(testing::Table1Doc());
  return corpus;
}

TEST_CASE("table gold list is clean") {
  CHECK(ValidateMistakeList(testing::Table1Gsml(), Table1Corpus()).empty());
  CHECK(ValidateMistakeList(testing::Table2Rml(), Table1Corpus()).empty());
}

TEST_CASE("inverted span") {
  MistakeList list(ListRole::kGold, {MakeMistake("table1", "GSM-1", 5, 4, Category::kName)});
  auto issues = ValidateMistakeList(list, Table1Corpus());
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].severity == Severity::kError);
  CHECK(issues[0].code == kInvertedSpan);
}

TEST_CASE("text mismatch names the expected text") {
  // Expected text comes from the tokenizer, not from the list.
  std::string expected = SpanText(testing::Table1Doc().tokens, {5, 6});
  REQUIRE(expected == "Miami Heat");
  MistakeList list(ListRole::kGold,
                   {MakeMistake("table1", "GSM-1", 5, 6, Category::kName, "Miami Heats")});
  auto issues = ValidateMistakeList(list, Table1Corpus());
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].code == kTextMismatch);
  CHECK(issues[0].message.find("\"Miami Heat\"") != std::string::npos);
}

TEST_CASE("range, unknown doc, duplicates, overlaps") {
  MistakeList list(
      ListRole::kGold,
      {MakeMistake("table1", "a", 18, 20, Category::kName, "x"),
       MakeMistake("table1", "b", 5, 6, Category::kName, "Miami Heat"),
       MakeMistake("table1", "c", 5, 6, Category::kName, "Miami Heat"),
       MakeMistake("table1", "d", 5, 6, Category::kWord, "Miami Heat"),
       MakeMistake("table1", "e", 6, 8, Category::kOther, "Heat on Thursday"),
       MakeMistake("nowhere", "f", 0, 0, Category::kName, "x")});
  auto issues = ValidateMistakeList(list, Table1Corpus());
  auto count = [&](std::string_view code, Severity s) {
    return std::count_if(issues.begin(), issues.end(), [&](const ValidationIssue &i) {
      return i.code == code && i.severity == s;
    });
  };
  CHECK(count(kUnknownDoc, Severity::kError) == 1);
  CHECK(count(kSpanOutOfRange, Severity::kError) == 1);
  CHECK(count(kDuplicateEntry, Severity::kError) == 1);
  // d overlaps b and c; e overlaps b, c and d.
  CHECK(count(kOverlap, Severity::kWarning) == 5);
  CHECK(HasErrors(issues));

  MistakeList dup_id(ListRole::kGold,
                     {MakeMistake("table1", "x", 8, 8, Category::kName, "Thursday"),
                      MakeMistake("table1", "x", 5, 6, Category::kName, "Miami Heat")});
  auto dup = ValidateMistakeList(dup_id, Table1Corpus());
  REQUIRE(dup.size() == 1);
  CHECK(dup[0].code == kDuplicateId);
}

TEST_CASE("overlap alone is only a warning") {
  MistakeList list(ListRole::kGold,
                   {MakeMistake("table1", "a", 4, 6, Category::kName, "the Miami Heat"),
                    MakeMistake("table1", "b", 5, 6, Category::kName, "Miami Heat")});
  auto issues = ValidateMistakeList(list, Table1Corpus());
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].severity == Severity::kWarning);
  CHECK_FALSE(HasErrors(issues));
}

TEST_CASE("property: consistent entries pass and validation is pure") {
  testing::Generator gen(3);
  for (int iter = 0; iter < 300; ++iter) {
    Document doc = gen.RandomDoc("d");
    Corpus corpus;
    corpus.Add(doc);
    MistakeList list(ListRole::kGold, gen.RandomMistakes(doc, 10));
    auto first = ValidateMistakeList(list, corpus);
    REQUIRE_FALSE(HasErrors(first));
    REQUIRE(ValidateMistakeList(list, corpus) == first);
  }
}

}  // namespace
}  // namespace accuscore
