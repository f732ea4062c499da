#ifndef ACCUSCORE_TESTS_TESTING_H_
#define ACCUSCORE_TESTS_TESTING_H_

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "accuscore/corpus.h"
#include "accuscore/file_util.h"
#include "accuscore/game_data.h"
#include "accuscore/mistake.h"
#include "accuscore/mistake_io.h"
#include "accuscore/tokenizer.h"

namespace accuscore::testing {

inline std::filesystem::path FixtureDir() { return ACCUSCORE_FIXTURES; }
inline std::filesystem::path Fixture(const std::string &name) {
  return FixtureDir() / name;
}

inline constexpr char kTable1Sentence[] =
    "The Denver Nuggets defeated the Miami Heat on Thursday . Jamal Murray "
    "had a game - high 30 points .";

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("accuscore-test-" + std::to_string(::getpid()) + "-" +
             std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir &) = delete;
  TempDir &operator=(const TempDir &) = delete;

  const std::filesystem::path &path() const { return path_; }
  std::filesystem::path operator/(const std::string &name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

inline Document Table1Doc() { return MakeDocument("table1", kTable1Sentence, "201911080DEN"); }

inline Corpus FixtureCorpus() { return LoadCorpus(Fixture("corpus")); }

inline MistakeList Table1Gsml() {
  return LoadMistakeList(Fixture("table1_gsml.csv"), ListRole::kGold);
}
inline MistakeList Table2Rml() {
  return LoadMistakeList(Fixture("table2_rml.csv"), ListRole::kReported);
}
inline MistakeList Figure1Gsml() {
  return LoadMistakeList(Fixture("figure1_gsml.csv"), ListRole::kGold);
}
inline GameData Figure1Game() { return LoadGame(Fixture("games/201411050PHO.json")); }

inline Mistake MakeMistake(std::string doc, std::string id, int start, int end,
                           Category category, std::string text = "") {
  return Mistake{std::move(id), std::move(doc), {start, end}, std::move(text), category};
}

// Random documents and valid mistake lists over them.
class Generator {
 public:
  explicit Generator(uint32_t seed) : rng_(seed) {}

  int Int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Document RandomDoc(const std::string &id) {
    static const char *kWords[] = {"The", "Suns", "scored", "18", "points", ",",
                                   ".", "game", "-", "high", "Monday", "a",
                                   "rebounds", "Gasol", "led", "the", "(", ")"};
    int n = Int(1, 60);
    std::string raw;
    for (int i = 0; i < n; ++i) {
      if (i) raw += ' ';
      raw += kWords[Int(0, std::size(kWords) - 1)];
    }
    return MakeDocument(id, raw);
  }

  // Entries with distinct (span, category) and consistent text.
  std::vector<Mistake> RandomMistakes(const Document &doc, int max_entries,
                                      const std::string &prefix = "M") {
    std::vector<Mistake> out;
    std::set<std::tuple<int, int, int>> seen;
    int want = Int(0, max_entries);
    for (int k = 0; k < want * 3 && static_cast<int>(out.size()) < want; ++k) {
      int start = Int(0, doc.token_count() - 1);
      int end = std::min(doc.token_count() - 1, start + Int(0, 4));
      auto category = static_cast<Category>(Int(0, 5));
      if (!seen.insert({start, end, static_cast<int>(category)}).second) continue;
      out.push_back(MakeMistake(doc.doc_id, prefix + "-" + std::to_string(out.size() + 1),
                                start, end, category,
                                SpanText(doc.tokens, {start, end})));
    }
    return out;
  }

  std::mt19937 &rng() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace accuscore::testing

#endif  // ACCUSCORE_TESTS_TESTING_H_
