#ifndef ACCUSCORE_CORPUS_H_
#define ACCUSCORE_CORPUS_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace accuscore {

// A tokenized generated summary.
struct Document {
  std::string doc_id;
  std::string raw_text;
  std::vector<std::string> tokens;
  std::optional<std::string> game_id;
  std::optional<std::string> system_id;

  int token_count() const { return static_cast<int>(tokens.size()); }
};

// Builds a document whose tokens are the whitespace tokenization of raw.
Document MakeDocument(std::string doc_id, std::string raw,
                      std::optional<std::string> game_id = std::nullopt,
                      std::optional<std::string> system_id = std::nullopt);

// Documents keyed by doc_id, plus optional per-game reference texts.
class Corpus {
 public:
  // Throws Error if a document with the same id exists.
  void Add(Document doc);
  void SetReferenceText(std::string game_id, std::string text);

  const Document *Find(std::string_view doc_id) const;
  const std::map<std::string, Document, std::less<>> &documents() const {
    return docs_;
  }
  std::optional<std::string> ReferenceText(std::string_view game_id) const;
  size_t size() const { return docs_.size(); }

 private:
  std::map<std::string, Document, std::less<>> docs_;
  std::map<std::string, std::string, std::less<>> references_;
};

// Loads a corpus directory:
//   <doc_id>.txt          space-separated tokens, one file per document
//   corpus.csv            optional manifest DOC_ID,SYSTEM_ID,GAME_ID
//   references/<game>.txt optional human-written reference texts
// Manifest rows naming a missing document are an error.
Corpus LoadCorpus(const std::filesystem::path &dir);

}  // namespace accuscore

#endif  // ACCUSCORE_CORPUS_H_
