#include "accuscore/corpus.h"

#include <algorithm>

#include "accuscore/csv.h"
#include "accuscore/errors.h"
#include "accuscore/file_util.h"
#include "accuscore/tokenizer.h"

namespace accuscore {

namespace fs = std::filesystem;

Document MakeDocument(std::string doc_id, std::string raw,
                      std::optional<std::string> game_id,
                      std::optional<std::string> system_id) {
  Document doc;
  doc.doc_id = std::move(doc_id);
  doc.tokens = Tokenize(raw).tokens;
  doc.raw_text = std::move(raw);
  doc.game_id = std::move(game_id);
  doc.system_id = std::move(system_id);
  return doc;
}

void Corpus::Add(Document doc) {
  std::string id = doc.doc_id;
  if (!docs_.emplace(id, std::move(doc)).second) {
    throw Error("duplicate doc_id \"" + id + "\" in corpus");
  }
}

void Corpus::SetReferenceText(std::string game_id, std::string text) {
  references_[std::move(game_id)] = std::move(text);
}

const Document *Corpus::Find(std::string_view doc_id) const {
  auto it = docs_.find(doc_id);
  return it == docs_.end() ? nullptr : &it->second;
}

std::optional<std::string> Corpus::ReferenceText(std::string_view game_id) const {
  auto it = references_.find(game_id);
  if (it == references_.end()) return std::nullopt;
  return it->second;
}

Corpus LoadCorpus(const fs::path &dir) {
  if (!fs::is_directory(dir)) {
    throw Error(dir.string() + ": corpus directory not found");
  }
  std::vector<fs::path> files;
  for (const auto &entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  Corpus corpus;
  for (const fs::path &file : files) {
    corpus.Add(MakeDocument(file.stem().string(), ReadFile(file)));
  }

  fs::path manifest = dir / "corpus.csv";
  if (fs::exists(manifest)) {
    std::vector<CsvRow> rows = ParseCsv(ReadFile(manifest), manifest.string());
    int doc_col = -1, system_col = -1, game_col = -1;
    if (!rows.empty()) {
      for (size_t i = 0; i < rows[0].fields.size(); ++i) {
        const std::string &name = rows[0].fields[i];
        if (name == "DOC_ID") doc_col = static_cast<int>(i);
        if (name == "SYSTEM_ID") system_col = static_cast<int>(i);
        if (name == "GAME_ID") game_col = static_cast<int>(i);
      }
    }
    if (doc_col < 0) {
      throw ParseError(manifest.string(), 1,
                       "expected header DOC_ID,SYSTEM_ID,GAME_ID");
    }
    // Documents are immutable once added, so rebuild with the links.
    Corpus linked;
    std::map<std::string, std::pair<std::string, std::string>> links;
    for (size_t r = 1; r < rows.size(); ++r) {
      const auto &f = rows[r].fields;
      auto get = [&](int col) {
        return col >= 0 && col < static_cast<int>(f.size()) ? f[col]
                                                            : std::string();
      };
      std::string doc_id = get(doc_col);
      if (!corpus.Find(doc_id)) {
        throw ParseError(manifest.string(), rows[r].line,
                         "document \"" + doc_id + "\" has no " + doc_id +
                             ".txt");
      }
      links[doc_id] = {get(system_col), get(game_col)};
    }
    for (const auto &[id, doc] : corpus.documents()) {
      Document copy = doc;
      if (auto it = links.find(id); it != links.end()) {
        if (!it->second.first.empty()) copy.system_id = it->second.first;
        if (!it->second.second.empty()) copy.game_id = it->second.second;
      }
      linked.Add(std::move(copy));
    }
    corpus = std::move(linked);
  }

  fs::path refs = dir / "references";
  if (fs::is_directory(refs)) {
    for (const auto &entry : fs::directory_iterator(refs)) {
      if (entry.is_regular_file() && entry.path().extension() == ".txt") {
        corpus.SetReferenceText(entry.path().stem().string(),
                                ReadFile(entry.path()));
      }
    }
  }
  return corpus;
}

}  // namespace accuscore
