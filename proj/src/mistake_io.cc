#include "accuscore/mistake_io.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>

#include "accuscore/csv.h"
#include "accuscore/errors.h"
#include "accuscore/file_util.h"

namespace accuscore {

namespace {

enum Column { kDocId, kMistakeId, kStart, kEnd, kText, kCategory, kNumColumns };

constexpr std::array<std::string_view, kNumColumns> kColumnNames = {
    "DOC_ID", "MISTAKE_ID", "START_TOKEN", "END_TOKEN", "TEXT", "CATEGORY"};

std::string Upper(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  // Tolerate stray spaces around header names.
  out.erase(0, out.find_first_not_of(' '));
  out.erase(out.find_last_not_of(' ') + 1);
  return out;
}

int ParseIndex(const std::string &field, std::string_view column,
               const std::string &source, int line) {
  int value = 0;
  const char *first = field.data();
  const char *last = field.data() + field.size();
  if (!field.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (field.empty() || ec != std::errc() || ptr != last) {
    throw ParseError(source, line,
                     std::string(column) + " must be an integer, got \"" +
                         field + "\"");
  }
  return value;
}

}  // namespace

MistakeList ParseMistakeList(std::string_view text, ListRole role,
                             const std::string &source) {
  std::vector<CsvRow> rows = ParseCsv(text, source);
  if (rows.empty()) throw ParseError(source, 1, "missing header row");

  std::array<int, kNumColumns> index;
  index.fill(-1);
  const CsvRow &header = rows.front();
  for (size_t i = 0; i < header.fields.size(); ++i) {
    std::string name = Upper(header.fields[i]);
    for (int c = 0; c < kNumColumns; ++c) {
      if (name == kColumnNames[c]) index[c] = static_cast<int>(i);
    }
  }
  for (int c = 0; c < kNumColumns; ++c) {
    // MISTAKE_ID and TEXT may be omitted; ids are generated, text is
    // checked by validation.
    if (index[c] < 0 && c != kMistakeId && c != kText) {
      throw ParseError(source, header.line,
                       "missing column " + std::string(kColumnNames[c]) +
                           " (expected header " +
                           std::string(kMistakeListHeader) + ")");
    }
  }

  std::vector<Mistake> entries;
  entries.reserve(rows.size() - 1);
  for (size_t r = 1; r < rows.size(); ++r) {
    const CsvRow &row = rows[r];
    auto field = [&](int column) -> std::string {
      int i = index[column];
      if (i < 0) return {};
      if (i >= static_cast<int>(row.fields.size())) {
        throw ParseError(source, row.line,
                         "row has " + std::to_string(row.fields.size()) +
                             " fields, missing " +
                             std::string(kColumnNames[column]));
      }
      return row.fields[i];
    };
    Mistake m;
    m.doc_id = field(kDocId);
    if (m.doc_id.empty()) throw ParseError(source, row.line, "empty DOC_ID");
    m.mistake_id = field(kMistakeId);
    m.span.start = ParseIndex(field(kStart), "START_TOKEN", source, row.line);
    m.span.end = ParseIndex(field(kEnd), "END_TOKEN", source, row.line);
    m.text = field(kText);
    std::string category = field(kCategory);
    std::optional<Category> parsed = ParseCategory(category);
    if (!parsed) {
      throw ParseError(source, row.line,
                       "unknown CATEGORY \"" + category +
                           "\" (expected NUMBER, NAME, WORD, CONTEXT, "
                           "NOT_CHECKABLE or OTHER)");
    }
    m.category = *parsed;
    entries.push_back(std::move(m));
  }
  return MistakeList(role, std::move(entries));
}

MistakeList LoadMistakeList(const std::filesystem::path &path, ListRole role) {
  return ParseMistakeList(ReadFile(path), role, path.string());
}

std::string SerializeMistakeList(const MistakeList &list) {
  std::string out(kMistakeListHeader);
  out += '\n';
  for (const Mistake &m : list.entries()) {
    out += CsvLine({m.doc_id, m.mistake_id, std::to_string(m.span.start),
                    std::to_string(m.span.end), m.text,
                    std::string(CategoryName(m.category))});
  }
  return out;
}

}  // namespace accuscore
