#ifndef ACCUSCORE_MISTAKE_IO_H_
#define ACCUSCORE_MISTAKE_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "accuscore/mistake.h"

namespace accuscore {

inline constexpr std::string_view kMistakeListHeader =
    "DOC_ID,MISTAKE_ID,START_TOKEN,END_TOKEN,TEXT,CATEGORY";

// Parses the mistake-list CSV. Header names are matched case-insensitively
// and columns may come in any order. Throws ParseError naming the source
// and line for a missing column, a non-integer token index, an unknown
// category, or an empty DOC_ID.
MistakeList ParseMistakeList(std::string_view text, ListRole role,
                             const std::string &source = "<input>");

MistakeList LoadMistakeList(const std::filesystem::path &path, ListRole role);

// Canonical CSV: header, then entries in list order, canonical category
// spellings. Parsing the output yields an equal list.
std::string SerializeMistakeList(const MistakeList &list);

}  // namespace accuscore

#endif  // ACCUSCORE_MISTAKE_IO_H_
