#include "accuscore/category.h"

#include <cctype>
#include <string>

namespace accuscore {

std::string_view CategoryName(Category category) {
  switch (category) {
    case Category::kNumber: return "NUMBER";
    case Category::kName: return "NAME";
    case Category::kWord: return "WORD";
    case Category::kContext: return "CONTEXT";
    case Category::kNotCheckable: return "NOT_CHECKABLE";
    case Category::kOther: return "OTHER";
  }
  return "OTHER";
}

std::optional<Category> ParseCategory(std::string_view text) {
  // Lower-case, map '-' and '_' to spaces, collapse runs of spaces.
  std::string key;
  for (char c : text) {
    char ch = (c == '-' || c == '_') ? ' '
                                     : static_cast<char>(std::tolower(
                                           static_cast<unsigned char>(c)));
    if (std::isspace(static_cast<unsigned char>(ch))) {
      if (!key.empty() && key.back() != ' ') key += ' ';
    } else {
      key += ch;
    }
  }
  while (!key.empty() && key.back() == ' ') key.pop_back();

  struct Alias {
    std::string_view name;
    Category category;
  };
  static constexpr Alias kAliases[] = {
      {"number", Category::kNumber},
      {"incorrect number", Category::kNumber},
      {"name", Category::kName},
      {"named entity", Category::kName},
      {"incorrect named entity", Category::kName},
      {"incorrect name", Category::kName},
      {"word", Category::kWord},
      {"incorrect word", Category::kWord},
      {"context", Category::kContext},
      {"context error", Category::kContext},
      {"not checkable", Category::kNotCheckable},
      {"notcheckable", Category::kNotCheckable},
      {"other", Category::kOther},
  };
  for (const Alias &alias : kAliases) {
    if (key == alias.name) return alias.category;
  }
  return std::nullopt;
}

}  // namespace accuscore
