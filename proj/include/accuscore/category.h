#ifndef ACCUSCORE_CATEGORY_H_
#define ACCUSCORE_CATEGORY_H_

#include <array>
#include <optional>
#include <string_view>

namespace accuscore {

// Mistake categories. The enumerator order is the fixed tie-break order used
// when sorting lists and when adjudicating merged annotations.
enum class Category {
  kNumber,
  kName,
  kWord,
  kContext,
  kNotCheckable,
  kOther,
};

inline constexpr std::array<Category, 6> kAllCategories = {
    Category::kNumber,  Category::kName,         Category::kWord,
    Category::kContext, Category::kNotCheckable, Category::kOther,
};

// Canonical spelling: NUMBER, NAME, WORD, CONTEXT, NOT_CHECKABLE, OTHER.
std::string_view CategoryName(Category category);

// Case-insensitive. Accepts the canonical spellings, the short table forms
// ("Name", "Word", "Number") and the long prose forms ("Incorrect named
// entity", "Context error", "Not checkable", ...). Spaces, hyphens and
// underscores are interchangeable.
std::optional<Category> ParseCategory(std::string_view text);

}  // namespace accuscore

#endif  // ACCUSCORE_CATEGORY_H_
