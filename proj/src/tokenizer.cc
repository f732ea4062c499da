#include "accuscore/tokenizer.h"

#include <cctype>
#include <string_view>

namespace accuscore {

namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

// Letters, digits and any byte of a multi-byte UTF-8 sequence.
bool IsWordChar(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return u >= 0x80 || std::isalnum(u);
}

bool IsDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

// Abbreviations whose trailing period stays attached.
bool KeepsPeriod(std::string_view word) {
  static constexpr std::string_view kAbbreviations[] = {
      "Jr.", "Sr.", "St.", "Mr.", "Mrs.", "Dr.", "vs.", "Mt.", "Ft."};
  for (std::string_view a : kAbbreviations) {
    if (word == a) return true;
  }
  // Initials such as "J." or "C.J."
  return word.size() >= 2 && word.size() % 2 == 0 &&
         [&] {
           for (size_t i = 0; i < word.size(); i += 2) {
             if (!std::isupper(static_cast<unsigned char>(word[i])) ||
                 word[i + 1] != '.')
               return false;
           }
           return true;
         }();
}

}  // namespace

TokenizedText Tokenize(std::string_view raw, const TokenizeOptions &options) {
  TokenizedText result;
  result.source = std::string(raw);
  std::string normalized;
  std::string_view text = raw;
  if (options.normalize) {
    normalized = NormalizeRawText(raw);
    text = normalized;
  }
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsSpace(text[i])) ++i;
    size_t start = i;
    while (i < text.size() && !IsSpace(text[i])) ++i;
    if (i > start) result.tokens.emplace_back(text.substr(start, i - start));
  }
  return result;
}

namespace {

std::string NormalizeOnce(std::string_view raw) {
  // Work word by word so abbreviation checks see the whole word.
  std::string out;
  auto emit = [&](std::string_view piece) {
    if (piece.empty()) return;
    if (!out.empty()) out += ' ';
    out.append(piece);
  };

  for (const std::string &word : Tokenize(raw).tokens) {
    std::string_view w = word;
    // Trailing sentence punctuation, peeled from the right.
    std::string trailing;
    while (!w.empty()) {
      char c = w.back();
      bool peel = false;
      if (c == ',' || c == ';' || c == ':' || c == '!' || c == '?' ||
          c == ')' || c == ']' || c == '"') {
        peel = true;
      } else if (c == '.' && !KeepsPeriod(w)) {
        peel = true;
      }
      if (!peel || w.size() == 1) break;
      trailing.insert(trailing.begin(), c);
      w.remove_suffix(1);
    }

    // Leading brackets and quotes.
    while (w.size() > 1 && (w.front() == '(' || w.front() == '[' ||
                            w.front() == '"')) {
      emit(w.substr(0, 1));
      w.remove_prefix(1);
    }

    // Inner hyphens between word characters, and commas not inside numbers.
    size_t piece_start = 0;
    for (size_t k = 1; k + 1 < w.size(); ++k) {
      bool split_hyphen =
          w[k] == '-' && IsWordChar(w[k - 1]) && IsWordChar(w[k + 1]);
      bool split_comma = w[k] == ',' && !(IsDigit(w[k - 1]) && IsDigit(w[k + 1]));
      if (split_hyphen || split_comma) {
        emit(w.substr(piece_start, k - piece_start));
        emit(w.substr(k, 1));
        piece_start = k + 1;
      }
    }
    emit(w.substr(piece_start));
    for (char c : trailing) emit(std::string_view(&c, 1));
  }
  return out;
}

}  // namespace

std::string NormalizeRawText(std::string_view raw) {
  // A split can expose punctuation that the next pass would peel
  // ("b9--),x" -> "b9--)" ","), so repeat until nothing changes. Each pass
  // only inserts spaces, so this terminates.
  std::string current = NormalizeOnce(raw);
  for (;;) {
    std::string next = NormalizeOnce(current);
    if (next == current) return current;
    current = std::move(next);
  }
}

std::string JoinTokens(std::span<const std::string> tokens) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += ' ';
    out += tokens[i];
  }
  return out;
}

std::string SpanText(std::span<const std::string> tokens, TokenSpan span) {
  return JoinTokens(tokens.subspan(span.start, span.length()));
}

}  // namespace accuscore
