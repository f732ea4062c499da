#ifndef ACCUSCORE_TOKENIZER_H_
#define ACCUSCORE_TOKENIZER_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "accuscore/mistake.h"

namespace accuscore {

struct TokenizedText {
  std::vector<std::string> tokens;
  std::string source;
};

struct TokenizeOptions {
  // Runs NormalizeRawText() before splitting. Off by default: the summary
  // corpora ship pre-tokenized and span indices are defined over the plain
  // whitespace split.
  bool normalize = false;
};

// Splits on ASCII whitespace. Tokens are never empty and never contain
// whitespace, so tokenizing JoinTokens(Tokenize(x).tokens) is the identity.
TokenizedText Tokenize(std::string_view raw, const TokenizeOptions &options = {});

// Best-effort pre-pass for raw, untokenized text: puts spaces around
// sentence punctuation, brackets, and hyphens joining two word characters
// ("5-2" -> "5 - 2", "game-high" -> "game - high"). Numbers such as "1,000"
// and "3.5" stay whole. Only inserts spaces, never drops characters other
// than collapsing whitespace runs.
std::string NormalizeRawText(std::string_view raw);

std::string JoinTokens(std::span<const std::string> tokens);

// Space-joined tokens at span. The span must be in range.
std::string SpanText(std::span<const std::string> tokens, TokenSpan span);

}  // namespace accuscore

#endif  // ACCUSCORE_TOKENIZER_H_
