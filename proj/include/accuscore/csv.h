#ifndef ACCUSCORE_CSV_H_
#define ACCUSCORE_CSV_H_

#include <string>
#include <string_view>
#include <vector>

namespace accuscore {

struct CsvRow {
  int line = 0;  // 1-based line where the record starts
  std::vector<std::string> fields;
};

// RFC 4180 reader: comma separated, double-quoted fields may contain commas,
// quotes ("") and newlines. Accepts LF or CRLF, skips blank lines and a
// leading UTF-8 BOM. Throws ParseError(source, line, ...) on an unterminated
// quote or stray characters after a closing quote.
std::vector<CsvRow> ParseCsv(std::string_view text, const std::string &source);

// Quotes a field only when it contains a comma, quote, CR or LF.
std::string CsvEscape(std::string_view field);

// One LF-terminated record.
std::string CsvLine(const std::vector<std::string> &fields);

}  // namespace accuscore

#endif  // ACCUSCORE_CSV_H_
