#ifndef ACCUSCORE_ERRORS_H_
#define ACCUSCORE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace accuscore {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file. The message names the source and line when known.
class ParseError : public Error {
 public:
  ParseError(const std::string &source, int line, const std::string &what)
      : Error(Format(source, line, what)), source_(source), line_(line) {}

  const std::string &source() const { return source_; }
  int line() const { return line_; }

 private:
  static std::string Format(const std::string &source, int line,
                            const std::string &what) {
    std::string out = source;
    if (line > 0) out += ":" + std::to_string(line);
    if (!out.empty()) out += ": ";
    return out + what;
  }

  std::string source_;
  int line_;
};

}  // namespace accuscore

#endif  // ACCUSCORE_ERRORS_H_
