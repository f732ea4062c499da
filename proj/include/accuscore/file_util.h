#ifndef ACCUSCORE_FILE_UTIL_H_
#define ACCUSCORE_FILE_UTIL_H_

#include <filesystem>
#include <string>
#include <string_view>

namespace accuscore {

// Throws Error naming the path when the file cannot be read.
std::string ReadFile(const std::filesystem::path &path);

// Writes to a sibling temp file, then renames over path.
void WriteFileAtomically(const std::filesystem::path &path,
                         std::string_view contents);

}  // namespace accuscore

#endif  // ACCUSCORE_FILE_UTIL_H_
