#ifndef ACCUSCORE_CLI_H_
#define ACCUSCORE_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace accuscore {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::string subcommand;
  std::string corpus_dir;
  std::string games_dir;
  std::string annotations_dir;
  std::string static_dir;
  std::string input;  // tokenize: text file; validate: list file
  std::string gsml;
  std::string rml;
  std::vector<std::string> annotators;
  std::string output;
  std::string role = "gold";  // validate: gold or reported
  std::string host = "127.0.0.1";
  int quorum = 1;
  int port = 8080;
  int jobs = 1;
  bool per_doc = false;
  bool strict = false;
  bool normalize = false;
  bool deterministic = false;
};

// Runs one subcommand. Machine-readable CSV goes to config.output (written
// atomically) or to out when no output path is given; human-readable
// summaries and issues go to err (or out for the table). Returns kExitOk,
// kExitValidation, or kExitUsage.
int Run(const RunConfig &config, std::ostream &out, std::ostream &err);

// Parses argv with CLI11 and calls Run(). ACCUSCORE_CORPUS supplies the
// default corpus directory.
int Main(int argc, char **argv);

}  // namespace accuscore

#endif  // ACCUSCORE_CLI_H_
