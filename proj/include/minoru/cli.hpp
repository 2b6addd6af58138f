#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "minoru/io.hpp"
#include "minoru/polygonal.hpp"

namespace minoru::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kBadInput = 2,
  kInternalError = 3,
};

struct StageRecord {
  std::string name;
  EmbeddingSize size;
  double seconds = 0.0;
  std::string output;  // file written for this stage, if any
};

struct RunManifest {
  std::string input;
  std::vector<StageRecord> stages;
  std::map<std::string, std::string> witness_paths;
  std::map<std::string, bool> checks;

  bool passed() const;
  io::Json to_json() const;
};

// Reduces, pads and embeds `p` into its universal polygon, checking every
// claimed size along the way. Writes stage files into `out_dir` when it is
// not empty.
RunManifest run_pipeline(const PolygonalEmbedding& p, const std::string& input, const std::string& out_dir);

// Entry point of the command-line tool.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace minoru::cli
