#pragma once

#include "hocolim/chq.hpp"
#include "hocolim/fincat.hpp"
#include "hocolim/reedy.hpp"

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitPrecondition = 4;
inline constexpr int kExitOracleMismatch = 5;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Named objects loaded from JSON input files. Every cross-reference resolves
// and every object passes its module validator, or loading throws.
struct Workspace {
  std::map<std::string, fincat::FinCategory> categories;
  std::map<std::string, fincat::Functor> functors;
  std::map<std::string, chq::ChainComplex> complexes;
  std::map<std::string, chq::ChainMap> maps;
  std::map<std::string, reedy::Diagram> diagrams;
};

Workspace load_files(const std::vector<std::string>& paths);
Workspace load_text(const std::string& json_text);

// Command-line entry point; returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cli
