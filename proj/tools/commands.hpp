#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "rnametric/codec.hpp"
#include "rnametric/error.hpp"
#include "rnametric/metrics.hpp"

namespace rnametric::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kParse = 3,
  kInvalid = 4,
  kLengthMismatch = 5,
  kIo = 6,
  kInfeasible = 7,
};

int exit_code_for(ErrorKind kind);

/// Inline dot-bracket when the argument is made only of '.' and bracket
/// characters, otherwise a file path whose first record is used.
SecondaryStructure load_structure(const std::string& arg);

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err);
int cmd_dist(const std::string& a, const std::string& b, Metric metric, bool verbose,
             std::ostream& out, std::ostream& err);
int cmd_orbits(const std::string& a, const std::string& b, std::ostream& out, std::ostream& err);
int cmd_matrix(const std::string& path, Metric metric, std::ostream& out, std::ostream& err);
int cmd_gen(Index n, std::size_t k, std::size_t count, std::uint64_t seed, Format format,
            std::ostream& out, std::ostream& err);

/// Full command line, including argv[0].
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace rnametric::cli
