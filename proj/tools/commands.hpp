#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "erg/pad.hpp"
#include "scenario.hpp"

namespace erg::cli {

enum ExitCode : int {
  kOk = 0,
  kScenarioError = 2,
  kNotDecomposable = 3,
  kNoSolution = 4,
  kBadFlags = 5,
};

struct Report {
  int exit_code = kOk;
  std::string out;  // standard output
  std::string err;  // single-line diagnostic, empty on success
};

Report run_decompose(const Scenario& sc, bool strata = false);
Report run_solve(const Scenario& sc);
Report run_images(const Scenario& sc, const std::string& subject);
Report run_control(const Scenario& sc, const std::string& controller, const std::string& target,
                   const std::string& state);
Report run_pad_quantize(const pad::PadTriple& t);
Report run_pad_encode(const std::string& name);
Report run_pad_decode(const std::string& code);

/// Full command line (args[0] is the program name). Writes the report to
/// `out`/`err` and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace erg::cli
