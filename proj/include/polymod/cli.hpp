#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polymod::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,  // domain or usage error
  kNumerical = 3,
  kIo = 4,
  kCheckFailed = 5,
};

// Maps the exception being handled to an exit code and prints its one-line
// message. Must be called from inside a catch block.
int report_current_exception(std::ostream& err);

// The check verdict: the analytic and oracle modules agree when their gap is
// within three oracle error bars.
bool check_passes(double gap, double error_bar);

// Runs the command line (args[0] is the program name). Records go to out,
// one-line error messages to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polymod::cli
