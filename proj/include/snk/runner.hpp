#ifndef SNK_RUNNER_HPP
#define SNK_RUNNER_HPP

#include "snk/certificate.hpp"
#include "snk/problem.hpp"

namespace snk {

struct RunOptions {
  long budget = 0;                // 0: global default
  std::string order = "grevlex";  // basis order for the gb task
  std::string timestamp;          // empty: wall clock
};

struct RunResult {
  int exit_code = 0;
  std::string human;
  Certificate cert;
};

/// Executes one problem and produces its certificate. Exit codes: 0 for a
/// definitive verdict, 2 when the computation budget ran out, 1 on input
/// errors or failed preconditions.
RunResult run_problem(const ProblemFile& p, const RunOptions& opt = {});

}  // namespace snk

#endif
