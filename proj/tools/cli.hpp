#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ltseq::cli {

// Runs one command; argv excludes the program name. Returns the exit code:
// 0 success (eq/bisim/crosscheck: holds), 1 check failed, 2 usage or input
// error. All output is deterministic for fixed inputs and seeds.
int dispatch(const std::vector<std::string>& argv, std::ostream& out,
             std::ostream& err);

}  // namespace ltseq::cli
