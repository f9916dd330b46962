#pragma once

#include <string>
#include <vector>

namespace polyhecke::cli {

// Entry point shared by the binary and the tests.  Returns the process exit
// code: 0 iff every requested computation and verification succeeded.
int run(const std::vector<std::string>& args);

}  // namespace polyhecke::cli
