#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "rgflab/polynomial.hpp"

namespace rgflab::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kCeiling = 3 };

// args excludes the program name. Data goes to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// {"vars":["q","r","s","t"],"terms":[{"e":[..],"c":..},...]}, terms sorted by
// exponent vector.
std::string poly_json(const MultiPoly& p);

}  // namespace rgflab::cli
