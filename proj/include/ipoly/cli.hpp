#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end (gen | integrate | zeros | curve | asympt |
 *        region | check). Exposed as a function so tests can drive it
 *        in-process.
 *
 * Exit codes: 0 success, 2 usage error, 3 numeric non-convergence,
 * 4 check-suite failure.
 */

#include <iosfwd>
#include <string>
#include <vector>

namespace ipoly::cli {

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ipoly::cli
