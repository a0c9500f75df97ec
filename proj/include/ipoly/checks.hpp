#pragma once

/**
 * @file checks.hpp
 * @brief The verification suites behind `ipoly check` and the acceptance
 *        binary: exact coefficient identities, closed forms, convergence
 *        thresholds, zero-location and zero-bound checks.
 *
 * Every tolerance is pinned here, in code. Suites:
 *   exact  -> criteria 1-4 (zero-tolerance identities)
 *   asympt -> criteria 5, 6, 8 (convergence thresholds)
 *   zeros  -> criterion 7 (zero location and equidistribution)
 *   bounds -> criterion 9 (cardioid and disc bounds, seeded randomness)
 *   all    -> everything plus the closing scale note
 */

#include <cstdint>
#include <string>
#include <vector>

namespace ipoly::checks {

struct Options {
    std::uint64_t seed = 0;
    /// 0 = full scale. Otherwise sweep sizes are clamped to <= n_max;
    /// thresholds stay pinned at full-scale values, so scaled-down runs may
    /// fail and the report says so.
    unsigned n_max = 0;
};

struct Result {
    int id = 0;
    std::string name;
    bool pass = false;
    bool informational = false;
    std::string details;
    double seconds = 0.0;
};

std::vector<int> suite_ids(const std::string& suite);
Result run_criterion(int id, const Options& opt);
std::vector<Result> run_suite(const std::string& suite, const Options& opt);
bool all_passed(const std::vector<Result>& results);

}  // namespace ipoly::checks
