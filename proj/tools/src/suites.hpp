#ifndef TRAINTRACK_CLI_SUITES_HPP
#define TRAINTRACK_CLI_SUITES_HPP

#include "report.hpp"

#include <string>
#include <vector>

namespace traintrack::cli
{

struct SuiteInfo
{
    std::string name;
    double default_tolerance;
    std::size_t default_samples; // 0: the suite has a fixed set of cases
    std::string summary;
};

/// Suites in the order `verify all` runs them.
const std::vector<SuiteInfo> &suite_catalog();

/// nullptr if unknown.
const SuiteInfo *find_suite(const std::string &name);

/// Runs one suite. Suite k of the catalog draws from a CounterRng seeded with
/// splitmix64(seed + k), so a suite reproduces the same cases alone or inside `all`.
VerificationReport run_suite(const std::string &name, const RunConfig &config);

CombinedReport run_all(const RunConfig &config);

} // namespace traintrack::cli

#endif
