#ifndef TRAINTRACK_CLI_ARGUMENTS_HPP
#define TRAINTRACK_CLI_ARGUMENTS_HPP

#include <traintrack/special.hpp>

#include <string>

namespace traintrack::cli
{

/// Accepts "1.5", "-2i", "0.3+0.1i", "0.3-1e-2j", "(0.3,0.1)" and "0.3,0.1".
/// Throws std::invalid_argument on anything else.
cplx parse_complex(const std::string &text);

struct Interval
{
    double lo = 0.0;
    double hi = 0.0;
};

/// "lo:hi", or a single value for a degenerate interval.
Interval parse_interval(const std::string &text);

} // namespace traintrack::cli

#endif
