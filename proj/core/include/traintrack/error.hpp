#ifndef TRAINTRACK_ERROR_HPP
#define TRAINTRACK_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace traintrack
{

enum class ErrorKind
{
    pole,                   // parameter or argument at a Gamma / Pochhammer pole
    singular_argument,      // K(1), dK/dm at 0 or 1
    non_convergence,        // series or AGM failed to converge
    divergence,             // outside the convergence domain of a series
    singular_integrand,     // zero of the Euler kernel on the integration square
    tolerance_not_reached,  // quadrature ran out of levels
    radius_too_large,       // Cauchy circle touches the singular locus
    singular_locus,         // connection matrix requested on the singular locus
    step_underflow,         // ODE step collapsed near a singularity
    clearance_violation,    // path passes too close to a singular point
    non_integral,           // matrix entry not within tolerance of an integer
    degenerate_pair,        // Lambda1 + Lambda2 = 0
    branch_ambiguity,       // branch tracking left the anchored sheet
    discriminant_degeneracy,
    domain_violation,
    non_real_pairing,
    lower_half_plane,
    non_constant_ratio,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Numerical failure with a machine-readable kind. All library errors derive
/// from this so callers (the CLI in particular) can map them to exit codes.
class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string &what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string &what)
{
    throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

} // namespace traintrack

#endif
