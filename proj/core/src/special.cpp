#include <traintrack/error.hpp>
#include <traintrack/special.hpp>

#include <array>
#include <cmath>
#include <limits>
#include <sstream>

namespace traintrack
{

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
        case ErrorKind::pole: return "pole";
        case ErrorKind::singular_argument: return "singular argument";
        case ErrorKind::non_convergence: return "non-convergence";
        case ErrorKind::divergence: return "divergence";
        case ErrorKind::singular_integrand: return "singular integrand";
        case ErrorKind::tolerance_not_reached: return "tolerance not reached";
        case ErrorKind::radius_too_large: return "radius too large";
        case ErrorKind::singular_locus: return "singular locus";
        case ErrorKind::step_underflow: return "step underflow";
        case ErrorKind::clearance_violation: return "clearance violation";
        case ErrorKind::non_integral: return "non-integral entry";
        case ErrorKind::degenerate_pair: return "degenerate pair";
        case ErrorKind::branch_ambiguity: return "branch ambiguity";
        case ErrorKind::discriminant_degeneracy: return "discriminant degeneracy";
        case ErrorKind::domain_violation: return "domain violation";
        case ErrorKind::non_real_pairing: return "non-real pairing";
        case ErrorKind::lower_half_plane: return "lower half-plane";
        case ErrorKind::non_constant_ratio: return "non-constant ratio";
    }
    return "unknown";
}

void SeriesControl::validate() const
{
    if (max_terms < 8) {
        throw std::invalid_argument("SeriesControl: max_terms must be at least 8");
    }
    if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
        throw std::invalid_argument("SeriesControl: rel_tol must lie in (0, 1)");
    }
    if (!(abs_floor > 0.0)) {
        throw std::invalid_argument("SeriesControl: abs_floor must be positive");
    }
}

bool is_nonpositive_integer(cplx z, double tol) noexcept
{
    if (std::abs(z.imag()) > tol || z.real() > tol) {
        return false;
    }
    return std::abs(z.real() - std::round(z.real())) <= tol * std::max(1.0, std::abs(z.real()));
}

void Hyper2F1Params::validate() const
{
    if (is_nonpositive_integer(gamma)) {
        std::ostringstream os;
        os << "2F1 lower parameter gamma = " << gamma << " is a non-positive integer";
        fail(ErrorKind::pole, os.str());
    }
}

cplx cpow(cplx base, cplx exponent)
{
    if (base == cplx(0.0)) {
        if (exponent == cplx(0.0)) {
            return 1.0;
        }
        if (exponent.real() > 0.0) {
            return 0.0;
        }
        fail(ErrorKind::pole, "zero raised to an exponent with non-positive real part");
    }
    if (exponent.imag() == 0.0 && base.imag() == 0.0 && base.real() > 0.0) {
        return std::pow(base.real(), exponent.real());
    }
    return std::exp(exponent * std::log(base));
}

namespace
{

constexpr double lanczos_g = 7.0;
constexpr std::array<double, 9> lanczos_coeff = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

cplx gamma_lanczos(cplx z)
{
    // Valid for Re(z) >= 1/2.
    z -= 1.0;
    cplx x = lanczos_coeff[0];
    for (std::size_t i = 1; i < lanczos_coeff.size(); ++i) {
        x += lanczos_coeff[i] / (z + static_cast<double>(i));
    }
    const cplx t = z + lanczos_g + 0.5;
    return std::sqrt(2.0 * pi) * std::exp((z + 0.5) * std::log(t) - t) * x;
}

// Root with non-negative real part, ties broken towards non-negative imaginary part.
cplx right_sqrt(cplx w)
{
    cplx r = std::sqrt(w);
    if (r.real() < 0.0 || (r.real() == 0.0 && r.imag() < 0.0)) {
        r = -r;
    }
    return r;
}

constexpr int agm_max_iter = 64;

} // namespace

cplx gamma_fn(cplx z)
{
    if (is_nonpositive_integer(z, 0.0)) {
        std::ostringstream os;
        os << "Gamma has a pole at z = " << z;
        fail(ErrorKind::pole, os.str());
    }
    if (z.real() < 0.5) {
        const cplx s = std::sin(pi * z);
        if (s == cplx(0.0)) {
            fail(ErrorKind::pole, "Gamma reflection hit sin(pi z) = 0");
        }
        return pi / (s * gamma_lanczos(1.0 - z));
    }
    return gamma_lanczos(z);
}

cplx agm(cplx a, cplx b)
{
    constexpr double eps = std::numeric_limits<double>::epsilon();
    for (int i = 0; i < agm_max_iter; ++i) {
        if (std::abs(a - b) <= 4.0 * eps * std::abs(a)) {
            return a;
        }
        const cplx next_a = 0.5 * (a + b);
        b = right_sqrt(a * b);
        a = next_a;
    }
    std::ostringstream os;
    os << "AGM stalled for (" << a << ", " << b << ")";
    fail(ErrorKind::non_convergence, os.str());
}

cplx ellint_K(EllipticModulus mod)
{
    const cplx m = mod.m;
    if (m == cplx(1.0)) {
        fail(ErrorKind::singular_argument, "K(m) diverges logarithmically at m = 1");
    }
    if (!std::isfinite(m.real()) || !std::isfinite(m.imag())) {
        fail(ErrorKind::domain_violation, "K(m) requires a finite argument");
    }
    return pi / (2.0 * agm(1.0, std::sqrt(1.0 - m)));
}

cplx ellint_E(cplx m)
{
    if (m == cplx(1.0)) {
        return 1.0;
    }
    if (m == cplx(0.0)) {
        return pi / 2.0;
    }
    // E = K (1 - sum_n 2^{n-1} c_n^2) with c_0^2 = m, c_{n+1} = (a_n - b_n) / 2.
    constexpr double eps = std::numeric_limits<double>::epsilon();
    cplx a = 1.0;
    cplx b = std::sqrt(1.0 - m);
    cplx sum = 0.5 * m;
    double weight = 0.5;
    for (int i = 0; i < agm_max_iter; ++i) {
        if (std::abs(a - b) <= 4.0 * eps * std::abs(a)) {
            return (pi / (2.0 * a)) * (1.0 - sum);
        }
        const cplx c = 0.5 * (a - b);
        const cplx next_a = 0.5 * (a + b);
        b = right_sqrt(a * b);
        a = next_a;
        weight *= 2.0;
        sum += weight * c * c;
    }
    fail(ErrorKind::non_convergence, "AGM stalled while evaluating E(m)");
}

cplx deriv_K(cplx m)
{
    if (m == cplx(0.0) || m == cplx(1.0)) {
        fail(ErrorKind::singular_argument, "closed-form dK/dm is singular at m = 0 and m = 1");
    }
    return (ellint_E(m) - (1.0 - m) * ellint_K(m)) / (2.0 * m * (1.0 - m));
}

namespace
{

bool series_terminates(cplx a)
{
    return is_nonpositive_integer(a, 0.0);
}

cplx sum_2f1(cplx a, cplx b, cplx c, cplx z, const SeriesControl &ctl)
{
    const double az = std::abs(z);
    const double tail = az < 1.0 ? 1.0 / (1.0 - az) : 1.0;
    cplx term = 1.0;
    cplx sum = 1.0;
    int small_run = 0;
    for (std::size_t n = 0; n < ctl.max_terms; ++n) {
        const double dn = static_cast<double>(n);
        term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
        sum += term;
        const double bound = std::max(ctl.rel_tol * std::abs(sum), ctl.abs_floor);
        if (std::abs(term) * tail <= bound) {
            if (++small_run == 3) {
                return sum;
            }
        } else {
            small_run = 0;
        }
    }
    std::ostringstream os;
    os << "2F1 series did not converge within " << ctl.max_terms << " terms at z = " << z;
    fail(ErrorKind::non_convergence, os.str());
}

} // namespace

cplx gauss_2f1(const Hyper2F1Params &p, cplx z, const SeriesControl &c)
{
    c.validate();
    p.validate();
    if (z == cplx(0.0)) {
        return 1.0;
    }
    if (series_terminates(p.alpha) || series_terminates(p.beta)) {
        return sum_2f1(p.alpha, p.beta, p.gamma, z, c);
    }
    const double az = std::abs(z);
    if (az > 0.5 && z != cplx(1.0)) {
        // Pfaff: 2F1(a, b; c | z) = (1 - z)^{-a} 2F1(a, c - b; c | z / (z - 1)).
        const cplx w = z / (z - 1.0);
        if (std::abs(w) < az) {
            return cpow(1.0 - z, -p.alpha) * sum_2f1(p.alpha, p.gamma - p.beta, p.gamma, w, c);
        }
    }
    if (az >= 1.0) {
        std::ostringstream os;
        os << "2F1 series requires |z| < 1 (or a Pfaff image inside the disk); got z = " << z;
        fail(ErrorKind::non_convergence, os.str());
    }
    return sum_2f1(p.alpha, p.beta, p.gamma, z, c);
}

} // namespace traintrack
