#ifndef TRAINTRACK_SPECIAL_HPP
#define TRAINTRACK_SPECIAL_HPP

// Complex Gamma, complete elliptic integrals and the Gauss hypergeometric
// series. Everything else in the library is built on these.

#include <complex>
#include <cstddef>

namespace traintrack
{

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;

/// Truncation policy shared by every power series in the library.
///
/// A series is stopped after three consecutive terms whose magnitude, inflated
/// by a geometric tail factor, falls below max(rel_tol * |partial sum|, abs_floor).
struct SeriesControl
{
    std::size_t max_terms = 200000;
    double rel_tol = 1e-16;
    double abs_floor = 1e-300;

    /// Throws std::invalid_argument unless rel_tol < 1, max_terms >= 8 and
    /// both tolerances are positive.
    void validate() const;
};

struct Hyper2F1Params
{
    cplx alpha;
    cplx beta;
    cplx gamma;

    /// Gamma must not be a non-positive integer.
    void validate() const;
};

/// Argument of K in the squared-modulus convention, K(m) = int_0^{pi/2} (1 - m sin^2)^{-1/2}.
/// The principal branch has its cut on [1, inf).
struct EllipticModulus
{
    cplx m;

    constexpr EllipticModulus() = default;
    constexpr EllipticModulus(cplx value) : m(value) {}
    constexpr EllipticModulus(double value) : m(value) {}

    /// True when m lies on the branch cut [1, inf); the value returned there is
    /// the limit from Im(m) < 0.
    bool on_cut() const noexcept { return m.imag() == 0.0 && m.real() >= 1.0; }
};

/// True when z is (numerically) a non-positive integer.
bool is_nonpositive_integer(cplx z, double tol = 1e-14) noexcept;

/// Lanczos approximation (g = 7, 9 terms) with reflection for Re(z) < 1/2.
cplx gamma_fn(cplx z);

/// Principal-branch Gauss arithmetic-geometric mean with the "right choice"
/// of square root at every step.
cplx agm(cplx a, cplx b);

cplx ellint_K(EllipticModulus m);
cplx ellint_E(cplx m);

/// dK/dm = (E - (1 - m) K) / (2 m (1 - m)).
cplx deriv_K(cplx m);

/// 2F1(alpha, beta; gamma | z) for |z| < 1 by direct summation; the Pfaff
/// transformation is used whenever it shrinks the argument.
cplx gauss_2f1(const Hyper2F1Params &p, cplx z, const SeriesControl &c = {});

/// Principal value of base^exponent, with 0^e = 0 for Re(e) > 0.
cplx cpow(cplx base, cplx exponent);

} // namespace traintrack

#endif
