#ifndef TRAINTRACK_TESTS_ORACLES_HPP
#define TRAINTRACK_TESTS_ORACLES_HPP

// Test-only reference computations. None of these call the code path they
// are used to check.

#include <traintrack/special.hpp>

#include <cmath>
#include <complex>
#include <functional>

namespace traintrack::oracle
{

/// f'(z0) from the trapezoid rule on |z - z0| = r.
inline cplx cauchy_derivative(const std::function<cplx(cplx)> &f, cplx z0, double r, int n = 128)
{
    cplx acc = 0.0;
    for (int k = 0; k < n; ++k) {
        const cplx w = std::polar(1.0, 2.0 * pi * k / n);
        acc += f(z0 + r * w) / w;
    }
    return acc / (static_cast<double>(n) * r);
}

/// (2 / pi) K(m) as the plain Legendre power series sum ((1/2)_n / n!)^2 m^n.
inline cplx legendre_series(cplx m, int terms = 4000)
{
    cplx term = 1.0;
    cplx sum = 1.0;
    for (int n = 0; n < terms; ++n) {
        const double c = (n + 0.5) / (n + 1.0);
        term *= c * c * m;
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) {
            break;
        }
    }
    return sum;
}

/// Complete elliptic integral of the first kind by composite Gauss-Legendre
/// on the angular form, for |m| well inside the unit disk.
inline cplx ellipk_angular(cplx m, int panels = 64)
{
    static const double x[] = {-0.9061798459386640, -0.5384693101056831, 0.0, 0.5384693101056831,
                               0.9061798459386640};
    static const double w[] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                               0.4786286704993665, 0.2369268850561891};
    const double h = 0.5 * pi / panels;
    cplx sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double mid = (p + 0.5) * h;
        for (int i = 0; i < 5; ++i) {
            const double th = mid + 0.5 * h * x[i];
            const double s = std::sin(th);
            sum += 0.5 * h * w[i] / std::sqrt(1.0 - m * s * s);
        }
    }
    return sum;
}

inline double rel_err(cplx a, cplx b)
{
    return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

} // namespace traintrack::oracle

#endif
