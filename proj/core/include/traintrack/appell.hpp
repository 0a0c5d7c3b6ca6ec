#ifndef TRAINTRACK_APPELL_HPP
#define TRAINTRACK_APPELL_HPP

#include <traintrack/special.hpp>

#include <functional>

namespace traintrack
{

/// Parameters of F2(alpha; beta1, beta2; gamma1, gamma2 | x, y).
struct F2Params
{
    cplx alpha;
    cplx beta1;
    cplx beta2;
    cplx gamma1;
    cplx gamma2;

    /// The traintrack configuration (1/2; 1/2, 1/2; 1, 1).
    static F2Params conformal() { return {0.5, 0.5, 0.5, 1.0, 1.0}; }

    bool is_conformal(double tol = 1e-12) const noexcept;

    /// Parameters of the mirrored function F2(alpha; beta2, beta1; gamma2, gamma1 | y, x).
    F2Params swapped() const { return {alpha, beta2, beta1, gamma2, gamma1}; }

    /// gamma1 and gamma2 must avoid the non-positive integers.
    void validate() const;
};

struct ModuliPoint
{
    cplx x;
    cplx y;
};

struct QuadratureControl
{
    int level_max = 10;
    double target_tol = 1e-13;

    /// level_max in [3, 14], target_tol > 0.
    void validate() const;
};

/// A value together with an a-posteriori error estimate.
struct Evaluation
{
    cplx value;
    double error;
};

/// Double power series sum_{m,n} (alpha)_{m+n} (beta1)_m (beta2)_n /
/// ((gamma1)_m (gamma2)_n m! n!) x^m y^n, summed by total degree. Requires |x| + |y| < 1.
Evaluation f2_series_eval(const F2Params &p, ModuliPoint pt, const SeriesControl &c = {});
cplx f2_series(const F2Params &p, ModuliPoint pt, const SeriesControl &c = {});

/// Euler double integral over the unit square by tensor tanh-sinh quadrature,
/// with the Gamma prefactor applied. Requires Re(gamma_i) > Re(beta_i) > 0 and a
/// kernel 1 - x t2 - y t1 free of zeros on the closed square.
Evaluation f2_euler_integral_eval(const F2Params &p, ModuliPoint pt,
                                  const QuadratureControl &q = {});
cplx f2_euler_integral(const F2Params &p, ModuliPoint pt, const QuadratureControl &q = {});

/// True when 1 - x t2 - y t1 vanishes (to within `tol`) somewhere on [0,1]^2.
bool euler_kernel_vanishes(ModuliPoint pt, double tol = 1e-12);

using AnalyticFn2 = std::function<cplx(cplx, cplx)>;

/// Left-hand sides of the two F2 partial differential equations for F at pt.
struct PdeResidual
{
    cplx first;
    cplx second;
    double scale_first;   // largest single-term magnitude in the first equation
    double scale_second;

    cplx normalized_first() const { return scale_first > 0.0 ? first / scale_first : first; }
    cplx normalized_second() const { return scale_second > 0.0 ? second / scale_second : second; }
    double max_normalized() const;
};

/// Distance from pt to the nearest component of {x=0, x=1, y=0, y=1, x+y=1},
/// measured for a polydisk of equal radii (the x+y=1 term is |1-x-y|/2).
double f2_singular_distance(ModuliPoint pt);

/// Half of f2_singular_distance.
double default_cauchy_radius(ModuliPoint pt);

/// Evaluates both equations of the F2 system on F, with every partial
/// derivative obtained by Cauchy-integral differentiation on the torus of the
/// given radius. Throws radius_too_large if that torus reaches the singular locus.
PdeResidual f2_pde_residual(const AnalyticFn2 &F, const F2Params &p, ModuliPoint pt, double radius,
                            int nodes = 64);

/// Quadratic-relation criterion: alpha = beta1 + beta2 - 1/2, gamma1 = 2 beta1,
/// gamma2 = 2 beta2, compared to within `tol`.
bool quadratic_criterion(const F2Params &p, double tol = 1e-12);

} // namespace traintrack

#endif
