#ifndef TRAINTRACK_QUADRATURE_HPP
#define TRAINTRACK_QUADRATURE_HPP

#include <traintrack/special.hpp>

#include <functional>
#include <vector>

namespace traintrack
{

/// Double-exponential (tanh-sinh) rule on [0, 1].
///
/// Nodes are stored together with their distance to the right endpoint so that
/// integrands like (1 - t)^{-1/2} can be evaluated without cancellation.
struct TanhSinhNode
{
    double t;          // abscissa in (0, 1)
    double one_minus_t;
    double weight;     // dt/du at the node, without the step h
};

class TanhSinhRule
{
public:
    /// Half-width of the truncated u-interval. Beyond it t(1-t) < 1e-250.
    static constexpr double u_max = 6.0;

    /// Nodes added at refinement `level` (step h = 2^{-level}); level 0 holds
    /// every integer multiple of h = 1, later levels only the odd multiples.
    static std::vector<TanhSinhNode> nodes(int level);

    /// Node at u = k h with h = 2^{-level}.
    static TanhSinhNode node(double u);

    static double step(int level);
};

struct QuadratureEstimate
{
    cplx value;
    double error;
    int levels;
};

/// Adaptive level-doubling tanh-sinh integration of f over [0, 1]. The
/// integrand receives (t, 1 - t). Throws tolerance_not_reached when
/// consecutive levels still differ by more than rel_tol after level_max.
QuadratureEstimate tanh_sinh_01(const std::function<cplx(double, double)> &f, double rel_tol,
                                int level_max);

/// Taylor coefficients c[j][k] (0 <= j, k < order) of an analytic F at
/// (x0, y0), computed by the trapezoid rule on the torus |x - x0| = |y - y0| = radius
/// with `nodes` points per circle. Partial derivatives are j! k! c[j][k].
std::vector<std::vector<cplx>> cauchy_taylor_2d(const std::function<cplx(cplx, cplx)> &f, cplx x0,
                                                cplx y0, double radius, int order, int nodes = 64);

/// One-variable counterpart of cauchy_taylor_2d.
std::vector<cplx> cauchy_taylor_1d(const std::function<cplx(cplx)> &f, cplx z0, double radius,
                                   int order, int nodes = 64);

} // namespace traintrack

#endif
