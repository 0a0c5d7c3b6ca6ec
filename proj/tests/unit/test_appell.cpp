#include "oracles.hpp"

#include <traintrack/appell.hpp>
#include <traintrack/error.hpp>
#include <traintrack/sampling.hpp>

#include <gtest/gtest.h>

using namespace traintrack;
using oracle::rel_err;

namespace
{

const F2Params conformal = F2Params::conformal();

ModuliPoint random_point(CounterRng &rng, double max_rho)
{
    for (;;) {
        const cplx x(rng.uniform(-0.8, 0.8), rng.uniform(-0.8, 0.8));
        const cplx y(rng.uniform(-0.8, 0.8), rng.uniform(-0.8, 0.8));
        if (std::abs(x) + std::abs(y) <= max_rho) {
            return {x, y};
        }
    }
}

} // namespace

TEST(F2Series, Origin)
{
    EXPECT_EQ(f2_series(conformal, {0.0, 0.0}), cplx(1.0));
}

TEST(F2Series, ReferenceValues)
{
    // 25-digit reference evaluations.
    EXPECT_LT(rel_err(f2_series(conformal, {0.36, -0.1881}), 1.056010007009458062966), 1e-13);
    EXPECT_LT(rel_err(f2_series(conformal, {0.2, 0.1}), 1.088215577445824568687), 1e-13);
    const F2Params generic{cplx(0.3, 0.1), 0.7, cplx(0.4, -0.2), 1.5, cplx(1.2, 0.3)};
    EXPECT_LT(rel_err(f2_series(generic, {cplx(0.3, 0.1), cplx(-0.2, 0.25)}),
                      cplx(1.020881311165270317, 0.071123570456885192)),
              1e-13);
}

TEST(F2Series, DegeneratesToGauss)
{
    CounterRng rng(3);
    for (int i = 0; i < 10; ++i) {
        const F2Params p{cplx(rng.uniform(0.1, 1.5), rng.uniform(-0.3, 0.3)),
                         rng.uniform(0.1, 1.5), rng.uniform(0.1, 1.5), rng.uniform(0.5, 2.0),
                         rng.uniform(0.5, 2.0)};
        const cplx x(rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6));
        EXPECT_LT(rel_err(f2_series(p, {x, 0.0}), gauss_2f1({p.alpha, p.beta1, p.gamma1}, x)), 1e-10);
        EXPECT_LT(rel_err(f2_series(p, {0.0, x}), gauss_2f1({p.alpha, p.beta2, p.gamma2}, x)), 1e-10);
    }
}

TEST(F2Series, SwapSymmetry)
{
    CounterRng rng(8);
    for (int i = 0; i < 20; ++i) {
        const F2Params p{cplx(rng.uniform(0.1, 1.5), rng.uniform(-0.3, 0.3)),
                         cplx(rng.uniform(0.1, 1.5), rng.uniform(-0.3, 0.3)), rng.uniform(0.1, 1.5),
                         rng.uniform(0.5, 2.0), cplx(rng.uniform(0.5, 2.0), rng.uniform(-0.3, 0.3))};
        const ModuliPoint pt = random_point(rng, 0.8);
        EXPECT_LT(rel_err(f2_series(p, pt), f2_series(p.swapped(), {pt.y, pt.x})), 1e-12);
    }
}

TEST(F2Series, Errors)
{
    EXPECT_THROW(
        {
            try {
                f2_series(conformal, {0.9, 0.9});
            } catch (const Error &e) {
                EXPECT_EQ(e.kind(), ErrorKind::divergence);
                throw;
            }
        },
        Error);
    F2Params bad = conformal;
    bad.gamma2 = -1.0;
    EXPECT_THROW(f2_series(bad, {0.1, 0.1}), Error);
}

TEST(F2EulerIntegral, NormalizationAtOrigin)
{
    EXPECT_LT(std::abs(f2_euler_integral(conformal, {0.0, 0.0}) - 1.0), 1e-12);
}

TEST(F2EulerIntegral, MatchesSeries)
{
    EXPECT_LT(rel_err(f2_euler_integral(conformal, {0.2, 0.1}), f2_series(conformal, {0.2, 0.1})),
              1e-8);
    EXPECT_LT(rel_err(f2_euler_integral(conformal, {0.36, -0.1881}),
                      f2_series(conformal, {0.36, -0.1881})),
              1e-8);
    // Non-conformal exponents exercise the generic endpoint factors.
    const F2Params generic{cplx(0.3, 0.1), 0.7, cplx(0.4, -0.2), 1.5, cplx(1.2, 0.3)};
    const ModuliPoint pt{cplx(0.3, 0.1), cplx(-0.2, 0.25)};
    EXPECT_LT(rel_err(f2_euler_integral(generic, pt), f2_series(generic, pt)), 1e-8);
}

TEST(F2EulerIntegral, TriangleIdentityRandom)
{
    CounterRng rng(21);
    for (int i = 0; i < 8; ++i) {
        const ModuliPoint pt = random_point(rng, 0.8);
        EXPECT_LT(rel_err(f2_euler_integral(conformal, pt), f2_series(conformal, pt)), 1e-8)
            << pt.x << " " << pt.y;
    }
}

TEST(F2EulerIntegral, KernelZeroDetection)
{
    EXPECT_FALSE(euler_kernel_vanishes({0.36, -0.1881}));
    EXPECT_TRUE(euler_kernel_vanishes({0.6, 0.6}));     // x + y > 1
    EXPECT_TRUE(euler_kernel_vanishes({1.0, 0.0}));     // corner t2 = 1
    EXPECT_FALSE(euler_kernel_vanishes({cplx(0.3, 0.2), cplx(0.2, -0.1)}));
    EXPECT_TRUE(euler_kernel_vanishes({cplx(1.0, 1.0), cplx(1.0, -1.0)})); // t1 = t2 = 1/2
    EXPECT_THROW(
        {
            try {
                f2_euler_integral(conformal, {0.7, 0.6});
            } catch (const Error &e) {
                EXPECT_EQ(e.kind(), ErrorKind::singular_integrand);
                throw;
            }
        },
        Error);
}

TEST(F2EulerIntegral, ParameterPreconditions)
{
    F2Params p = conformal;
    p.beta1 = 1.0; // gamma1 = beta1
    EXPECT_THROW(f2_euler_integral(p, {0.1, 0.1}), Error);
    QuadratureControl q;
    q.level_max = 15;
    EXPECT_THROW(f2_euler_integral(conformal, {0.1, 0.1}, q), std::invalid_argument);
    q.level_max = 3;
    q.target_tol = 1e-15;
    EXPECT_THROW(
        {
            try {
                f2_euler_integral(conformal, {0.5, 0.45}, q);
            } catch (const Error &e) {
                EXPECT_EQ(e.kind(), ErrorKind::tolerance_not_reached);
                throw;
            }
        },
        Error);
}

TEST(F2PdeResidual, SeriesSolvesTheSystem)
{
    CounterRng rng(42);
    int checked = 0;
    while (checked < 10) {
        const ModuliPoint pt = random_point(rng, 0.7);
        const double radius = std::min(default_cauchy_radius(pt), 0.45 * (0.95 - std::abs(pt.x) - std::abs(pt.y)));
        if (radius < 0.01) {
            continue;
        }
        ++checked;
        const auto r = f2_pde_residual(
            [](cplx x, cplx y) { return f2_series(conformal, {x, y}); }, conformal, pt, radius);
        EXPECT_LT(r.max_normalized(), 1e-7) << pt.x << " " << pt.y;
    }
}

TEST(F2PdeResidual, GenericParameters)
{
    const F2Params p{cplx(0.3, 0.1), 0.7, cplx(0.4, -0.2), 1.5, cplx(1.2, 0.3)};
    const ModuliPoint pt{cplx(0.25, 0.1), cplx(-0.2, 0.15)};
    const auto r = f2_pde_residual([&](cplx x, cplx y) { return f2_series(p, {x, y}); }, p, pt,
                                   0.5 * default_cauchy_radius(pt));
    EXPECT_LT(r.max_normalized(), 1e-7);
}

TEST(F2PdeResidual, ConstantFails)
{
    const F2Params p{0.7, 0.4, 0.3, 1.2, 1.6};
    const ModuliPoint pt{0.3, 0.2};
    const auto r = f2_pde_residual([](cplx, cplx) { return cplx(1.0); }, p, pt, 0.05);
    EXPECT_LT(std::abs(r.first - (-p.alpha * p.beta1)), 1e-12);
    EXPECT_LT(std::abs(r.second - (-p.alpha * p.beta2)), 1e-12);
    EXPECT_GT(r.max_normalized(), 0.5);
}

TEST(F2PdeResidual, RadiusTooLarge)
{
    try {
        f2_pde_residual([](cplx, cplx) { return cplx(1.0); }, conformal, {0.1, 0.2}, 0.15);
        FAIL() << "expected radius_too_large";
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::radius_too_large);
    }
}

TEST(QuadraticCriterion, Cases)
{
    EXPECT_TRUE(quadratic_criterion(conformal));
    EXPECT_FALSE(quadratic_criterion({0.5, 0.5, 0.5, 1.0, 2.0}));
    EXPECT_TRUE(quadratic_criterion({1.0 / 6.0, 1.0 / 6.0, 0.5, 1.0 / 3.0, 1.0}));
    EXPECT_FALSE(quadratic_criterion({0.5 + 1e-9, 0.5, 0.5, 1.0, 1.0}));
    EXPECT_TRUE(conformal.is_conformal());
    EXPECT_FALSE(F2Params({0.5, 0.5, 0.5, 1.0, 2.0}).is_conformal());
}
