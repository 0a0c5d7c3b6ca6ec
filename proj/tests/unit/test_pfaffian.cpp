#include "oracles.hpp"

#include <traintrack/error.hpp>
#include <traintrack/pfaffian.hpp>
#include <traintrack/quadrature.hpp>
#include <traintrack/sampling.hpp>

#include <gtest/gtest.h>

using namespace traintrack;

namespace
{

const Hyper2F1Params legendre{0.5, 0.5, 1.0};
const F2Params conformal = F2Params::conformal();

double max_abs(const Matrix &m)
{
    return m.cwiseAbs().maxCoeff();
}

Vector legendre_column(cplx z, int column)
{
    return legendre_basis(z).col(column);
}

ErrorKind kind_of(const std::function<void()> &fn)
{
    try {
        fn();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "no traintrack::Error thrown";
    return ErrorKind::domain_violation;
}

} // namespace

TEST(A2F1, SolutionSectionsAreHorizontal)
{
    const auto s = system_2f1(legendre);
    const auto f1 = [](cplx z) {
        Vector v(2);
        const auto c = oracle::cauchy_derivative([](cplx w) { return gauss_2f1(legendre, w); }, z, 0.1);
        v << gauss_2f1(legendre, z), z * c;
        return v;
    };
    EXPECT_LT(horizontality_residual(s, f1, 0.3, 0.1), 1e-9);
    EXPECT_LT(horizontality_residual(s, [](cplx z) { return legendre_column(z, 1); }, 0.3, 0.1), 1e-9);
}

TEST(A2F1, FirstRowIsTheSectionDefinition)
{
    const Hyper2F1Params p{cplx(0.3, 0.2), 0.7, cplx(1.9, -0.3)};
    const cplx z(0.4, 0.25);
    const auto a = a_2f1(p, z);
    EXPECT_EQ(a(0, 0), cplx(0.0));
    EXPECT_LT(std::abs(a(0, 1) - 1.0 / z), 1e-15);
    EXPECT_EQ(kind_of([&] { a_2f1(p, 0.0); }), ErrorKind::singular_locus);
    EXPECT_EQ(kind_of([&] { a_2f1(p, 1.0); }), ErrorKind::singular_locus);
}

TEST(A2F1, GenericParametersRandom)
{
    CounterRng rng(5);
    for (int i = 0; i < 20; ++i) {
        const Hyper2F1Params p{cplx(rng.uniform(0.1, 1.2), rng.uniform(-0.3, 0.3)),
                               rng.uniform(0.1, 1.2), cplx(rng.uniform(0.8, 2.0), rng.uniform(-0.3, 0.3))};
        const cplx z(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5));
        const double r = 0.4 * std::min(std::abs(z), 0.7 - std::abs(z));
        if (r < 0.02) {
            continue;
        }
        const auto section = [&](cplx w) {
            Vector v(2);
            const auto d = oracle::cauchy_derivative([&](cplx u) { return gauss_2f1(p, u); }, w, 0.5 * r);
            v << gauss_2f1(p, w), w * d;
            return v;
        };
        EXPECT_LT(horizontality_residual(system_2f1(p), section, z, r), 1e-8) << z;
    }
}

TEST(AF2, SeriesSectionIsHorizontal)
{
    const auto F = [](cplx x, cplx y) { return f2_series(conformal, {x, y}); };
    EXPECT_LT(f2_section_residual(conformal, F, {0.2, 0.1}, 0.04), 1e-8);
    const F2Params generic{cplx(0.3, 0.1), 0.7, cplx(0.4, -0.2), 1.5, cplx(1.2, 0.3)};
    EXPECT_LT(f2_section_residual(generic, [&](cplx x, cplx y) { return f2_series(generic, {x, y}); },
                                  {cplx(0.25, 0.1), cplx(-0.2, 0.15)}, 0.04),
              1e-8);
}

TEST(AF2, FirstRowIsTheSectionDefinition)
{
    const ModuliPoint pt{cplx(0.2, 0.1), cplx(-0.3, 0.05)};
    const auto a = a_f2(conformal, pt);
    for (int j = 0; j < 4; ++j) {
        EXPECT_LT(std::abs(a.dx(0, j) - (j == 1 ? 1.0 / pt.x : cplx(0.0))), 1e-15);
        EXPECT_LT(std::abs(a.dy(0, j) - (j == 2 ? 1.0 / pt.y : cplx(0.0))), 1e-15);
    }
    EXPECT_EQ(kind_of([] { a_f2(conformal, {0.4, 0.6}); }), ErrorKind::singular_locus);
    EXPECT_EQ(kind_of([] { a_f2(conformal, {0.0, 0.3}); }), ErrorKind::singular_locus);
}

TEST(AF2, FlatAtRandomPoints)
{
    CounterRng rng(17);
    const auto s = system_f2({cplx(0.3, 0.1), 0.7, cplx(0.4, -0.2), 1.5, cplx(1.2, 0.3)});
    const auto c = system_f2(conformal);
    for (int i = 0; i < 10; ++i) {
        const ModuliPoint pt{cplx(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)),
                             cplx(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5))};
        const double r = 0.5 * s.clearance(pt.x, pt.y);
        EXPECT_LT(flatness_residual(s, pt, r), 1e-8);
        EXPECT_LT(flatness_residual(c, pt, r), 1e-8);
    }
}

TEST(TensorSystem, DegenerateFactor)
{
    PfaffianSystem1D zero;
    zero.dimension = 2;
    zero.coefficient = [](cplx) -> Matrix { return Matrix::Zero(2, 2); };
    const auto s1 = system_2f1(legendre);
    const auto t = tensor_system(s1, zero);
    const cplx u(0.2, 0.1), v(0.4, -0.2);
    EXPECT_LT(max_abs(t.coefficient_x(u, v) - kron(s1(u), Matrix::Identity(2, 2))), 1e-15);
    EXPECT_LT(max_abs(t.coefficient_y(u, v)), 1e-300);
}

TEST(TensorSystem, ProductSectionIsHorizontal)
{
    const auto s = system_2f1(legendre);
    const auto t = tensor_system(s, s);
    const auto section = [](cplx u, cplx v) -> Vector {
        return kron(legendre_column(u, 0), legendre_column(v, 0));
    };
    EXPECT_LT(horizontality_residual(t, section, {0.2, 0.3}, 0.05), 1e-9);
    EXPECT_LT(flatness_residual(t, {0.2, 0.3}, 0.05), 1e-12);
}

TEST(TensorSystem, MonodromyIsKroneckerProduct)
{
    const auto s = system_2f1(legendre);
    const auto t = tensor_system(s, s);
    const cplx b = default_basepoint;
    const cplx v0(0.6, 0.05);
    const Matrix start = kron(legendre_basis(b), legendre_basis(v0));
    const auto loop = PathSpec2D::along_first(monodromy_loop(0.0, b, 0.5), v0);
    const Matrix end = transport(t, loop, start).value;
    const Matrix m = start.inverse() * end;
    const auto m0 = monodromy_2f1(s, 0.0).matrix;
    EXPECT_LT(max_abs(m - kron(m0, Matrix::Identity(2, 2))), 1e-8);
}

TEST(Transport, ZeroLengthIsIdentity)
{
    const auto s = system_2f1(legendre);
    const Matrix id = Matrix::Identity(2, 2);
    EXPECT_EQ(integrate_pfaffian(s, PathSpec::polyline({0.3, 0.3}), id), id);
}

TEST(Transport, ContractibleLoopIsTrivial)
{
    const auto s = system_2f1(legendre);
    const Matrix start = legendre_basis(0.4);
    const auto loop = PathSpec::circle(0.4, 0.2, 1.0, 0.0);
    const Matrix through = integrate_pfaffian(s, PathSpec::polyline({0.4, 0.6}).then(loop).then(
                                                     PathSpec::polyline({0.6, 0.4})),
                                              start);
    EXPECT_LT(max_abs(through - start), 1e-10 * max_abs(start));
}

TEST(Transport, MatchesDirectEvaluation)
{
    const auto s = system_2f1(legendre);
    const Matrix end = integrate_pfaffian(s, PathSpec::polyline({0.2, 0.4}), legendre_basis(0.2));
    EXPECT_LT(max_abs(end - legendre_basis(0.4)), 1e-9);
    const Matrix off = integrate_pfaffian(s, PathSpec::polyline({0.2, cplx(0.3, 0.3), cplx(-0.4, 0.2)}),
                                          legendre_basis(0.2));
    EXPECT_LT(max_abs(off - legendre_basis(cplx(-0.4, 0.2))), 1e-9);
}

TEST(Transport, Multiplicative)
{
    const auto s = system_2f1({cplx(0.3, 0.2), 0.7, cplx(1.9, -0.3)});
    const Matrix id = Matrix::Identity(2, 2);
    const auto p = PathSpec::polyline({cplx(0.3, 0.1), cplx(0.5, 0.4), cplx(-0.2, 0.5)});
    const auto q = PathSpec::circle(cplx(-0.2, 0.0), 0.5, 0.75, pi / 2).then(
        PathSpec::polyline({cplx(-0.7, 0.0), cplx(-0.7, -0.4)}));
    const Matrix pq = integrate_pfaffian(s, p.then(q), id);
    const Matrix stepwise = integrate_pfaffian(s, q, integrate_pfaffian(s, p, id));
    EXPECT_LT(max_abs(pq - stepwise), 1e-10);
}

TEST(Transport, MultiplicativeInTwoVariables)
{
    const auto s = system_f2(conformal);
    const Matrix id = Matrix::Identity(4, 4);
    const auto p = PathSpec2D::polyline({{0.2, 0.1}, {cplx(0.3, 0.2), cplx(-0.1, 0.1)}});
    const auto q = PathSpec2D::polyline({{cplx(0.3, 0.2), cplx(-0.1, 0.1)}, {cplx(0.1, -0.2), 0.2}});
    auto pq = p;
    pq.segments.insert(pq.segments.end(), q.segments.begin(), q.segments.end());
    const Matrix whole = transport(s, pq, id).value;
    const Matrix stepwise = transport(s, q, transport(s, p, id).value).value;
    EXPECT_LT(max_abs(whole - stepwise), 1e-10 * max_abs(whole));
}

TEST(Transport, F2SeriesSectionIsTransported)
{
    const auto s = system_f2(conformal);
    const auto section = [](ModuliPoint pt) {
        const auto c = cauchy_taylor_2d([](cplx x, cplx y) { return f2_series(conformal, {x, y}); },
                                        pt.x, pt.y, 0.04, 2);
        Vector v(4);
        v << c[0][0], pt.x * c[1][0], pt.y * c[0][1], pt.x * pt.y * c[1][1];
        return v;
    };
    const ModuliPoint a{0.2, 0.1}, b{cplx(0.3, 0.15), cplx(-0.15, 0.1)};
    const Matrix end = transport(s, PathSpec2D::polyline({a, b}), section(a)).value;
    EXPECT_LT((end.col(0) - section(b)).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(Transport, Errors)
{
    const auto s = system_2f1(legendre);
    const Matrix id = Matrix::Identity(2, 2);
    EXPECT_EQ(kind_of([&] { integrate_pfaffian(s, PathSpec::polyline({-0.5, 0.5}), id); }),
              ErrorKind::clearance_violation);
    EXPECT_EQ(kind_of([&] { integrate_pfaffian(s, PathSpec::polyline({0.5, cplx(1.0, 1e-4)}), id); }),
              ErrorKind::clearance_violation);
}

TEST(Monodromy, AroundZero)
{
    const auto r = monodromy_2f1(system_2f1(legendre), 0.0);
    const auto m = round_integral(r.matrix);
    EXPECT_LT(r.integrality_error, 1e-8);
    EXPECT_EQ(m(0, 0), 1);
    EXPECT_EQ(m(1, 1), 1);
    EXPECT_EQ(m(1, 0), 0);
    EXPECT_EQ(std::llabs(m(0, 1)), 2);
    EXPECT_TRUE(gamma2_membership(m));
}

TEST(Monodromy, AroundOne)
{
    const auto r = monodromy_2f1(system_2f1(legendre), 1.0);
    const auto m = round_integral(r.matrix);
    EXPECT_LT(r.integrality_error, 1e-8);
    EXPECT_EQ(m(0, 0), 1);
    EXPECT_EQ(m(1, 1), 1);
    EXPECT_EQ(m(0, 1), 0);
    EXPECT_EQ(std::llabs(m(1, 0)), 2);
    EXPECT_TRUE(gamma2_membership(m));
}

TEST(Monodromy, ProductIsNotElliptic)
{
    const auto s = system_2f1(legendre);
    const auto m0 = round_integral(monodromy_2f1(s, 0.0).matrix);
    const auto m1 = round_integral(monodromy_2f1(s, 1.0).matrix);
    EXPECT_GE(std::llabs((m0 * m1).trace()), 2);
}

TEST(Monodromy, RejectsRegularPoint)
{
    EXPECT_THROW(monodromy_2f1(system_2f1(legendre), 0.5), std::invalid_argument);
}

TEST(Gamma2, Membership)
{
    IntMatrix2 m;
    m << 1, 0, 0, 1;
    EXPECT_TRUE(gamma2_membership(m));
    m << 1, 2, 0, 1;
    EXPECT_TRUE(gamma2_membership(m));
    m << 1, 1, 0, 1;
    EXPECT_FALSE(gamma2_membership(m));
    m << 3, 2, 4, 3;
    EXPECT_TRUE(gamma2_membership(m));
    m << 3, 2, 2, 1; // det -1
    EXPECT_FALSE(gamma2_membership(m));
    Eigen::Matrix2cd c;
    c << 1.0, 0.5, 0.0, 1.0;
    EXPECT_EQ(kind_of([&] { gamma2_membership(c); }), ErrorKind::non_integral);
}
