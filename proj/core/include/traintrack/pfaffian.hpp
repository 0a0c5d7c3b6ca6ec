#ifndef TRAINTRACK_PFAFFIAN_HPP
#define TRAINTRACK_PFAFFIAN_HPP

// First-order (Pfaffian) forms of the 2F1 and F2 systems, tensor products,
// complex-path transport of fundamental matrices and monodromy.

#include <traintrack/appell.hpp>
#include <traintrack/special.hpp>

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace traintrack
{

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using IntMatrix2 = Eigen::Matrix<long long, 2, 2>;

/// dPsi = A(z) Psi dz. `coefficient` returns the full rational coefficient of dz.
struct PfaffianSystem1D
{
    int dimension = 0;
    std::function<Matrix(cplx)> coefficient;
    std::vector<cplx> singular_points; // finite singular points; infinity is implied

    /// Distance from z to the nearest finite singular point.
    double clearance(cplx z) const;

    /// Evaluates the coefficient; throws singular_locus on a singular point.
    Matrix operator()(cplx z) const;
};

struct SingularComponent
{
    std::string name;
    std::function<cplx(cplx, cplx)> equation; // vanishes on the component
};

/// dPsi = (A_x dx + A_y dy) Psi.
struct PfaffianSystem2D
{
    int dimension = 0;
    std::function<Matrix(cplx, cplx)> coefficient_x;
    std::function<Matrix(cplx, cplx)> coefficient_y;
    std::vector<SingularComponent> singular_locus;
    /// Largest equal-radius polydisk around (x, y) avoiding the singular locus.
    std::function<double(cplx, cplx)> clearance;
};

/// Connection of the 2F1 equation in the section basis (f, z f').
Eigen::Matrix2cd a_2f1(const Hyper2F1Params &p, cplx z);
PfaffianSystem1D system_2f1(const Hyper2F1Params &p);

struct ConnectionPair
{
    Eigen::Matrix4cd dx;
    Eigen::Matrix4cd dy;
};

/// Connection of the F2 system in the section basis (F, x F_x, y F_y, x y F_xy).
ConnectionPair a_f2(const F2Params &p, ModuliPoint pt);
PfaffianSystem2D system_f2(const F2Params &p);

/// Connection A1 (x) I dx + I (x) A2 dy acting on Kronecker-product sections
/// f(u) (x) g(v); the variables are (u, v) = (Lambda1^2, Lambda2^2) in the
/// factorization use case.
PfaffianSystem2D tensor_system(const PfaffianSystem1D &s1, const PfaffianSystem1D &s2);

Matrix kron(const Matrix &a, const Matrix &b);

/// Curvature d_y A_x - d_x A_y + [A_x, A_y] at pt, with the coefficient
/// derivatives taken by Cauchy integrals of the given radius. Normalized by the
/// largest entry magnitude among the four contributing matrices.
double flatness_residual(const PfaffianSystem2D &s, ModuliPoint pt, double radius, int nodes = 64);

/// |d section/dz - A section| normalized by the larger side, derivative via a
/// Cauchy integral of the given radius.
double horizontality_residual(const PfaffianSystem1D &s, const std::function<Vector(cplx)> &section,
                              cplx z, double radius, int nodes = 64);

double horizontality_residual(const PfaffianSystem2D &s,
                              const std::function<Vector(cplx, cplx)> &section, ModuliPoint pt,
                              double radius, int nodes = 64);

/// Horizontality of the F2 section (F, x F_x, y F_y, x y F_xy) built from a
/// scalar solution candidate F; all derivatives from one Cauchy torus.
double f2_section_residual(const F2Params &p, const AnalyticFn2 &F, ModuliPoint pt, double radius,
                           int nodes = 64);

/// A line segment or a circular arc, parametrized over s in [0, 1].
struct Segment
{
    enum class Kind
    {
        line,
        arc
    };

    Kind kind = Kind::line;
    cplx from;          // line start / arc centre
    cplx to;            // line end
    double radius = 0.0;
    double theta0 = 0.0;
    double theta1 = 0.0;

    static Segment line(cplx a, cplx b);
    static Segment arc(cplx centre, double radius, double theta0, double theta1);
    static Segment constant(cplx a) { return line(a, a); }

    cplx position(double s) const;
    cplx velocity(double s) const;
    double length() const;
    /// Minimum distance from p to the segment.
    double distance(cplx p) const;
};

struct PathSpec
{
    std::vector<Segment> segments;
    int steps_hint = 64;

    static PathSpec polyline(const std::vector<cplx> &waypoints);
    /// Positively oriented for turns > 0, starting at centre + radius e^{i start_angle}.
    static PathSpec circle(cplx centre, double radius, double turns, double start_angle = 0.0);

    PathSpec then(const PathSpec &next) const;
    cplx start() const;
    cplx end() const;
};

struct PathSpec2D
{
    std::vector<std::pair<Segment, Segment>> segments;
    int steps_hint = 64;

    static PathSpec2D polyline(const std::vector<ModuliPoint> &waypoints);
    /// The first coordinate follows `path`, the second stays at `fixed`.
    static PathSpec2D along_first(const PathSpec &path, cplx fixed);
    static PathSpec2D along_second(cplx fixed, const PathSpec &path);
};

struct IntegratorControl
{
    double step_tol = 1e-12;      // local error per unit step
    double min_clearance = 1e-3;  // minimum allowed distance to singularities
    double min_step = 1e-14;      // in the segment parameter s
    std::size_t max_steps = 4000000;
};

struct TransportResult
{
    Matrix value;
    double error_estimate = 0.0; // sum of accepted local error estimates
    std::size_t steps = 0;
};

/// Transports `initial` along the path with an adaptive Dormand-Prince 5(4)
/// stepper; the step is capped at clearance / 4 in the path variable.
TransportResult transport(const PfaffianSystem1D &s, const PathSpec &path, const Matrix &initial,
                          const IntegratorControl &control = {});
TransportResult transport(const PfaffianSystem2D &s, const PathSpec2D &path, const Matrix &initial,
                          const IntegratorControl &control = {});

Matrix integrate_pfaffian(const PfaffianSystem1D &s, const PathSpec &path, const Matrix &initial,
                          const IntegratorControl &control = {});

/// Section matrix [[f1, f2], [z f1', z f2']] of the Legendre basis
/// f1 = (2/pi) K(z), f2 = (2i/pi) K(1 - z).
Eigen::Matrix2cd legendre_basis(cplx z);

/// Lasso around a singular point: out from the basepoint to a circle of radius
/// `radius`, once around it counter-clockwise, and back.
PathSpec monodromy_loop(cplx around, cplx basepoint, double radius);

struct MonodromyResult
{
    Eigen::Matrix2cd matrix;     // continued basis = basis * matrix
    double integrality_error = 0.0;
    double transport_error = 0.0;
    PathSpec loop;
};

inline constexpr cplx default_basepoint{0.35, 1e-2};

/// Monodromy of a two-dimensional system (the Legendre 2F1 system is the
/// intended input) around one of its finite singular points, expressed in the
/// Legendre basis at the basepoint. The loop radius is half the distance to
/// the nearest other singular point.
MonodromyResult monodromy_2f1(const PfaffianSystem1D &s, cplx around,
                              cplx basepoint = default_basepoint,
                              const IntegratorControl &control = {});

/// Rounds entries to integers; throws non_integral if any entry is farther
/// than `tol` from its rounding.
IntMatrix2 round_integral(const Eigen::Matrix2cd &m, double tol = 1e-8);

/// det M = 1 and M = I mod 2.
bool gamma2_membership(const IntMatrix2 &m);
bool gamma2_membership(const Eigen::Matrix2cd &m, double tol = 1e-8);

} // namespace traintrack

#endif
