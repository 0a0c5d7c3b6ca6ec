#include <traintrack/error.hpp>
#include <traintrack/pfaffian.hpp>
#include <traintrack/quadrature.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace traintrack
{

namespace
{

constexpr double locus_eps = 1e-15;

double max_abs(const Matrix &m)
{
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

[[noreturn]] void singular_point_error(const char *what, cplx x, cplx y = 0.0)
{
    std::ostringstream os;
    os << what << " evaluated on its singular locus at (" << x << ", " << y << ")";
    fail(ErrorKind::singular_locus, os.str());
}

// Matrix-valued Cauchy derivative d/dt M(t) at t0 via trapezoid on a circle.
template <class Fn>
Matrix cauchy_derivative(Fn &&fn, cplx t0, double radius, int nodes)
{
    Matrix acc;
    for (int a = 0; a < nodes; ++a) {
        const cplx w = std::polar(1.0, 2.0 * pi * a / nodes);
        const Matrix sample = fn(t0 + radius * w);
        if (a == 0) {
            acc = Matrix::Zero(sample.rows(), sample.cols());
        }
        acc += sample * std::conj(w);
    }
    return acc / (static_cast<double>(nodes) * radius);
}

} // namespace

double PfaffianSystem1D::clearance(cplx z) const
{
    double d = std::numeric_limits<double>::infinity();
    for (const cplx &p : singular_points) {
        d = std::min(d, std::abs(z - p));
    }
    return d;
}

Matrix PfaffianSystem1D::operator()(cplx z) const
{
    if (clearance(z) <= locus_eps) {
        singular_point_error("Pfaffian system", z);
    }
    return coefficient(z);
}

Eigen::Matrix2cd a_2f1(const Hyper2F1Params &p, cplx z)
{
    if (std::abs(z) <= locus_eps || std::abs(1.0 - z) <= locus_eps) {
        singular_point_error("2F1 connection", z);
    }
    // theta f = z f'; theta^2 f = (alpha beta z f + (1 - gamma + (alpha + beta) z) theta f) / (1 - z).
    Eigen::Matrix2cd a;
    a(0, 0) = 0.0;
    a(0, 1) = 1.0 / z;
    a(1, 0) = p.alpha * p.beta / (1.0 - z);
    a(1, 1) = (1.0 - p.gamma + (p.alpha + p.beta) * z) / (z * (1.0 - z));
    return a;
}

PfaffianSystem1D system_2f1(const Hyper2F1Params &p)
{
    PfaffianSystem1D s;
    s.dimension = 2;
    s.coefficient = [p](cplx z) -> Matrix { return a_2f1(p, z); };
    s.singular_points = {0.0, 1.0};
    return s;
}

ConnectionPair a_f2(const F2Params &p, ModuliPoint pt)
{
    const cplx x = pt.x;
    const cplx y = pt.y;
    if (std::abs(x) <= locus_eps || std::abs(1.0 - x) <= locus_eps || std::abs(y) <= locus_eps ||
        std::abs(1.0 - y) <= locus_eps || std::abs(1.0 - x - y) <= locus_eps) {
        singular_point_error("F2 connection", x, y);
    }
    using Row = Eigen::Matrix<cplx, 1, 4>;
    auto unit = [](int i) {
        Row r = Row::Zero();
        r(i) = 1.0;
        return r;
    };
    const cplx c1 = x * (p.alpha + p.beta1) + 1.0 - p.gamma1;
    const cplx c2 = y * (p.alpha + p.beta2) + 1.0 - p.gamma2;

    // theta_x^2 F and theta_y^2 F from the two equations in theta form.
    Row sx;
    sx << x * p.alpha * p.beta1, c1, x * p.beta1, x;
    sx /= (1.0 - x);
    Row sy;
    sy << y * p.alpha * p.beta2, y * p.beta2, c2, y;
    sy /= (1.0 - y);

    // theta_x theta_y^2 F = Q and theta_x^2 theta_y F = P solve
    // P = P0 + a Q, Q = Q0 + b P with a = x/(1-x), b = y/(1-y).
    const Row p0 = (x * p.alpha * p.beta1 * unit(2) + c1 * unit(3) + x * p.beta1 * sy) / (1.0 - x);
    const Row q0 = (y * p.alpha * p.beta2 * unit(1) + y * p.beta2 * sx + c2 * unit(3)) / (1.0 - y);
    const cplx a = x / (1.0 - x);
    const cplx b = y / (1.0 - y);
    const Row prow = (p0 + a * q0) / (1.0 - a * b);
    const Row qrow = q0 + b * prow;

    Eigen::Matrix4cd mx;
    mx.row(0) = unit(1);
    mx.row(1) = sx;
    mx.row(2) = unit(3);
    mx.row(3) = prow;
    Eigen::Matrix4cd my;
    my.row(0) = unit(2);
    my.row(1) = unit(3);
    my.row(2) = sy;
    my.row(3) = qrow;
    return {mx / x, my / y};
}

PfaffianSystem2D system_f2(const F2Params &p)
{
    PfaffianSystem2D s;
    s.dimension = 4;
    s.coefficient_x = [p](cplx x, cplx y) -> Matrix { return a_f2(p, {x, y}).dx; };
    s.coefficient_y = [p](cplx x, cplx y) -> Matrix { return a_f2(p, {x, y}).dy; };
    s.singular_locus = {
        {"x = 0", [](cplx x, cplx) { return x; }},
        {"x = 1", [](cplx x, cplx) { return 1.0 - x; }},
        {"y = 0", [](cplx, cplx y) { return y; }},
        {"y = 1", [](cplx, cplx y) { return 1.0 - y; }},
        {"x + y = 1", [](cplx x, cplx y) { return 1.0 - x - y; }},
    };
    s.clearance = [](cplx x, cplx y) { return f2_singular_distance({x, y}); };
    return s;
}

Matrix kron(const Matrix &a, const Matrix &b)
{
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

PfaffianSystem2D tensor_system(const PfaffianSystem1D &s1, const PfaffianSystem1D &s2)
{
    PfaffianSystem2D s;
    s.dimension = s1.dimension * s2.dimension;
    const Matrix id1 = Matrix::Identity(s1.dimension, s1.dimension);
    const Matrix id2 = Matrix::Identity(s2.dimension, s2.dimension);
    s.coefficient_x = [s1, id2](cplx u, cplx) -> Matrix { return kron(s1(u), id2); };
    s.coefficient_y = [s2, id1](cplx, cplx v) -> Matrix { return kron(id1, s2(v)); };
    for (const cplx &p : s1.singular_points) {
        std::ostringstream os;
        os << "u = " << p;
        s.singular_locus.push_back({os.str(), [p](cplx u, cplx) { return u - p; }});
    }
    for (const cplx &p : s2.singular_points) {
        std::ostringstream os;
        os << "v = " << p;
        s.singular_locus.push_back({os.str(), [p](cplx, cplx v) { return v - p; }});
    }
    s.clearance = [s1, s2](cplx u, cplx v) { return std::min(s1.clearance(u), s2.clearance(v)); };
    return s;
}

double flatness_residual(const PfaffianSystem2D &s, ModuliPoint pt, double radius, int nodes)
{
    if (!(radius > 0.0) || radius >= s.clearance(pt.x, pt.y)) {
        fail(ErrorKind::radius_too_large, "flatness check radius reaches the singular locus");
    }
    const Matrix ax = s.coefficient_x(pt.x, pt.y);
    const Matrix ay = s.coefficient_y(pt.x, pt.y);
    const Matrix dy_ax = cauchy_derivative([&](cplx y) { return s.coefficient_x(pt.x, y); }, pt.y,
                                           radius, nodes);
    const Matrix dx_ay = cauchy_derivative([&](cplx x) { return s.coefficient_y(x, pt.y); }, pt.x,
                                           radius, nodes);
    const Matrix axay = ax * ay;
    const Matrix ayax = ay * ax;
    const Matrix curvature = dy_ax - dx_ay + axay - ayax;
    const double scale =
        std::max({max_abs(dy_ax), max_abs(dx_ay), max_abs(axay), max_abs(ayax)});
    return scale > 0.0 ? max_abs(curvature) / scale : max_abs(curvature);
}

namespace
{

double relative_mismatch(const Vector &lhs, const Vector &rhs)
{
    const double scale = std::max(lhs.cwiseAbs().maxCoeff(), rhs.cwiseAbs().maxCoeff());
    const double diff = (lhs - rhs).cwiseAbs().maxCoeff();
    return scale > 0.0 ? diff / scale : diff;
}

} // namespace

double horizontality_residual(const PfaffianSystem1D &s, const std::function<Vector(cplx)> &section,
                              cplx z, double radius, int nodes)
{
    if (!(radius > 0.0) || radius >= s.clearance(z)) {
        fail(ErrorKind::radius_too_large, "horizontality radius reaches a singular point");
    }
    const Vector d = cauchy_derivative([&](cplx t) -> Matrix { return section(t); }, z, radius, nodes);
    return relative_mismatch(d, s(z) * section(z));
}

double horizontality_residual(const PfaffianSystem2D &s,
                              const std::function<Vector(cplx, cplx)> &section, ModuliPoint pt,
                              double radius, int nodes)
{
    if (!(radius > 0.0) || radius >= s.clearance(pt.x, pt.y)) {
        fail(ErrorKind::radius_too_large, "horizontality radius reaches the singular locus");
    }
    const Vector v = section(pt.x, pt.y);
    const Vector dx =
        cauchy_derivative([&](cplx x) -> Matrix { return section(x, pt.y); }, pt.x, radius, nodes);
    const Vector dy =
        cauchy_derivative([&](cplx y) -> Matrix { return section(pt.x, y); }, pt.y, radius, nodes);
    return std::max(relative_mismatch(dx, s.coefficient_x(pt.x, pt.y) * v),
                    relative_mismatch(dy, s.coefficient_y(pt.x, pt.y) * v));
}

double f2_section_residual(const F2Params &p, const AnalyticFn2 &F, ModuliPoint pt, double radius,
                           int nodes)
{
    if (!(radius > 0.0) || radius >= f2_singular_distance(pt)) {
        fail(ErrorKind::radius_too_large, "section residual radius reaches the singular locus");
    }
    const auto c = cauchy_taylor_2d(F, pt.x, pt.y, radius, 3, nodes);
    const cplx x = pt.x;
    const cplx y = pt.y;
    const cplx f = c[0][0];
    const cplx fx = c[1][0];
    const cplx fy = c[0][1];
    const cplx fxy = c[1][1];
    const cplx fxx = 2.0 * c[2][0];
    const cplx fyy = 2.0 * c[0][2];
    const cplx fxxy = 2.0 * c[2][1];
    const cplx fxyy = 2.0 * c[1][2];

    Vector v(4);
    v << f, x * fx, y * fy, x * y * fxy;
    Vector dx(4);
    dx << fx, fx + x * fxx, y * fxy, y * fxy + x * y * fxxy;
    Vector dy(4);
    dy << fy, x * fxy, fy + y * fyy, x * fxy + x * y * fxyy;

    const ConnectionPair a = a_f2(p, pt);
    const Vector rx = a.dx * v;
    const Vector ry = a.dy * v;
    return std::max(relative_mismatch(dx, rx), relative_mismatch(dy, ry));
}

// ---------------------------------------------------------------------------
// Paths

Segment Segment::line(cplx a, cplx b)
{
    Segment s;
    s.kind = Kind::line;
    s.from = a;
    s.to = b;
    return s;
}

Segment Segment::arc(cplx centre, double radius, double theta0, double theta1)
{
    Segment s;
    s.kind = Kind::arc;
    s.from = centre;
    s.radius = radius;
    s.theta0 = theta0;
    s.theta1 = theta1;
    return s;
}

cplx Segment::position(double s) const
{
    if (kind == Kind::line) {
        return from + s * (to - from);
    }
    return from + std::polar(radius, theta0 + s * (theta1 - theta0));
}

cplx Segment::velocity(double s) const
{
    if (kind == Kind::line) {
        return to - from;
    }
    const double dtheta = theta1 - theta0;
    return cplx(0.0, dtheta) * std::polar(radius, theta0 + s * dtheta);
}

double Segment::length() const
{
    if (kind == Kind::line) {
        return std::abs(to - from);
    }
    return radius * std::abs(theta1 - theta0);
}

double Segment::distance(cplx p) const
{
    if (kind == Kind::line) {
        const cplx d = to - from;
        const double len2 = std::norm(d);
        if (len2 == 0.0) {
            return std::abs(p - from);
        }
        const double s = std::clamp(((p - from) * std::conj(d)).real() / len2, 0.0, 1.0);
        return std::abs(p - position(s));
    }
    const double span = std::abs(theta1 - theta0);
    const double radial = std::abs(std::abs(p - from) - radius);
    if (span >= 2.0 * pi || p == from) {
        return radial;
    }
    const double lo = std::min(theta0, theta1);
    double phi = std::arg(p - from);
    while (phi < lo) {
        phi += 2.0 * pi;
    }
    while (phi >= lo + 2.0 * pi) {
        phi -= 2.0 * pi;
    }
    if (phi <= lo + span) {
        return radial;
    }
    return std::min(std::abs(p - position(0.0)), std::abs(p - position(1.0)));
}

PathSpec PathSpec::polyline(const std::vector<cplx> &waypoints)
{
    PathSpec path;
    for (std::size_t i = 1; i < waypoints.size(); ++i) {
        path.segments.push_back(Segment::line(waypoints[i - 1], waypoints[i]));
    }
    if (waypoints.size() == 1) {
        path.segments.push_back(Segment::constant(waypoints[0]));
    }
    return path;
}

PathSpec PathSpec::circle(cplx centre, double radius, double turns, double start_angle)
{
    PathSpec path;
    path.segments.push_back(
        Segment::arc(centre, radius, start_angle, start_angle + 2.0 * pi * turns));
    return path;
}

PathSpec PathSpec::then(const PathSpec &next) const
{
    PathSpec out = *this;
    out.segments.insert(out.segments.end(), next.segments.begin(), next.segments.end());
    out.steps_hint = std::max(steps_hint, next.steps_hint);
    return out;
}

cplx PathSpec::start() const
{
    return segments.empty() ? cplx(0.0) : segments.front().position(0.0);
}

cplx PathSpec::end() const
{
    return segments.empty() ? cplx(0.0) : segments.back().position(1.0);
}

PathSpec2D PathSpec2D::polyline(const std::vector<ModuliPoint> &waypoints)
{
    PathSpec2D path;
    for (std::size_t i = 1; i < waypoints.size(); ++i) {
        path.segments.emplace_back(Segment::line(waypoints[i - 1].x, waypoints[i].x),
                                   Segment::line(waypoints[i - 1].y, waypoints[i].y));
    }
    return path;
}

PathSpec2D PathSpec2D::along_first(const PathSpec &path, cplx fixed)
{
    PathSpec2D out;
    out.steps_hint = path.steps_hint;
    for (const auto &seg : path.segments) {
        out.segments.emplace_back(seg, Segment::constant(fixed));
    }
    return out;
}

PathSpec2D PathSpec2D::along_second(cplx fixed, const PathSpec &path)
{
    PathSpec2D out;
    out.steps_hint = path.steps_hint;
    for (const auto &seg : path.segments) {
        out.segments.emplace_back(Segment::constant(fixed), seg);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dormand-Prince 5(4)

namespace
{

struct Tableau
{
    static constexpr double c[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
    static constexpr double a[7][6] = {
        {},
        {1.0 / 5},
        {3.0 / 40, 9.0 / 40},
        {44.0 / 45, -56.0 / 15, 32.0 / 9},
        {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
        {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
        {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
    };
    static constexpr double b[7] = {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784,
                                    11.0 / 84,  0.0};
    static constexpr double bstar[7] = {5179.0 / 57600,    0.0,          7571.0 / 16695,
                                        393.0 / 640,       -92097.0 / 339200, 187.0 / 2100,
                                        1.0 / 40};
};

// Integrates dY/ds = rhs(s) Y over s in [0, 1]. `hmax(s)` caps the step and
// `clearance(s)` is checked at every accepted node.
template <class Rhs, class MaxStep>
void dopri_segment(Rhs &&rhs, MaxStep &&hmax, Matrix &y, TransportResult &out,
                   const IntegratorControl &ctl)
{
    double s = 0.0;
    double h = std::min(1.0 / 64.0, hmax(0.0));
    Matrix k[7];
    k[0] = rhs(0.0) * y;
    while (s < 1.0) {
        if (out.steps >= ctl.max_steps) {
            fail(ErrorKind::step_underflow, "transport exceeded the maximum number of steps");
        }
        h = std::min({h, 1.0 - s, hmax(s)});
        if (h < ctl.min_step) {
            std::ostringstream os;
            os << "step size " << h << " underflowed at path parameter " << s;
            fail(ErrorKind::step_underflow, os.str());
        }
        for (int i = 1; i < 7; ++i) {
            Matrix yi = y;
            for (int j = 0; j < i; ++j) {
                if (Tableau::a[i][j] != 0.0) {
                    yi += (h * Tableau::a[i][j]) * k[j];
                }
            }
            k[i] = rhs(s + Tableau::c[i] * h) * yi;
        }
        Matrix y5 = y;
        Matrix err = Matrix::Zero(y.rows(), y.cols());
        for (int i = 0; i < 7; ++i) {
            y5 += (h * Tableau::b[i]) * k[i];
            err += (h * (Tableau::b[i] - Tableau::bstar[i])) * k[i];
        }
        const double scale = 1.0 + std::max(max_abs(y), max_abs(y5));
        const double e = max_abs(err) / scale;
        if (e <= ctl.step_tol) {
            s = (1.0 - s - h <= 0.0) ? 1.0 : s + h;
            y = y5;
            k[0] = k[6]; // FSAL
            out.error_estimate += e * scale;
            ++out.steps;
        }
        const double factor = e == 0.0 ? 5.0 : 0.9 * std::pow(ctl.step_tol / e, 0.2);
        h *= std::clamp(factor, 0.2, 5.0);
    }
}

void check_clearance(double d, double min_clearance, cplx where)
{
    if (d < min_clearance) {
        std::ostringstream os;
        os << "path comes within " << d << " of a singular point near " << where
           << " (minimum clearance " << min_clearance << ")";
        fail(ErrorKind::clearance_violation, os.str());
    }
}

} // namespace

TransportResult transport(const PfaffianSystem1D &s, const PathSpec &path, const Matrix &initial,
                          const IntegratorControl &control)
{
    TransportResult out;
    out.value = initial;
    for (const auto &seg : path.segments) {
        for (const cplx &p : s.singular_points) {
            check_clearance(seg.distance(p), control.min_clearance, p);
        }
    }
    for (const auto &seg : path.segments) {
        if (seg.length() == 0.0) {
            continue;
        }
        const double speed = seg.length(); // |velocity| is constant on lines and arcs
        auto rhs = [&](double t) -> Matrix { return s(seg.position(t)) * seg.velocity(t); };
        auto hmax = [&](double t) { return 0.25 * s.clearance(seg.position(t)) / speed; };
        dopri_segment(rhs, hmax, out.value, out, control);
    }
    return out;
}

TransportResult transport(const PfaffianSystem2D &s, const PathSpec2D &path, const Matrix &initial,
                          const IntegratorControl &control)
{
    TransportResult out;
    out.value = initial;
    const int probes = std::max(16, 8 * path.steps_hint);
    for (const auto &[first, second] : path.segments) {
        for (int i = 0; i <= probes; ++i) {
            const double t = static_cast<double>(i) / probes;
            const cplx u = first.position(t);
            const cplx v = second.position(t);
            check_clearance(s.clearance(u, v), control.min_clearance, u);
        }
    }
    for (const auto &[first, second] : path.segments) {
        const double speed = std::hypot(first.length(), second.length());
        if (speed == 0.0) {
            continue;
        }
        auto rhs = [&](double t) -> Matrix {
            const cplx u = first.position(t);
            const cplx v = second.position(t);
            Matrix a = Matrix::Zero(s.dimension, s.dimension);
            if (first.length() != 0.0) {
                a += s.coefficient_x(u, v) * first.velocity(t);
            }
            if (second.length() != 0.0) {
                a += s.coefficient_y(u, v) * second.velocity(t);
            }
            return a;
        };
        auto hmax = [&](double t) {
            return 0.25 * s.clearance(first.position(t), second.position(t)) / speed;
        };
        dopri_segment(rhs, hmax, out.value, out, control);
    }
    return out;
}

Matrix integrate_pfaffian(const PfaffianSystem1D &s, const PathSpec &path, const Matrix &initial,
                          const IntegratorControl &control)
{
    return transport(s, path, initial, control).value;
}

Eigen::Matrix2cd legendre_basis(cplx z)
{
    const cplx i(0.0, 1.0);
    Eigen::Matrix2cd psi;
    psi(0, 0) = (2.0 / pi) * ellint_K(z);
    psi(0, 1) = (2.0 * i / pi) * ellint_K(1.0 - z);
    psi(1, 0) = z * (2.0 / pi) * deriv_K(z);
    psi(1, 1) = -z * (2.0 * i / pi) * deriv_K(1.0 - z);
    return psi;
}

PathSpec monodromy_loop(cplx around, cplx basepoint, double radius)
{
    const cplx offset = basepoint - around;
    if (std::abs(offset) == 0.0) {
        fail(ErrorKind::clearance_violation, "basepoint coincides with the encircled point");
    }
    const double angle = std::arg(offset);
    const cplx entry = around + std::polar(radius, angle);
    PathSpec out = PathSpec::polyline({basepoint, entry});
    out = out.then(PathSpec::circle(around, radius, 1.0, angle));
    out = out.then(PathSpec::polyline({entry, basepoint}));
    return out;
}

MonodromyResult monodromy_2f1(const PfaffianSystem1D &s, cplx around, cplx basepoint,
                              const IntegratorControl &control)
{
    if (s.dimension != 2) {
        throw std::invalid_argument("monodromy_2f1 expects a two-dimensional system");
    }
    double nearest = std::numeric_limits<double>::infinity();
    bool found = false;
    for (const cplx &p : s.singular_points) {
        if (std::abs(p - around) <= locus_eps) {
            found = true;
        } else {
            nearest = std::min(nearest, std::abs(p - around));
        }
    }
    if (!found) {
        throw std::invalid_argument("monodromy_2f1: `around` is not a singular point of the system");
    }
    MonodromyResult r;
    r.loop = monodromy_loop(around, basepoint, 0.5 * nearest);
    const TransportResult t = transport(s, r.loop, Matrix::Identity(2, 2), control);
    const Eigen::Matrix2cd psi = legendre_basis(basepoint);
    r.matrix = psi.inverse() * t.value * psi;
    r.transport_error = t.error_estimate;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const cplx v = r.matrix(i, j);
            r.integrality_error =
                std::max(r.integrality_error, std::abs(v - std::round(v.real())));
        }
    }
    return r;
}

IntMatrix2 round_integral(const Eigen::Matrix2cd &m, double tol)
{
    IntMatrix2 out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const double r = std::round(m(i, j).real());
            if (std::abs(m(i, j) - r) > tol) {
                std::ostringstream os;
                os << "entry (" << i << ", " << j << ") = " << m(i, j) << " is not within " << tol
                   << " of an integer";
                fail(ErrorKind::non_integral, os.str());
            }
            out(i, j) = static_cast<long long>(r);
        }
    }
    return out;
}

bool gamma2_membership(const IntMatrix2 &m)
{
    const long long det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    auto odd = [](long long v) { return (v % 2 + 2) % 2 == 1; };
    return det == 1 && odd(m(0, 0)) && odd(m(1, 1)) && !odd(m(0, 1)) && !odd(m(1, 0));
}

bool gamma2_membership(const Eigen::Matrix2cd &m, double tol)
{
    return gamma2_membership(round_integral(m, tol));
}

} // namespace traintrack
